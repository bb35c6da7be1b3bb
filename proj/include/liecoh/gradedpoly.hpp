#pragma once

#include "liecoh/numeric.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace liecoh {

// named graded generators of a free commutative Q-algebra
struct GenRing {
  std::vector<std::string> names;
  std::vector<int> degrees;

  int size() const { return static_cast<int>(names.size()); }
  int index(const std::string& n) const;
};

using GenRingPtr = std::shared_ptr<const GenRing>;

GenRingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees);

// polynomial with exact rational coefficients over a GenRing; monomials are
// exponent vectors parallel to the ring's generator list
struct GradedPoly {
  GenRingPtr ring;
  std::map<std::vector<int>, Rat> terms;

  static GradedPoly zero(GenRingPtr r) { return {std::move(r), {}}; }
  static GradedPoly constant(GenRingPtr r, const Rat& c);
  static GradedPoly generator(GenRingPtr r, int i, int power = 1);

  void add(const std::vector<int>& mono, const Rat& c);
  long mono_degree(const std::vector<int>& mono) const;

  bool is_zero() const { return terms.empty(); }
  // -1 when inhomogeneous, 0 for the zero polynomial
  long degree_if_homogeneous() const;
  GradedPoly homogeneous_part(long d) const;
  long max_degree() const;

  Rat coefficient(const std::vector<int>& mono) const;
  bool operator==(const GradedPoly& o) const { return terms == o.terms; }

  // ring homomorphism sending generator i to images[i]; terms above max_deg
  // are dropped (max_deg < 0 keeps everything)
  GradedPoly substitute(const std::vector<GradedPoly>& images, long max_deg = -1) const;

  std::string str() const;
};

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
GradedPoly operator-(const GradedPoly& a, const GradedPoly& b);
GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
GradedPoly operator*(const Rat& c, const GradedPoly& a);
GradedPoly mul_trunc(const GradedPoly& a, const GradedPoly& b, long max_deg);

// scale to integer coefficients with content 1, preserving sign
GradedPoly normalize_integral(const GradedPoly& p);

// all monomials of the given total degree, lexicographic in exponents
std::vector<std::vector<int>> monomials_of_degree(const GenRing& ring, long d);

}  // namespace liecoh
