#pragma once

#include "liecoh/gradedpoly.hpp"

#include <string>
#include <vector>

namespace liecoh::golden {

// published reference values used by the verify command and the test suite

struct CyclicGolden {
  std::vector<std::vector<Int>> matrix;  // empty for the cases published without one
  Int det;
};

// group is F4, E6, E7 or E8
CyclicGolden cyclic(const std::string& group);

// pair is spin10-e6, spin12-e7 or spin16-e8; entries in published column order
std::vector<std::vector<Int>> restriction(const std::string& pair);

// published type list; the Spin12 entry is known to carry one extra value
std::vector<int> group_type(const std::string& group);
bool group_type_flagged(const std::string& group);

// degrees with a rational homotopy contribution; space is R5, R6, R7, N5, N6
std::vector<int> homotopy_degrees(const std::string& space);

struct NamedPoly {
  std::string name;
  GradedPoly poly;
};

// presentation ring of the plane (R5, R6, R7)
GenRingPtr plane_ring(const std::string& space);

// published relations, with degree-inconsistent monomials replaced by the
// unique reading of the correct degree; coefficients as published
std::vector<NamedPoly> plane_relations(const std::string& space);

// notes describing each published monomial that needed such a correction
std::vector<std::string> plane_discrepancies(const std::string& space);

// published images of the dependent classifying-space generators (R7 only)
std::vector<NamedPoly> plane_images(const std::string& space);

// published chern character expansions through degree 16 over the
// Pontryagin-Euler ring of a rank 16 bundle; which is "spinor16" or
// "lambda2-16"
GradedPoly published_ch(const std::string& which);

// two graded polynomials agree as relations when they differ by a sign
bool same_relation(const GradedPoly& a, const GradedPoly& b);

}  // namespace liecoh::golden
