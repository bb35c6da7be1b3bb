#pragma once

#include "liecoh/charlib.hpp"
#include "liecoh/matrix.hpp"

#include <map>
#include <utility>
#include <vector>

namespace liecoh {

// element of R(G) as a polynomial in the fundamental generators (one generator
// per coordinate: fundamental rep on simple coordinates, standard character on
// torus coordinates, where negative exponents are allowed)
struct FundPoly {
  GroupSpec group;
  std::map<std::vector<long long>, Int> terms;

  void add(const std::vector<long long>& e, const Int& c) {
    if (c == 0) return;
    auto it = terms.emplace(e, 0).first;
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  bool operator==(const FundPoly& o) const {
    return group == o.group && terms == o.terms;
  }
};

inline FundPoly operator+(const FundPoly& a, const FundPoly& b) {
  FundPoly r = a;
  for (auto& [e, c] : b.terms) r.add(e, c);
  return r;
}

inline FundPoly operator*(const FundPoly& a, const FundPoly& b) {
  FundPoly r{a.group, {}};
  for (auto& [ea, ca] : a.terms)
    for (auto& [eb, cb] : b.terms) {
      auto e = ea;
      for (size_t i = 0; i < e.size(); i++) e[i] += eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

// image in S(G) = R(G)/I^2: constant + integer combination of the generator
// classes [w_i]; the augmentation is constant + sum a_i dim(w_i)
struct SClass {
  Int constant;
  std::vector<Int> linear;

  bool operator==(const SClass&) const = default;
};

struct TypeOf {
  std::vector<int> odd_degrees;  // sorted 2r_i - 1

  bool operator==(const TypeOf&) const = default;
};

// exterior algebra model of K*(G) tensor Q: generators beta_i of odd degree
// 2r_i - 1 with phi^k(beta_i) = k^(r_i - 1) beta_i
struct ExteriorModel {
  std::vector<int> weights;  // r_i per generator

  // psi^k (|S| even) or phi^k (|S| odd) eigenvalue exponent of the monomial
  // prod_{i in S} beta_i: sum r_i - ceil(|S|/2) for odd, - |S|/2 for even
  long eigen_exponent(const std::vector<int>& subset) const {
    long s = 0;
    for (int i : subset) s += weights[i];
    long n = static_cast<long>(subset.size());
    return s - (n + 1) / 2;
  }
};

class LambdaRing {
 public:
  explicit LambdaRing(GroupSpec g) : cx_(std::move(g)) {}

  CharContext& ctx() { return cx_; }
  const GroupSpec& group() const { return cx_.group(); }
  int rank() const { return cx_.rs().rank(); }

  FundPoly to_fund_poly(const VirtualRep& x);
  VirtualRep evaluate(const FundPoly& p);

  SClass s_reduce(const FundPoly& p);
  SClass s_class(const VirtualRep& x);  // same image, computed without the full polynomial
  std::vector<Rat> v_class(const SClass& s) const;

  RatMat adams_matrix_on_V(long k);
  TypeOf type_of();
  std::pair<RatMat, Int> cyclic_matrix(const VirtualRep& u);
  ExteriorModel exterior_model();

  // generator of V(G) tensor Q used by the cyclic test: the minimal
  // (faithful irreducible of least dimension) fundamental representation
  VirtualRep minimal_rep();

  // dimension of the generator attached to coordinate i
  Int generator_dim(int i) const;

 private:
  CharContext cx_;
  std::map<Weight, FundPoly> poly_memo_;
  std::map<Weight, SClass> s_memo_;

  SClass s_of_weight(const Weight& lam);
  SClass s_generator(int coord, bool inverse) const;
};

}  // namespace liecoh
