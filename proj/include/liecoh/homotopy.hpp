#pragma once

#include "liecoh/lambda_ring.hpp"

#include <map>

namespace liecoh {

// degree -> dimension of pi_degree tensor Q, zero entries absent
using GradedDims = std::map<int, int>;

struct EllipticProfile {
  std::vector<int> even_degrees;  // 2n_i, sorted
  std::vector<int> odd_degrees;   // 2m_i - 1, sorted
  std::vector<Int> poincare;      // coefficients of P(t), index = degree
  Int euler;

  int top_degree() const { return static_cast<int>(poincare.size()) - 1; }
};

// four-term exact sequence bookkeeping: pi_2r(G/K) = kernel at weight r,
// pi_(2r-1)(G/K) = cokernel at weight r of the dual induced map
GradedDims homotopy_of_quotient(const TypeOf& type_k, const TypeOf& type_g,
                                const std::map<int, std::pair<int, int>>& kernel_dims);

// S^1 or S^3 bundle N -> base: convert pi(N) into pi(base)
GradedDims sphere_bundle_correction(int fiber_dim, const GradedDims& total);

EllipticProfile elliptic_profile(const GradedDims& dims);

// full pipeline for one of R5, R6, R7, N5, N6: branch the relevant spin
// group into its exceptional overgroup, run the exact-sequence bookkeeping,
// then undo the sphere fibration for the R spaces
GradedDims space_homotopy(const std::string& space, const std::string& cache_dir = "");

}  // namespace liecoh
