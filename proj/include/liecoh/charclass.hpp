#pragma once

#include "liecoh/gradedpoly.hpp"

namespace liecoh {

// polynomial in Pontryagin classes p1..p_(n-1) (degree 4i) and the Euler
// class e (degree 2n); the ring is free, with p_n realized as e^2
using PEPoly = GradedPoly;

GenRingPtr pe_ring(int n);

// truncated symmetric function in the squared Chern roots z_i = x_i^2 of a
// rank 2n real bundle, in the form A + (e / 2^n) B where A and B are written
// over the power sums q_k = sum z_i^k (topological degree of q_k is 4k)
struct SymPoly {
  int n;
  long max_degree;  // topological truncation, everything above is dropped
  GradedPoly A;
  GradedPoly B;
};

SymPoly operator+(const SymPoly& a, const SymPoly& b);
SymPoly operator-(const SymPoly& a, const SymPoly& b);
SymPoly operator*(const SymPoly& a, const SymPoly& b);

// ch of the complexified vector bundle: sum_i (e^{x_i} + e^{-x_i})
SymPoly ch_vector(int n, long max_degree);

// ch of lambda^2 of the complexification
SymPoly ch_lambda2_vector(int n, long max_degree);

// ch of a half-spin bundle: sum of e^{(sum eps_i x_i)/2} over sign vectors
// with product eps_i = sign
SymPoly ch_spinor(int n, int sign, long max_degree);

// reduction to Pontryagin classes and the Euler class over pe_ring(n)
PEPoly to_pe(const SymPoly& s);

// inverse substitution p_i -> e_i(z), e^2 -> e_n(z); only valid for inputs
// with even powers of e, used by the round-trip checks
SymPoly pe_to_sym(const PEPoly& p, int n, long max_degree);

}  // namespace liecoh
