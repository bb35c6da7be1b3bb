#pragma once

#include "liecoh/gradedpoly.hpp"
#include "liecoh/homotopy.hpp"

#include <string>
#include <utility>
#include <vector>

namespace liecoh {

struct Presentation {
  GenRingPtr ring;                    // free generators of the quotient
  std::vector<GradedPoly> relations;  // integer coefficients, content 1

  // images of the dependent classifying-space generators under the quotient
  // map, in the order they were solved
  std::vector<std::pair<std::string, GradedPoly>> solved;

  std::vector<std::string> notes;  // which chern component produced what
};

// H*(G_k(C^n); Q) with generators ch_1..ch_k of the tautological bundle and
// k relations obtained by eliminating the complementary bundle's classes
Presentation grassmannian_presentation(int k, int n);

// which is R5, R6 or R7
Presentation rosenfeld_presentation(const std::string& which);

struct HilbertReport {
  bool pass;
  long first_mismatch;        // -1 when pass
  std::vector<Int> computed;  // quotient dimension per degree, 0..top
  Int total;
};

// degreewise dimension count of ring/(relations) against the expected
// Poincare polynomial; equality certifies the relations form a regular
// sequence by the elliptic dimension count
HilbertReport hilbert_check(const Presentation& p, const EllipticProfile& expected);

}  // namespace liecoh
