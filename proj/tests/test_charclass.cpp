#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liecoh/charclass.hpp"

using namespace liecoh;

namespace {

// monomial over pe_ring(8): p1..p7, e
std::vector<int> m8(std::initializer_list<std::pair<int, int>> exps) {
  std::vector<int> m(8, 0);
  for (auto& [i, a] : exps) m[i] = a;
  return m;
}

}  // namespace

TEST_CASE("chern character of the complexified vector bundle") {
  auto v = to_pe(ch_vector(8, 16));
  CHECK(v.coefficient(m8({})) == 16);
  CHECK(v.homogeneous_part(2).is_zero());
  CHECK(v.coefficient(m8({{0, 1}})) == 1);  // ch_2 = p_1
  auto v5 = to_pe(ch_vector(5, 12));
  CHECK(v5.coefficient(std::vector<int>(5, 0)) == 10);
}

TEST_CASE("chern character of the half spin bundle of Spin(16)") {
  auto s = to_pe(ch_spinor(8, +1, 16));
  CHECK(s.coefficient(m8({})) == 128);
  CHECK(s.coefficient(m8({{0, 1}})) == 16);
  CHECK(s.coefficient(m8({{0, 2}})) == Rat(1, 3));
  CHECK(s.coefficient(m8({{1, 1}})) == Rat(4, 3));
  CHECK(s.coefficient(m8({{0, 3}})) == Rat(1, 360));
  CHECK(s.coefficient(m8({{0, 1}, {1, 1}})) == Rat(1, 30));
  CHECK(s.coefficient(m8({{2, 1}})) == Rat(2, 15));
  CHECK(s.coefficient(m8({{0, 4}})) == Rat(1, 80640));
  CHECK(s.coefficient(m8({{0, 2}, {1, 1}})) == Rat(1, 3360));
  CHECK(s.coefficient(m8({{0, 1}, {2, 1}})) == Rat(1, 315));
  CHECK(s.coefficient(m8({{1, 2}})) == Rat(1, 5040));
  CHECK(s.coefficient(m8({{3, 1}})) == Rat(17, 1260));
  CHECK(s.coefficient(m8({{7, 1}})) == Rat(1, 2));
}

TEST_CASE("chern character of the second exterior power for Spin(16)") {
  auto s = to_pe(ch_lambda2_vector(8, 16));
  CHECK(s.coefficient(m8({})) == 120);
  CHECK(s.coefficient(m8({{0, 1}})) == 14);
  CHECK(s.coefficient(m8({{0, 2}})) == Rat(7, 6));
  CHECK(s.coefficient(m8({{1, 1}})) == Rat(-4, 3));
  CHECK(s.coefficient(m8({{0, 3}})) == Rat(7, 180));
  CHECK(s.coefficient(m8({{0, 1}, {1, 1}})) == Rat(-1, 30));
  CHECK(s.coefficient(m8({{2, 1}})) == Rat(-2, 15));
  CHECK(s.coefficient(m8({{0, 4}})) == Rat(1, 1440));
  CHECK(s.coefficient(m8({{0, 2}, {1, 1}})) == 0);
  CHECK(s.coefficient(m8({{0, 1}, {2, 1}})) == Rat(-1, 72));
  CHECK(s.coefficient(m8({{1, 2}})) == Rat(1, 360));
  CHECK(s.coefficient(m8({{3, 1}})) == Rat(1, 45));
  CHECK(s.coefficient(m8({{7, 1}})) == 0);
}

TEST_CASE("spinor sum has no euler term") {
  for (int n : {3, 4, 5}) {
    auto sum = ch_spinor(n, +1, 4 * n) + ch_spinor(n, -1, 4 * n);
    CHECK(sum.B.is_zero());
    auto pe = to_pe(sum);
    for (auto& [m, c] : pe.terms) CHECK(m[n - 1] % 2 == 0);
  }
}

TEST_CASE("chern character is multiplicative") {
  for (int n : {3, 4}) {
    long D = 4 * n + 8;
    auto a = ch_vector(n, D);
    auto b = ch_spinor(n, +1, D);
    CHECK(to_pe(a * b) == mul_trunc(to_pe(a), to_pe(b), D));
  }
}

TEST_CASE("round trip between root variables and characteristic classes") {
  for (int n : {3, 4}) {
    long D = 4 * n + 8;
    auto pe = pe_ring(n);
    // a handful of monomials including odd and even euler powers
    std::vector<PEPoly> samples;
    samples.push_back(GradedPoly::generator(pe, 0, 2) + Rat(3, 7) * GradedPoly::generator(pe, 1));
    samples.push_back(GradedPoly::generator(pe, n - 1) * GradedPoly::generator(pe, 0));
    samples.push_back(GradedPoly::generator(pe, n - 1, 2) - GradedPoly::generator(pe, 1));
    for (auto& s : samples) {
      if (s.max_degree() > D) continue;
      CHECK(to_pe(pe_to_sym(s, n, D)) == s);
    }
  }
}

TEST_CASE("dimension counts match the virtual ranks") {
  // constant terms are the complex dimensions of the bundles
  CHECK(to_pe(ch_lambda2_vector(6, 8)).coefficient(std::vector<int>(6, 0)) == 66);
  CHECK(to_pe(ch_spinor(6, +1, 8)).coefficient(std::vector<int>(6, 0)) == 32);
  CHECK(to_pe(ch_spinor(5, -1, 8)).coefficient(std::vector<int>(5, 0)) == 16);
}
