#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liecoh/lambda_ring.hpp"

using namespace liecoh;

TEST_CASE("s_reduce constants and product rule") {
  LambdaRing f4(GroupSpec::parse("F4"));
  FundPoly c{f4.group(), {}};
  c.add({0, 0, 0, 0}, 7);
  auto s = f4.s_reduce(c);
  CHECK(s.constant == 7);
  for (auto& l : s.linear) CHECK(l == 0);

  // [w1 w4] = 26 [w1] + 52 [w4] - 1352
  FundPoly p{f4.group(), {}};
  p.add({1, 0, 0, 1}, 1);
  auto sp = f4.s_reduce(p);
  CHECK(sp.constant == -1352);
  CHECK(sp.linear == std::vector<Int>{26, 0, 0, 52});
}

TEST_CASE("F4 lambda powers of w4 in fundamental generators") {
  LambdaRing f4(GroupSpec::parse("F4"));
  auto w4 = f4.ctx().irreducible({0, 0, 0, 1});
  auto pows = f4.ctx().lambda_powers(w4, 4);

  auto p3 = f4.to_fund_poly(pows[3]);
  FundPoly expect3{f4.group(), {}};
  expect3.add({1, 0, 0, 1}, 1);   // w1 w4
  expect3.add({0, 1, 0, 0}, 1);   // + w2
  expect3.add({0, 0, 0, 1}, -1);  // - w4
  CHECK(p3 == expect3);

  auto p4 = f4.to_fund_poly(pows[4]);
  FundPoly expect4{f4.group(), {}};
  expect4.add({2, 0, 0, 0}, 1);   // w1^2
  expect4.add({1, 0, 1, 0}, 1);   // + w1 w3
  expect4.add({0, 1, 0, 0}, -1);  // - w2
  expect4.add({0, 0, 0, 2}, -1);  // - w4^2
  CHECK(p4 == expect4);

  // round trip through evaluation
  CHECK(f4.evaluate(p3) == pows[3]);
  CHECK(f4.evaluate(p4) == pows[4]);

  // S-class reductions printed for these powers
  auto s3 = f4.s_reduce(p3);
  CHECK(s3.constant == -1352);
  CHECK(s3.linear == std::vector<Int>{26, 1, 0, 51});
  CHECK(f4.s_class(pows[3]) == s3);

  auto s4 = f4.s_reduce(p4);
  CHECK(s4.constant == -16224);
  CHECK(s4.linear == std::vector<Int>{377, -1, 52, -52});
  CHECK(f4.s_class(pows[4]) == s4);
}

TEST_CASE("F4 cyclic matrix and determinant") {
  LambdaRing f4(GroupSpec::parse("F4"));
  auto [m, det] = f4.cyclic_matrix(f4.minimal_rep());
  long long expect[4][4] = {
      {0, 1, 26, 377}, {0, 0, 1, -1}, {0, 1, 0, 52}, {1, 0, 51, -52}};
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) CHECK(m(i, j) == static_cast<long>(expect[i][j]));
  CHECK(det == 351);
}

TEST_CASE("SU2 cyclic matrix is nonzero") {
  LambdaRing a1(GroupSpec::parse("SU2"));
  auto [m, det] = a1.cyclic_matrix(a1.minimal_rep());
  CHECK(m.rows() == 1);
  CHECK(det != 0);
}

TEST_CASE("adams matrix basics") {
  LambdaRing a1(GroupSpec::parse("A1"));
  auto m1 = a1.adams_matrix_on_V(1);
  CHECK(m1 == RatMat::identity(1));
  auto m2 = a1.adams_matrix_on_V(2);
  CHECK(m2(0, 0) == 4);  // psi^2 [w1] = 4 [w1] mod constants
}

TEST_CASE("adams matrix functoriality M2 M3 = M6") {
  for (const char* g : {"F4", "G2", "A2"}) {
    LambdaRing lr(GroupSpec::parse(g));
    CHECK(lr.adams_matrix_on_V(2) * lr.adams_matrix_on_V(3) == lr.adams_matrix_on_V(6));
  }
}

TEST_CASE("types of small groups") {
  CHECK(LambdaRing(GroupSpec::parse("SU2")).type_of().odd_degrees == std::vector<int>{3});
  CHECK(LambdaRing(GroupSpec::parse("G2")).type_of().odd_degrees == std::vector<int>{3, 11});
  CHECK(LambdaRing(GroupSpec::parse("SU4")).type_of().odd_degrees ==
        std::vector<int>{3, 5, 7});
  CHECK(LambdaRing(GroupSpec::parse("Spin10")).type_of().odd_degrees ==
        std::vector<int>{3, 7, 9, 11, 15});
  CHECK(LambdaRing(GroupSpec::parse("A1xT1")).type_of().odd_degrees ==
        std::vector<int>{1, 3});
}

TEST_CASE("type entries sum to the group dimension") {
  for (const char* g : {"G2", "F4", "Spin10", "SU4"}) {
    LambdaRing lr(GroupSpec::parse(g));
    long long sum = 0;
    for (int t : lr.type_of().odd_degrees) sum += t;
    CHECK(sum == lr.ctx().rs().dim_group());
  }
}

TEST_CASE("exterior model weights and graded psi-ring axioms") {
  LambdaRing spin10(GroupSpec::parse("Spin10"));
  auto em = spin10.exterior_model();
  CHECK(em.weights == std::vector<int>{2, 4, 5, 6, 8});

  LambdaRing su2(GroupSpec::parse("SU2"));
  CHECK(su2.exterior_model().weights == std::vector<int>{2});

  // axiom samples on monomials: psi^k(xy) = k phi^k(x) phi^k(y) for odd x, y
  // and phi^k(xy) = psi^k(x) phi^k(y) for even x, odd y, as exponents
  for (int i = 0; i < 5; i++)
    for (int j = 0; j < 5; j++) {
      if (i == j) continue;
      long lhs = em.eigen_exponent({i, j});
      long rhs = 1 + em.eigen_exponent({i}) + em.eigen_exponent({j});
      CHECK(lhs == rhs);
    }
  long lhs = em.eigen_exponent({0, 1, 2});
  long rhs = em.eigen_exponent({0, 1}) + em.eigen_exponent({2});
  CHECK(lhs == rhs);
}
