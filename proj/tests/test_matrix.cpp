#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liecoh/matrix.hpp"

using namespace liecoh;

static RatMat from_rows(std::vector<std::vector<long>> rows) {
  RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); i++)
    for (size_t j = 0; j < rows[i].size(); j++) m(int(i), int(j)) = rows[i][j];
  return m;
}

TEST_CASE("det and rank") {
  auto m = from_rows({{2, 1}, {1, 1}});
  CHECK(m.det() == 1);
  CHECK(m.rank() == 2);

  auto s = from_rows({{1, 2}, {2, 4}});
  CHECK(s.det() == 0);
  CHECK(s.rank() == 1);
  CHECK(s.nullspace().size() == 1);
}

TEST_CASE("inverse round trip") {
  auto m = from_rows({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}});
  auto inv = m.inverse();
  CHECK(m * inv == RatMat::identity(3));
}

TEST_CASE("charpoly of diagonalizable matrix") {
  auto m = from_rows({{2, 0}, {0, 8}});
  auto c = m.charpoly();  // x^2 - 10x + 16
  REQUIRE(c.size() == 3);
  CHECK(c[2] == 1);
  CHECK(c[1] == -10);
  CHECK(c[0] == 16);
}

TEST_CASE("solve_linear") {
  auto m = from_rows({{1, 1}, {1, -1}});
  auto x = solve_linear(m, {Rat(4), Rat(2)});
  CHECK(x[0] == 3);
  CHECK(x[1] == 1);
}

TEST_CASE("nullspace vectors are in the kernel") {
  auto m = from_rows({{1, 2, 3}, {2, 4, 6}});
  auto ns = m.nullspace();
  REQUIRE(ns.size() == 2);
  for (auto& v : ns)
    for (int i = 0; i < m.rows(); i++) {
      Rat s = 0;
      for (int j = 0; j < m.cols(); j++) s += m(i, j) * v[j];
      CHECK(s == 0);
    }
}
