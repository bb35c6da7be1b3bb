#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liecoh/branching.hpp"
#include "liecoh/golden.hpp"

using namespace liecoh;

TEST_CASE("induced map for the rank five spin group inside E6") {
  LambdaRing src(GroupSpec::parse("E6"));
  LambdaRing tgt(GroupSpec::parse("Spin10"));
  auto m = restriction_spin10_e6();
  auto v = induced_v_matrix(m, src, tgt);
  auto want = golden::restriction("spin10-e6");
  REQUIRE(v.display.rows() == 5);
  REQUIRE(v.display.cols() == 6);
  for (int i = 0; i < 5; i++)
    for (int j = 0; j < 6; j++) CHECK(v.display(i, j) == Rat(want[i][j]));
  auto [rank, nullity, tnullity] = rank_nullity(v.fund);
  CHECK(rank == 4);
  CHECK(nullity == 2);
  CHECK(tnullity == 1);
}

TEST_CASE("restriction of the 27 dimensional representation is a ring map") {
  auto m = restriction_spin10_e6();
  // dimension is preserved generator by generator
  LambdaRing src(GroupSpec::parse("E6"));
  LambdaRing tgt(GroupSpec::parse("Spin10"));
  for (int j = 0; j < 6; j++) {
    Int dim = 0;
    for (auto& [e, c] : m.generator_images[j].terms) {
      Int t = c;
      for (size_t i = 0; i < e.size(); i++)
        for (long long k = 0; k < e[i]; k++) t *= tgt.generator_dim(static_cast<int>(i));
      dim += t;
    }
    CHECK(dim == src.generator_dim(j));
  }
}

TEST_CASE("weight kernels of the rank five inclusion") {
  LambdaRing src(GroupSpec::parse("E6"));
  LambdaRing tgt(GroupSpec::parse("Spin10"));
  auto kd = weight_kernel_dims(restriction_spin10_e6(), src, tgt);
  std::map<int, std::pair<int, int>> want{{4, {1, 0}}, {9, {0, 1}}, {12, {0, 1}}};
  CHECK(kd == want);
}

TEST_CASE("induced map for the rank six spin group inside E7") {
  LambdaRing src(GroupSpec::parse("E7"));
  LambdaRing tgt(GroupSpec::parse("Spin12"));
  auto m = restriction_spin12_e7();
  auto v = induced_v_matrix(m, src, tgt);
  auto want = golden::restriction("spin12-e7");
  REQUIRE(v.display.rows() == 6);
  REQUIRE(v.display.cols() == 7);
  for (int i = 0; i < 6; i++)
    for (int j = 0; j < 7; j++) CHECK(v.display(i, j) == Rat(want[i][j]));
  auto [rank, nullity, tnullity] = rank_nullity(v.fund);
  CHECK(rank == 4);
  CHECK(tnullity == 2);
}
