#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liecoh/branching.hpp"
#include "liecoh/homotopy.hpp"

using namespace liecoh;

namespace {

TypeOf type_of_degrees(std::initializer_list<int> d) {
  TypeOf t;
  t.odd_degrees = d;
  return t;
}

}  // namespace

TEST_CASE("rational homotopy of the spin10-e6 quotient") {
  LambdaRing src(GroupSpec::parse("E6"));
  LambdaRing tgt(GroupSpec::parse("Spin10"));
  auto kd = weight_kernel_dims(restriction_spin10_e6(), src, tgt);
  auto pi = homotopy_of_quotient(tgt.type_of(), src.type_of(), kd);
  GradedDims expect{{8, 1}, {17, 1}, {23, 1}};
  CHECK(pi == expect);
}

TEST_CASE("circle bundle correction") {
  // total space with a circle factor: drop it
  GradedDims n5{{1, 1}, {8, 1}, {17, 1}, {23, 1}};
  GradedDims base = sphere_bundle_correction(1, n5);
  CHECK(base == GradedDims{{8, 1}, {17, 1}, {23, 1}});

  // simply connected total space: the fibre class appears in degree 2
  GradedDims n{{8, 1}, {17, 1}, {23, 1}};
  base = sphere_bundle_correction(1, n);
  CHECK(base == GradedDims{{2, 1}, {8, 1}, {17, 1}, {23, 1}});
}

TEST_CASE("three sphere bundle correction") {
  GradedDims n{{8, 1}, {12, 1}, {23, 1}, {27, 1}, {35, 1}};
  auto base = sphere_bundle_correction(3, n);
  CHECK(base == GradedDims{{4, 1}, {8, 1}, {12, 1}, {23, 1}, {27, 1}, {35, 1}});

  GradedDims bad{{3, 1}, {8, 1}};
  CHECK_THROWS(sphere_bundle_correction(3, bad));
  CHECK_THROWS(sphere_bundle_correction(2, n));
}

TEST_CASE("elliptic profile of the 32 dimensional plane") {
  GradedDims pi{{2, 1}, {8, 1}, {17, 1}, {23, 1}};
  auto p = elliptic_profile(pi);
  CHECK(p.even_degrees == std::vector<int>{2, 8});
  CHECK(p.odd_degrees == std::vector<int>{17, 23});
  CHECK(p.euler == 27);
  CHECK(p.top_degree() == 32);
  // P(t) = (1 - t^18)(1 - t^24) / ((1 - t^2)(1 - t^8))
  Int sum = 0;
  for (auto& c : p.poincare) sum += c;
  CHECK(sum == 27);
  CHECK(p.poincare[0] == 1);
  CHECK(p.poincare[2] == 1);
  CHECK(p.poincare[16] == 3);
  CHECK(p.poincare[32] == 1);
  // Poincare duality
  for (size_t i = 0; i < p.poincare.size(); i++)
    CHECK(p.poincare[i] == p.poincare[p.poincare.size() - 1 - i]);
}

TEST_CASE("elliptic profile of the 64 dimensional plane") {
  GradedDims pi{{4, 1}, {8, 1}, {12, 1}, {23, 1}, {27, 1}, {35, 1}};
  auto p = elliptic_profile(pi);
  CHECK(p.euler == 63);
  CHECK(p.top_degree() == 64);
  for (size_t i = 0; i < p.poincare.size(); i++)
    CHECK(p.poincare[i] == p.poincare[p.poincare.size() - 1 - i]);
}

TEST_CASE("elliptic profile of the 128 dimensional plane") {
  GradedDims pi{{8, 1}, {12, 1}, {16, 1}, {20, 1}, {35, 1}, {39, 1}, {47, 1}, {59, 1}};
  auto p = elliptic_profile(pi);
  CHECK(p.euler == 135);
  CHECK(p.top_degree() == 128);
  for (size_t i = 0; i < p.poincare.size(); i++)
    CHECK(p.poincare[i] == p.poincare[p.poincare.size() - 1 - i]);
}

TEST_CASE("elliptic profile edge cases") {
  // even sphere S^2: pi_2 and pi_3
  auto s2 = elliptic_profile(GradedDims{{2, 1}, {3, 1}});
  CHECK(s2.euler == 2);
  CHECK(s2.poincare == std::vector<Int>{1, 0, 1});

  // unbalanced input (odd sphere alone)
  CHECK_THROWS(elliptic_profile(GradedDims{{3, 1}}));
}

TEST_CASE("quotient bookkeeping rejects inconsistent data") {
  auto tk = type_of_degrees({3, 7});
  auto tg = type_of_degrees({3, 11});
  // ker - coker must balance rank G - rank K = 0 here
  std::map<int, std::pair<int, int>> bad{{4, {1, 0}}};
  CHECK_THROWS(homotopy_of_quotient(tk, tg, bad));
  std::map<int, std::pair<int, int>> ok{{4, {1, 1}}};
  auto pi = homotopy_of_quotient(tk, tg, ok);
  CHECK(pi == GradedDims{{7, 1}, {8, 1}});
}
