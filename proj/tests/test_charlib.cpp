#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liecoh/charlib.hpp"

#include <random>

using namespace liecoh;

static VirtualRep vr(CharContext& cx, std::map<Weight, Int> e) {
  VirtualRep v{cx.group(), std::move(e)};
  return v;
}

TEST_CASE("weyl dimensions of fundamentals") {
  CharContext f4(GroupSpec::parse("F4"));
  CHECK(f4.weyl_dim({1, 0, 0, 0}) == 52);
  CHECK(f4.weyl_dim({0, 1, 0, 0}) == 1274);
  CHECK(f4.weyl_dim({0, 0, 1, 0}) == 273);
  CHECK(f4.weyl_dim({0, 0, 0, 1}) == 26);
  CHECK(f4.weyl_dim({0, 0, 0, 0}) == 1);

  CharContext e6(GroupSpec::parse("E6"));
  CHECK(e6.weyl_dim({1, 0, 0, 0, 0, 0}) == 27);
  CHECK(e6.weyl_dim({0, 1, 0, 0, 0, 0}) == 78);

  CharContext e7(GroupSpec::parse("E7"));
  CHECK(e7.weyl_dim({0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(e7.weyl_dim({1, 0, 0, 0, 0, 0, 0}) == 133);

  CharContext e8(GroupSpec::parse("E8"));
  CHECK(e8.weyl_dim({0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(e8.weyl_dim({1, 0, 0, 0, 0, 0, 0, 0}) == 3875);

  CharContext g2(GroupSpec::parse("G2"));
  CHECK(g2.weyl_dim({1, 0}) == 7);
  CHECK(g2.weyl_dim({0, 1}) == 14);

  CharContext d5(GroupSpec::parse("D5"));
  CHECK(d5.weyl_dim({1, 0, 0, 0, 0}) == 10);
  CHECK(d5.weyl_dim({0, 0, 0, 1, 0}) == 16);
  CHECK(d5.weyl_dim({0, 0, 0, 0, 1}) == 16);
}

TEST_CASE("dominant characters of small reps") {
  CharContext a1(GroupSpec::parse("A1"));
  auto adj = a1.dominant_character({2});
  CHECK(adj.size() == 2);
  CHECK(adj.at({2}) == 1);
  CHECK(adj.at({0}) == 1);

  CharContext g2(GroupSpec::parse("G2"));
  auto v7 = g2.dominant_character({1, 0});
  CHECK(v7.size() == 2);
  CHECK(v7.at({1, 0}) == 1);
  CHECK(v7.at({0, 0}) == 1);
}

TEST_CASE("Freudenthal totals match Weyl dimensions") {
  for (const char* g : {"G2", "F4", "D5", "D6", "E6"}) {
    CharContext cx(GroupSpec::parse(g));
    int r = cx.rs().rank();
    for (int i = 0; i < r; i++) {
      Weight w(r, 0);
      w[i] = 1;
      Int total = 0;
      for (auto& [mu, m] : cx.dominant_character(w)) total += m * cx.rs().orbit_size(mu);
      CHECK(total == cx.weyl_dim(w));
    }
  }
}

TEST_CASE("decompose round trips and Clebsch-Gordan") {
  CharContext a1(GroupSpec::parse("A1"));
  auto two = vr(a1, {{{1}, 1}});
  auto prod = a1.tensor(two, two);
  CHECK(prod == vr(a1, {{{2}, 1}, {{0}, 1}}));

  auto chi = a1.full_character(prod);
  CHECK(a1.decompose(chi) == prod);

  // tensor with trivial is the identity
  auto triv = vr(a1, {{{0}, 1}});
  CHECK(a1.tensor(prod, triv) == prod);
}

TEST_CASE("G2 lambda^2 of the 7-dim rep") {
  CharContext g2(GroupSpec::parse("G2"));
  auto v = vr(g2, {{{1, 0}, 1}});
  auto l2 = g2.lambda_k(2, v);
  CHECK(l2 == vr(g2, {{{1, 0}, 1}, {{0, 1}, 1}}));  // v + a

  // psi^2(v) = v^2 - 2 lambda^2(v)
  auto psi2 = g2.adams(2, v);
  auto v2 = g2.tensor(v, v);
  VirtualRep expect{g2.group(), {}};
  expect += v2;
  for (auto& [w, m] : l2.entries) expect.add(w, -2 * m);
  CHECK(psi2 == expect);
}

TEST_CASE("F4 lambda powers of w4") {
  CharContext f4(GroupSpec::parse("F4"));
  auto w4 = vr(f4, {{{0, 0, 0, 1}, 1}});
  auto pw = f4.lambda_powers(w4, 4);
  CHECK(pw[1] == w4);
  CHECK(pw[2] == vr(f4, {{{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, 1}}));  // w1 + w3
  CHECK(f4.dim(pw[3]) == binomial(26, 3));
  CHECK(f4.dim(pw[4]) == binomial(26, 4));
  CHECK(pw[3] == f4.lambda_k(3, w4));
}

TEST_CASE("adams operations compose and are additive") {
  std::mt19937 rng(20240817);
  for (const char* g : {"A1", "A2", "G2"}) {
    CharContext cx(GroupSpec::parse(g));
    int r = cx.rs().rank();
    for (int trial = 0; trial < 6; trial++) {
      VirtualRep x{cx.group(), {}};
      for (int t = 0; t < 2; t++) {
        Weight w(r);
        for (auto& c : w) c = rng() % 3;
        x.add(w, static_cast<long>(rng() % 5) - 2);
      }
      auto p23 = cx.adams(2, cx.adams(3, x));
      auto p32 = cx.adams(3, cx.adams(2, x));
      auto p6 = cx.adams(6, x);
      CHECK(p23 == p6);
      CHECK(p32 == p6);
    }
  }
}

TEST_CASE("adams is a ring homomorphism on samples") {
  CharContext a2(GroupSpec::parse("A2"));
  auto x = vr(a2, {{{1, 0}, 1}, {{0, 0}, -1}});
  auto y = vr(a2, {{{0, 1}, 1}, {{1, 1}, 1}});
  VirtualRep sum{a2.group(), {}};
  sum += x;
  sum += y;
  CHECK(a2.adams(2, sum) == [&] {
    VirtualRep s{a2.group(), {}};
    s += a2.adams(2, x);
    s += a2.adams(2, y);
    return s;
  }());
  CHECK(a2.adams(2, a2.tensor(x, y)) == a2.tensor(a2.adams(2, x), a2.adams(2, y)));
}

TEST_CASE("lambda dimension law") {
  CharContext d8(GroupSpec::parse("D8"));
  auto v16 = vr(d8, {{{1, 0, 0, 0, 0, 0, 0, 0}, 1}});
  auto l2 = d8.lambda_k(2, v16);
  CHECK(d8.dim(l2) == 120);

  CharContext a2(GroupSpec::parse("A2"));
  auto adj = vr(a2, {{{1, 1}, 1}});
  for (int k = 1; k <= 4; k++) CHECK(a2.dim(a2.lambda_k(k, adj)) == binomial(8, k));
}

TEST_CASE("lambda of trivial sums uses the binomial rule") {
  CharContext a1(GroupSpec::parse("A1"));
  auto triv4 = vr(a1, {{{0}, 4}});
  auto l2 = a1.lambda_k(2, triv4);
  CHECK(l2 == vr(a1, {{{0}, 6}}));
}
