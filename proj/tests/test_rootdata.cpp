#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liecoh/rootdata.hpp"

using namespace liecoh;

TEST_CASE("group spec parsing") {
  CHECK(GroupSpec::parse("E8").name() == "E8");
  CHECK(GroupSpec::parse("e8").name() == "E8");
  CHECK(GroupSpec::parse("D6xA1").name() == "D6xA1");
  CHECK(GroupSpec::parse("D5xT1").name() == "D5xT1");
  CHECK(GroupSpec::parse("Spin10").name() == "D5");
  CHECK(GroupSpec::parse("Spin11").name() == "B5");
  CHECK(GroupSpec::parse("HSpin16").name() == "D8");
  CHECK(GroupSpec::parse("HSpin16").annotation == "hspin");
  CHECK(GroupSpec::parse("SU2").name() == "A1");
  CHECK(GroupSpec::parse("Sp3").name() == "C3");
  CHECK(GroupSpec::parse("D5xT1").rank() == 6);
  CHECK_THROWS(GroupSpec::parse("E9"));
  CHECK_THROWS(GroupSpec::parse("Q5"));
}

TEST_CASE("positive root counts") {
  CHECK(RootSystem(GroupSpec::parse("E8")).positive_roots().size() == 120);
  CHECK(RootSystem(GroupSpec::parse("F4")).positive_roots().size() == 24);
  CHECK(RootSystem(GroupSpec::parse("G2")).positive_roots().size() == 6);
  CHECK(RootSystem(GroupSpec::parse("E6")).positive_roots().size() == 36);
  CHECK(RootSystem(GroupSpec::parse("E7")).positive_roots().size() == 63);
  CHECK(RootSystem(GroupSpec::parse("D5")).positive_roots().size() == 20);
  CHECK(RootSystem(GroupSpec::parse("B4")).positive_roots().size() == 16);
  CHECK(RootSystem(GroupSpec::parse("C4")).positive_roots().size() == 16);
  CHECK(RootSystem(GroupSpec::parse("A3")).positive_roots().size() == 6);
  CHECK(RootSystem(GroupSpec::parse("A1xT1")).positive_roots().size() == 1);
  CHECK(RootSystem(GroupSpec::parse("A1xT1")).rank() == 2);
}

TEST_CASE("group dimensions") {
  CHECK(RootSystem(GroupSpec::parse("E8")).dim_group() == 248);
  CHECK(RootSystem(GroupSpec::parse("E7")).dim_group() == 133);
  CHECK(RootSystem(GroupSpec::parse("E6")).dim_group() == 78);
  CHECK(RootSystem(GroupSpec::parse("F4")).dim_group() == 52);
  CHECK(RootSystem(GroupSpec::parse("D6")).dim_group() == 66);
}

TEST_CASE("weyl group orders") {
  CHECK(RootSystem(GroupSpec::parse("A2")).weyl_order() == 6);
  CHECK(RootSystem(GroupSpec::parse("G2")).weyl_order() == 12);
  CHECK(RootSystem(GroupSpec::parse("F4")).weyl_order() == 1152);
  CHECK(RootSystem(GroupSpec::parse("E6")).weyl_order() == 51840);
  CHECK(RootSystem(GroupSpec::parse("E8")).weyl_order() == Int("696729600"));
  CHECK(RootSystem(GroupSpec::parse("D4")).weyl_order() == 192);
  CHECK(RootSystem(GroupSpec::parse("B5")).weyl_order() == 3840);
}

TEST_CASE("positive roots are nonnegative simple combinations") {
  for (const char* g : {"F4", "G2", "E6", "D5", "B3", "C3"}) {
    RootSystem rs(GroupSpec::parse(g));
    for (auto& a : rs.positive_roots_alpha())
      for (auto v : a) CHECK(v >= 0);
  }
}

TEST_CASE("dominant representative basics") {
  RootSystem a1(GroupSpec::parse("A1"));
  auto [w, s] = a1.dominant_representative({-2});
  CHECK(w == Weight{2});
  CHECK(s == -1);
  auto [w0, s0] = a1.dominant_representative({0});
  CHECK(w0 == Weight{0});
  CHECK(s0 == 0);

  RootSystem a2(GroupSpec::parse("A2"));
  // rho-shifted wall weight: fixed by a reflection
  auto [ww, sw] = a2.dominant_representative({3, 0});
  CHECK(sw == 0);
  (void)ww;
}

TEST_CASE("dominant representative is idempotent and orbit-consistent") {
  RootSystem rs(GroupSpec::parse("F4"));
  Weight w = {1, 1, 2, 1};  // strictly dominant, so every conjugate has sign != 0
  for (auto& v : rs.weyl_orbit(w)) {
    auto [d, s] = rs.dominant_representative(v);
    CHECK(d == w);
    CHECK(s != 0);
  }
  Weight wall = {1, 0, 2, 1};
  for (auto& v : rs.weyl_orbit(wall)) CHECK(rs.dominant_representative(v).first == wall);
}

TEST_CASE("orbit sizes") {
  RootSystem a1(GroupSpec::parse("A1"));
  CHECK(a1.weyl_orbit({2}).size() == 2);

  RootSystem d4(GroupSpec::parse("D4"));
  CHECK(d4.weyl_orbit({1, 0, 0, 0}).size() == 8);

  RootSystem e8(GroupSpec::parse("E8"));
  Weight adj = {0, 0, 0, 0, 0, 0, 0, 1};
  CHECK(e8.orbit_size(adj) == 240);
  CHECK(e8.weyl_orbit(adj).size() == 240);
}

TEST_CASE("orbit_size matches explicit orbit on F4") {
  RootSystem rs(GroupSpec::parse("F4"));
  for (Weight w : {Weight{1, 0, 0, 0}, Weight{0, 0, 0, 1}, Weight{1, 0, 0, 1}}) {
    CHECK(Int(rs.weyl_orbit(w).size()) == rs.orbit_size(w));
  }
}

TEST_CASE("height functional positive on positive roots") {
  for (const char* g : {"F4", "G2", "E7", "B3", "D6xA1"}) {
    RootSystem rs(GroupSpec::parse(g));
    for (auto& r : rs.positive_roots()) CHECK(rs.height_functional(r) > 0);
  }
}
