#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace peakstab;

TEST_CASE("example suitable segments and bi-fans") {
  PolygonModel p = build_polygon(fixtures::example_quiver());
  CHECK(suitable_segments(p) == fixtures::segs({{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}}));
  CHECK(bi_fan({1, 2}, p) ==
        fixtures::segs({{1, 2}, {1, 5}, {1, 7}, {1, 6}, {1, 4}, {1, 3},
                        {0, 2}, {0, 5}, {0, 7}, {0, 6}, {0, 4}, {0, 3}}));
  CHECK(bi_fan({4, 5}, p) ==
        fixtures::segs({{4, 5}, {4, 7}, {4, 6}, {3, 5}, {3, 7}, {3, 6}, {1, 5}, {1, 7},
                        {1, 6}, {0, 5}, {0, 7}, {0, 6}, {2, 5}, {2, 7}, {2, 6}}));
  CHECK(bi_fan({6, 7}, p) == fixtures::segs({{6, 7}, {4, 7}, {3, 7}, {1, 7}, {0, 7}, {2, 7}, {5, 7}}));
}

TEST_CASE("example principal subchains and underline") {
  PolygonModel p = build_polygon(fixtures::example_quiver());
  auto pc = principal_subchains(p);
  CHECK(pc.C.empty());
  REQUIRE(pc.D.size() == 1);
  CHECK(pc.D[0] == std::vector<std::size_t>{3, 4});
  CHECK(underline_segments(p) == fixtures::segs({{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  CHECK(star_segments(p) == set_difference(overline_segments(p), underline_segments(p)));
}

TEST_CASE("example frozen and sp segments") {
  auto q = fixtures::example_quiver();
  auto f = fixtures::example_aliens();
  PolygonModel p = build_polygon(q);
  CHECK(frozen_segments(f.arrows[0], p) == fixtures::segs({{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}}));
  CHECK(frozen_segments(f.arrows[1], p) == fixtures::segs({{4, 6}, {4, 7}}));
  SegmentSet sp = sp_segments(q, f);
  CHECK(sp == fixtures::segs({{0, 2}, {0, 3}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {2, 5}, {2, 6},
                              {2, 7}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {5, 7}, {6, 7}}));
  std::size_t spCount = 0;
  for (const auto& [g, c] : classify_segments(q, f)) {
    CHECK(c.sp == contains(sp, g));
    CHECK(c.suitable == contains(suitable_segments(p), g));
    spCount += c.sp;
    if (c.sp) CHECK(c.frozenBy.empty());
  }
  CHECK(spCount == 15);
}

TEST_CASE("invalid alien sets are rejected") {
  auto q = fixtures::example_quiver();
  CHECK_THROWS_AS(sp_segments(q, AlienSet{{{1, 7}}}), Error);
  PolygonModel p = build_polygon(q);
  CHECK_THROWS_AS(frozen_segments({1, 7}, p), Error);
}

TEST_CASE("functor Omega on the example") {
  auto q = fixtures::example_quiver();
  auto f = fixtures::example_aliens();
  auto poset = std::make_shared<const Poset>(poset_of_quiver(q, f));
  std::multiset<PointSet> omega, algebraic;
  for (const auto& g : sp_segments(q, f)) omega.insert(functor_Omega(g, q, f, poset).support);
  for (const auto& u : enumerate_indecomposables(poset)) algebraic.insert(u.space.support);
  CHECK(omega == algebraic);
  CHECK(functor_Omega({2, 5}, q, f, poset).support == fixtures::pts(*poset, {"3", "4", "5"}));
  try {
    functor_Omega({1, 3}, q, f, poset);
    FAIL("expected NotSpSegment");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSpSegment);
  }
}

TEST_CASE("sp AR quiver of the example") {
  auto q = fixtures::example_quiver();
  auto f = fixtures::example_aliens();
  SpQuiver a = ar_quiver_sp(q, f);
  CHECK(a.nodes.size() == 15);
  CHECK(a.arrows.size() == 18);
  CHECK(a.meshes.size() == 4);
  std::set<std::pair<LineSegment, LineSegment>> arrows(a.arrows.begin(), a.arrows.end());
  CHECK(arrows.size() == a.arrows.size());
  for (const auto& [g, h] : a.arrows) {
    CHECK(contains(a.nodes, g));
    CHECK(contains(a.nodes, h));
    CHECK(((g.i == h.i) != (g.j == h.j)));
  }
  for (const auto& m : a.meshes) {
    CHECK(arrows.count({m.source, m.viaLeft}) == 1);
    CHECK(arrows.count({m.source, m.viaRight}) == 1);
    CHECK(arrows.count({m.viaLeft, m.target}) == 1);
    CHECK(arrows.count({m.viaRight, m.target}) == 1);
  }
}

TEST_CASE("star segments match socle projectivity") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& q : all_orientations(n)) {
      PolygonModel p = build_polygon(q);
      SegmentSet star = star_segments(p);
      for (const auto& g : p.all_segments()) {
        Interval iv = functor_F(g);
        CHECK(contains(star, g) == oracle::socle_projective(q, iv.start, iv.end));
      }
    }
}

TEST_CASE("frozen segments match the support reading") {
  for (std::size_t n = 3; n <= 7; ++n)
    for (const auto& [q, f] : oracle::quivers_with_aliens(n)) {
      PolygonModel p = build_polygon(q);
      for (const auto& a : f.arrows) {
        SegmentSet fr = frozen_segments(a, p);
        for (const auto& g : p.all_segments()) CHECK(contains(fr, g) == oracle::frozen_by(q, a, g));
      }
    }
}

TEST_CASE("Omega matches the algebraic enumeration") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& [q, f] : oracle::quivers_with_aliens(n)) {
      auto poset = std::make_shared<const Poset>(poset_of_quiver(q, f));
      std::multiset<PointSet> omega, algebraic;
      for (const auto& g : sp_segments(q, f)) omega.insert(functor_Omega(g, q, f, poset).support);
      for (const auto& u : enumerate_indecomposables(poset)) algebraic.insert(u.space.support);
      CHECK(omega == algebraic);
    }
}
