#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace peakstab;

TEST_CASE("POSET-E1 is of type A") { CHECK(is_type_A(*fixtures::poset_e1()).typeA); }

TEST_CASE("forbidden patterns are recognised as themselves") {
  for (auto [p, name] : {std::pair{forbidden_pattern_R1(), "R1"}, {forbidden_pattern_R2(), "R2"},
                         {forbidden_pattern_R3(), "R3"}}) {
    TypeAVerdict v = is_type_A(p);
    CHECK_FALSE(v.typeA);
    CHECK(v.pattern == name);
    CHECK(v.witness.size() == p.size());
  }
  for (std::size_t n = 0; n <= 2; ++n) {
    TypeAVerdict v = is_type_A(forbidden_pattern_R4(n));
    CHECK_FALSE(v.typeA);
    CHECK(v.pattern == "R4," + std::to_string(n));
  }
}

TEST_CASE("small type A posets") {
  CHECK(is_type_A(Poset::build({"a", "b"}, {{"a", "b"}})).typeA);
  CHECK(is_type_A(Poset::build({"a"}, {})).typeA);
}

TEST_CASE("disconnected posets are rejected") {
  CHECK_THROWS_AS(is_type_A(Poset::build({"a", "b"}, {})), Error);
}

TEST_CASE("peak-subposets") {
  auto p = fixtures::poset_e1();
  CHECK(is_peak_subposet(*p, fixtures::pts(*p, {"2", "5", "3", "6"})));
  PointSet all(p->size());
  std::iota(all.begin(), all.end(), 0);
  CHECK(is_peak_subposet(*p, all));
  CHECK_FALSE(is_peak_subposet(*p, fixtures::pts(*p, {"1", "3"})));
  CHECK_THROWS_AS(is_peak_subposet(*p, {99}), Error);
}

TEST_CASE("R1 hidden below a peak is not a peak-subposet") {
  // Three minimal points under m, with m under the single peak z.
  Poset p = Poset::build({"a", "b", "c", "m", "z"}, {{"a", "m"}, {"b", "m"}, {"c", "m"}, {"m", "z"}});
  TypeAVerdict v = is_type_A(p);
  CHECK_FALSE(v.typeA);  // R1 embeds with z on top
  CHECK(v.pattern == "R1");
}

TEST_CASE("type A verdict is invariant under relabelling") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    Poset p = random_poset(3 + trial % 5, 0.45, rng);
    if (!p.connected()) continue;
    ++checked;
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Poset q = p.subposet(perm);
    CHECK(is_type_A(p).typeA == is_type_A(q).typeA);
  }
  CHECK(checked > 20);
}
