#ifndef PEAKSTAB_TESTS_FIXTURES_HPP
#define PEAKSTAB_TESTS_FIXTURES_HPP

#include <memory>

#include "peakstab/peakstab.hpp"

namespace fixtures {

// Three peaks {2,5,7}: 3<1<2, 3<4<5, 6<4, 6<7.
inline peakstab::PosetPtr poset_e1() {
  return std::make_shared<const peakstab::Poset>(peakstab::Poset::build(
      {"1", "2", "3", "4", "5", "6", "7"},
      {{"3", "1"}, {"1", "2"}, {"3", "4"}, {"4", "5"}, {"6", "4"}, {"6", "7"}}));
}

// 1→2←3→4→5←6→7.
inline peakstab::QuiverA example_quiver() {
  return peakstab::QuiverA::from_arrows(7, {{1, 2}, {3, 2}, {3, 4}, {4, 5}, {6, 5}, {6, 7}});
}

// α: 3→1, β: 6→4.
inline peakstab::AlienSet example_aliens() { return peakstab::AlienSet{{{3, 1}, {6, 4}}}; }

inline peakstab::PointSet pts(const peakstab::Poset& p, std::initializer_list<const char*> labels) {
  peakstab::PointSet s;
  for (auto l : labels) s.push_back(p.index(l));
  std::sort(s.begin(), s.end());
  return s;
}

inline peakstab::SegmentSet segs(std::initializer_list<std::pair<std::size_t, std::size_t>> list) {
  peakstab::SegmentSet s;
  for (auto [i, j] : list) s.push_back({i, j});
  return peakstab::normalize(s);
}

}  // namespace fixtures

#endif
