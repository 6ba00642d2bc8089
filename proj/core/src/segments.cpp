#include "peakstab/segments.hpp"

#include <algorithm>

#include "peakstab/error.hpp"

namespace peakstab {

namespace {

bool has(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Maximal prefix of the R⁻¹-orbit of v staying on one side of v.
std::vector<std::size_t> orbit(std::size_t v, const PolygonModel& p, bool below) {
  std::vector<std::size_t> out{v};
  for (std::size_t x = p.Rinv[v]; below ? x < v : x > v; x = p.Rinv[x]) {
    if (has(out, x)) break;
    out.push_back(x);
  }
  return out;
}

}  // namespace

SegmentSet suitable_segments(const PolygonModel& p) {
  const auto C = p.chain_C();
  const auto D = p.chain_D();
  SegmentSet out;
  for (std::size_t i = 0; i < p.top(); ++i)
    if ((has(D, i) && has(C, i + 1)) || (has(D, i + 1) && has(C, i))) out.push_back({i, i + 1});
  return out;
}

SegmentSet bi_fan(const LineSegment& g, const PolygonModel& p) {
  SegmentSet out;
  for (auto x : orbit(g.i, p, true))
    for (auto y : orbit(g.j, p, false)) out.push_back({x, y});
  return normalize(out);
}

SegmentSet overline_segments(const PolygonModel& p) {
  const auto C = p.chain_C();
  const auto D = p.chain_D();
  SegmentSet out;
  for (const auto& g : suitable_segments(p))
    if (has(C, g.j) && has(D, g.i)) out = set_union(out, bi_fan(g, p));
  return out;
}

namespace {

SegmentSet r_lower(const std::vector<std::size_t>& c, std::size_t top) {
  SegmentSet out;
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    for (std::size_t m = c[k] + 1; m <= top; ++m) out.push_back({c[k], m});
  return normalize(out);
}

SegmentSet r_upper(const std::vector<std::size_t>& d) {
  SegmentSet out;
  for (std::size_t k = 1; k < d.size(); ++k)
    for (std::size_t s = 0; s < d[k]; ++s) out.push_back({s, d[k]});
  return normalize(out);
}

bool meets(const SegmentSet& a, const SegmentSet& b) {
  for (const auto& g : a)
    if (contains(b, g)) return true;
  return false;
}

std::vector<std::vector<std::size_t>> runs(const std::vector<std::size_t>& chain) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < chain.size(); ++a)
    for (std::size_t b = a + 1; b < chain.size(); ++b)
      out.emplace_back(chain.begin() + static_cast<long>(a), chain.begin() + static_cast<long>(b) + 1);
  return out;
}

}  // namespace

PrincipalSubchains principal_subchains(const PolygonModel& p) {
  const SegmentSet suit = suitable_segments(p);
  const SegmentSet over = overline_segments(p);
  auto startsIn = [&](const std::vector<std::size_t>& c) {
    std::vector<std::size_t> v;
    for (const auto& g : suit)
      if (has(c, g.i)) v.push_back(g.i);
    return v;
  };
  auto endsIn = [&](const std::vector<std::size_t>& c) {
    std::vector<std::size_t> v;
    for (const auto& g : suit)
      if (has(c, g.j)) v.push_back(g.j);
    return v;
  };
  PrincipalSubchains out;
  for (const auto& c : runs(p.chain_C())) {
    const auto e = endsIn(c);
    const auto s = startsIn(c);
    if (e.size() != 1 || e[0] != c.front()) continue;
    if (s.size() > 1) continue;
    if (s.size() == 1 ? s[0] != c.back() : c.back() != p.top()) continue;
    if (meets(r_lower(c, p.top()), over)) out.C.push_back(c);
  }
  for (const auto& d : runs(p.chain_D())) {
    const auto s = startsIn(d);
    const auto e = endsIn(d);
    if (s.size() != 1 || s[0] != d.back()) continue;
    if (e.size() > 1) continue;
    if (e.size() == 1 ? e[0] != d.front() : d.front() != 0) continue;
    if (meets(r_upper(d), over)) out.D.push_back(d);
  }
  return out;
}

SegmentSet underline_segments(const PolygonModel& p) {
  const PrincipalSubchains pc = principal_subchains(p);
  SegmentSet out;
  for (const auto& c : pc.C) out = set_union(out, r_lower(c, p.top()));
  for (const auto& d : pc.D) out = set_union(out, r_upper(d));
  return out;
}

SegmentSet star_segments(const PolygonModel& p) {
  return set_difference(overline_segments(p), underline_segments(p));
}

SegmentSet frozen_segments(const AlienArrow& alpha, const PolygonModel& p) {
  const std::size_t i = alien_sink(p.quiver, alpha);
  const std::size_t j2 = alpha.source;
  const std::size_t j1 = alpha.target;
  SegmentSet out;
  for (const auto& g : p.all_segments()) {
    if (j1 < j2 && g.j >= j2 && j1 <= g.i && g.i < i) out.push_back(g);
    if (j1 > j2 && g.i < j2 && i <= g.j && g.j < j1) out.push_back(g);
  }
  return out;
}

SegmentSet sp_segments(const QuiverA& q, const AlienSet& f) {
  AlienVerdict v = validate_alien_set(q, f);
  if (!v.valid) throw Error(ErrorCode::InvalidAlien, v.violations.front().message);
  const PolygonModel p = build_polygon(q);
  SegmentSet out = star_segments(p);
  for (const auto& a : f.arrows) out = set_difference(out, frozen_segments(a, p));
  return out;
}

std::vector<std::pair<LineSegment, SegmentClass>> classify_segments(const QuiverA& q, const AlienSet& f) {
  const PolygonModel p = build_polygon(q);
  const SegmentSet suit = suitable_segments(p);
  const SegmentSet star = star_segments(p);
  std::vector<SegmentSet> frozen;
  for (const auto& a : f.arrows) frozen.push_back(frozen_segments(a, p));
  std::vector<std::pair<LineSegment, SegmentClass>> out;
  for (const auto& g : p.all_segments()) {
    SegmentClass c;
    c.suitable = contains(suit, g);
    c.star = contains(star, g);
    for (std::size_t k = 0; k < frozen.size(); ++k)
      if (contains(frozen[k], g)) c.frozenBy.push_back(f.arrows[k]);
    c.sp = c.star && c.frozenBy.empty();
    out.push_back({g, std::move(c)});
  }
  return out;
}

SpQuiver ar_quiver_sp(const QuiverA& q, const AlienSet& f) {
  const PolygonModel p = build_polygon(q);
  SpQuiver out;
  out.nodes = sp_segments(q, f);
  auto walk = [&](LineSegment g, bool moveEnd) -> std::optional<LineSegment> {
    for (std::size_t step = 0; step <= p.top() + 1; ++step) {
      LineSegment h = moveEnd ? LineSegment{g.i, p.Rinv[g.j]} : LineSegment{p.Rinv[g.i], g.j};
      if (h.i >= h.j) return std::nullopt;
      if (contains(out.nodes, h)) return h;
      g = h;
    }
    return std::nullopt;
  };
  for (const auto& g : out.nodes)
    for (bool moveEnd : {false, true})
      if (auto h = walk(g, moveEnd)) out.arrows.push_back({g, *h});
  std::sort(out.arrows.begin(), out.arrows.end());
  auto arrow = [&](const LineSegment& a, const LineSegment& b) {
    return std::binary_search(out.arrows.begin(), out.arrows.end(), std::make_pair(a, b));
  };
  for (const auto& g : out.nodes) {
    std::optional<LineSegment> left, right;
    for (const auto& [a, b] : out.arrows) {
      if (!(a == g)) continue;
      if (b.j == g.j) left = b;
      if (b.i == g.i) right = b;
    }
    if (!left || !right) continue;
    const LineSegment target{left->i, right->j};
    if (target.i < target.j && contains(out.nodes, target) && arrow(*left, target) && arrow(*right, target))
      out.meshes.push_back({g, *left, *right, target});
  }
  return out;
}

CombPeakSpace functor_Omega(const LineSegment& g, const QuiverA& q, const AlienSet& f, PosetPtr poset) {
  if (!contains(sp_segments(q, f), g)) throw Error(ErrorCode::NotSpSegment, g.name() + " is not an sp-segment");
  PointSet support;
  for (std::size_t v = g.i + 1; v <= g.j; ++v) support.push_back(poset->index(std::to_string(v)));
  std::sort(support.begin(), support.end());
  return CombPeakSpace{poset, support};
}

}  // namespace peakstab
