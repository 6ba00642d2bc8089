#include "peakstab/polygon.hpp"

#include <algorithm>

namespace peakstab {

std::string LineSegment::name() const { return "γ(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

SegmentSet normalize(SegmentSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const SegmentSet& s, const LineSegment& g) { return std::binary_search(s.begin(), s.end(), g); }

SegmentSet set_union(const SegmentSet& a, const SegmentSet& b) {
  SegmentSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SegmentSet set_difference(const SegmentSet& a, const SegmentSet& b) {
  SegmentSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool PolygonModel::is_upper(std::size_t v) const {
  return std::binary_search(upperBarred.begin(), upperBarred.end(), v);
}

bool PolygonModel::is_lower(std::size_t v) const {
  return std::binary_search(lowerBarred.begin(), lowerBarred.end(), v);
}

std::vector<std::size_t> PolygonModel::chain_C() const {
  std::vector<std::size_t> c = lowerBarred;
  c.push_back(top());
  return c;
}

std::vector<std::size_t> PolygonModel::chain_D() const {
  std::vector<std::size_t> d{0};
  d.insert(d.end(), upperBarred.begin(), upperBarred.end());
  return d;
}

SegmentSet PolygonModel::all_segments() const {
  SegmentSet s;
  for (std::size_t i = 0; i <= top(); ++i)
    for (std::size_t j = i + 1; j <= top(); ++j) s.push_back({i, j});
  return s;
}

PolygonModel build_polygon(const QuiverA& q) {
  PolygonModel p;
  p.quiver = q;
  const std::size_t n = q.n;
  for (std::size_t i = 1; i < n; ++i) (q.right(i) ? p.upperBarred : p.lowerBarred).push_back(i);
  p.boundaryOrder.push_back(0);
  p.boundaryOrder.insert(p.boundaryOrder.end(), p.upperBarred.begin(), p.upperBarred.end());
  if (n > 0) p.boundaryOrder.push_back(n);
  p.boundaryOrder.insert(p.boundaryOrder.end(), p.lowerBarred.rbegin(), p.lowerBarred.rend());
  const std::size_t m = p.boundaryOrder.size();
  p.R.assign(n + 1, 0);
  p.Rinv.assign(n + 1, 0);
  for (std::size_t k = 0; k < m; ++k) {
    p.R[p.boundaryOrder[k]] = p.boundaryOrder[(k + 1) % m];
    p.Rinv[p.boundaryOrder[k]] = p.boundaryOrder[(k + m - 1) % m];
  }
  for (std::size_t k = 0; k <= n; ++k) {
    Rat h(static_cast<long>(k * (n + 1 - k)));
    Rat y = p.is_upper(k) ? h : p.is_lower(k) ? Rat(-h) : Rat(0);
    p.coords.push_back({Rat(static_cast<long>(k)), y});
  }
  return p;
}

SegmentSet pivots(const LineSegment& g, const PolygonModel& p) {
  SegmentSet out;
  if (g.i < p.Rinv[g.j]) out.push_back({g.i, p.Rinv[g.j]});
  if (p.Rinv[g.i] < g.j) out.push_back({p.Rinv[g.i], g.j});
  return normalize(out);
}

std::optional<LineSegment> rotate(const LineSegment& g, const PolygonModel& p) {
  if (p.R[g.i] < p.R[g.j]) return LineSegment{p.R[g.i], p.R[g.j]};
  return std::nullopt;
}

TranslationQuiverGraph translation_quiver(const PolygonModel& p) {
  TranslationQuiverGraph t;
  t.nodes = p.all_segments();
  for (const auto& g : t.nodes) {
    for (const auto& h : pivots(g, p)) t.arrows.push_back({g, h});
    if (auto r = rotate(g, p)) t.translation.push_back({g, *r});
  }
  return t;
}

Interval functor_F(const LineSegment& g) { return Interval{g.i + 1, g.j}; }

bool convex_position(const PolygonModel& p) {
  const auto& o = p.boundaryOrder;
  const std::size_t m = o.size();
  if (m < 3) return true;
  for (std::size_t k = 0; k < m; ++k) {
    const Point2& a = p.coords[o[k]];
    const Point2& b = p.coords[o[(k + 1) % m]];
    const Point2& c = p.coords[o[(k + 2) % m]];
    Rat cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    if (sgn(cross) >= 0) return false;
  }
  return true;
}

}  // namespace peakstab
