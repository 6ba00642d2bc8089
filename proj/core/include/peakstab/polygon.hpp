#ifndef PEAKSTAB_POLYGON_HPP
#define PEAKSTAB_POLYGON_HPP

#include <optional>
#include <string>
#include <vector>

#include "peakstab/linalg.hpp"
#include "peakstab/quiver.hpp"

namespace peakstab {

// γ(i, j) with 0 ≤ i < j ≤ n + 2.
struct LineSegment {
  std::size_t i = 0;
  std::size_t j = 0;

  auto operator<=>(const LineSegment&) const = default;
  std::string name() const;
};

using SegmentSet = std::vector<LineSegment>;  // sorted, unique

SegmentSet normalize(SegmentSet s);
bool contains(const SegmentSet& s, const LineSegment& g);
SegmentSet set_union(const SegmentSet& a, const SegmentSet& b);
SegmentSet set_difference(const SegmentSet& a, const SegmentSet& b);

struct Point2 {
  Rat x;
  Rat y;
  bool operator==(const Point2&) const = default;
};

// Polygon P(Q) for a quiver with vertices 1..N (N = n + 2); vertices 0..N.
struct PolygonModel {
  QuiverA quiver;
  std::vector<std::size_t> upperBarred;
  std::vector<std::size_t> lowerBarred;
  // Clockwise: 0, upper ascending, N, lower descending.
  std::vector<std::size_t> boundaryOrder;
  std::vector<Point2> coords;
  std::vector<std::size_t> R;
  std::vector<std::size_t> Rinv;

  std::size_t top() const { return quiver.n; }
  bool is_upper(std::size_t v) const;
  bool is_lower(std::size_t v) const;
  // C = lower ∪ {N} and D = upper ∪ {0}, ascending.
  std::vector<std::size_t> chain_C() const;
  std::vector<std::size_t> chain_D() const;
  SegmentSet all_segments() const;
};

// Vertex k at (k, ±k(N + 1 − k)), sign by barring; 0 and N on the axis.
PolygonModel build_polygon(const QuiverA& q);

SegmentSet pivots(const LineSegment& g, const PolygonModel& p);

struct TranslationQuiverGraph {
  SegmentSet nodes;
  std::vector<std::pair<LineSegment, LineSegment>> arrows;
  std::vector<std::pair<LineSegment, LineSegment>> translation;
};

std::optional<LineSegment> rotate(const LineSegment& g, const PolygonModel& p);
TranslationQuiverGraph translation_quiver(const PolygonModel& p);

// 𝔽(γ(i, j)) = M(i + 1, j).
struct Interval {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const Interval&) const = default;
};
Interval functor_F(const LineSegment& g);

// Strict convexity of the vertex placement along the boundary order.
bool convex_position(const PolygonModel& p);

}  // namespace peakstab

#endif
