#ifndef PEAKSTAB_SEGMENTS_HPP
#define PEAKSTAB_SEGMENTS_HPP

#include <vector>

#include "peakstab/peak_space.hpp"
#include "peakstab/polygon.hpp"
#include "peakstab/quiver.hpp"

namespace peakstab {

SegmentSet suitable_segments(const PolygonModel& p);

SegmentSet bi_fan(const LineSegment& g, const PolygonModel& p);

// Consecutive runs of C (resp. D) meeting conditions (a) and (b), kept only
// when their segment set meets the union of bi-fans.
struct PrincipalSubchains {
  std::vector<std::vector<std::size_t>> C;
  std::vector<std::vector<std::size_t>> D;
};

PrincipalSubchains principal_subchains(const PolygonModel& p);
SegmentSet overline_segments(const PolygonModel& p);
SegmentSet underline_segments(const PolygonModel& p);
SegmentSet star_segments(const PolygonModel& p);

// Throws InvalidAlien.
SegmentSet frozen_segments(const AlienArrow& alpha, const PolygonModel& p);

SegmentSet sp_segments(const QuiverA& q, const AlienSet& f);

struct SegmentClass {
  bool suitable = false;
  bool star = false;
  std::vector<AlienArrow> frozenBy;
  bool sp = false;
};

std::vector<std::pair<LineSegment, SegmentClass>> classify_segments(const QuiverA& q, const AlienSet& f);

// Commuting square γ(s,m) → γ(s',m), γ(s,m') → γ(s',m').
struct MeshRelation {
  LineSegment source;
  LineSegment viaLeft;
  LineSegment viaRight;
  LineSegment target;
};

struct SpQuiver {
  SegmentSet nodes;
  std::vector<std::pair<LineSegment, LineSegment>> arrows;
  std::vector<MeshRelation> meshes;
};

// Arrows are sp-pivots: one endpoint moves along R⁻¹ through non-sp segments.
SpQuiver ar_quiver_sp(const QuiverA& q, const AlienSet& f);

// Ω(γ(s, m)) with support {s + 1, ..., m}. Throws NotSpSegment.
CombPeakSpace functor_Omega(const LineSegment& g, const QuiverA& q, const AlienSet& f, PosetPtr poset);

}  // namespace peakstab

#endif
