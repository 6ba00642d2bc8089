#ifndef PEAKSTAB_SHAPES_HPP
#define PEAKSTAB_SHAPES_HPP

#include <optional>
#include <string>
#include <vector>

#include "peakstab/peak_space.hpp"
#include "peakstab/poset.hpp"

namespace peakstab {

enum class ShapeKind { S1, S2, S3 };

const char* to_string(ShapeKind kind);

// Sincere fence inside a host poset. Points are host indices.
//   S1(r): z1 > x1 < z2 > ... < zr              (r - 1 minima)
//   S2(r): z1 > x1 < z2 > ... < zr > xr         (r minima)
//   S3(r): x0 < z1 > x1 < ... < zr > xr         (r + 1 minima)
// x lists minima in fence order (x0 first for S3).
struct SincereShape {
  ShapeKind kind = ShapeKind::S1;
  std::size_t r = 0;
  std::vector<std::size_t> z;
  std::vector<std::size_t> x;
  PosetPtr host;

  // z points then x points; the index order of shape_poset().
  std::vector<std::size_t> grouped() const;
  // Points in the order they are met walking along the fence.
  std::vector<std::size_t> fence() const;
  PointSet points() const;
  std::string name() const;
};

// The shape as a poset of its own, labelled 1..N along the fence.
SincereShape standard_shape(ShapeKind kind, std::size_t r);

// Full subposet on grouped(); point k there is grouped()[k] in the host.
PosetPtr shape_poset(const SincereShape& s);

// Throws NotTypeA.
std::vector<SincereShape> sincere_subposets(PosetPtr p);
// Shapes without the type check, for callers that already know the answer.
std::vector<SincereShape> sincere_fences(PosetPtr p);

// Recognizes a point set as a sincere peak-subposet.
std::optional<SincereShape> recognize_shape(PosetPtr p, const PointSet& points);

// The sincere representation on shape_poset(s).
ExplicitPeakSpace sincere_rep(const SincereShape& s);

// T_S: lifts a representation of shape_poset(s) to the host poset.
ExplicitPeakSpace lift_T(const SincereShape& s, const ExplicitPeakSpace& u, PosetPtr p);

// Support of T_S(sincere_rep(s)): points between some point of S and a peak of S.
PointSet lifted_support(const SincereShape& s);

}  // namespace peakstab

#endif
