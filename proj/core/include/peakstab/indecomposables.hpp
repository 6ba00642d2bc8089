#ifndef PEAKSTAB_INDECOMPOSABLES_HPP
#define PEAKSTAB_INDECOMPOSABLES_HPP

#include <vector>

#include "peakstab/peak_space.hpp"
#include "peakstab/shapes.hpp"

namespace peakstab {

struct Indecomposable {
  SincereShape shape;
  // Lifted object; shape.points() is its coordinate support.
  CombPeakSpace space;
};

// One object per sincere peak-subposet, sorted by support. Throws NotTypeA.
std::vector<Indecomposable> enumerate_indecomposables(PosetPtr p);
// Same without the type check.
std::vector<Indecomposable> enumerate_indecomposables_unchecked(PosetPtr p);

struct ProperSubspace {
  // The subset I of Supp U ∩ max.
  PointSet peaks;
  PointSet support;
};

// Supports I_▵ \ (Iᶜ)_▵ ∩ Supp U over nonempty proper I, with
// Iᶜ = (Supp U ∩ max) \ I. Listed by the bitmask of I over u.peaks().
// Throws NotTypeA when checkTypeA is set and the poset fails the test.
std::vector<ProperSubspace> proper_subspaces_typeA(const CombPeakSpace& u, bool checkTypeA = true);

// Support of the subobject selected by a subset of the peaks (empty and full included).
PointSet subspace_support(const CombPeakSpace& u, const PointSet& peaks);

}  // namespace peakstab

#endif
