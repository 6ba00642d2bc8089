#ifndef PEAKSTAB_PEAK_SPACE_HPP
#define PEAKSTAB_PEAK_SPACE_HPP

#include <string>
#include <vector>

#include "peakstab/linalg.hpp"
#include "peakstab/poset.hpp"

namespace peakstab {

// Peak space given by explicit bases inside U• = ⊕ U_z over the maximal
// points z. Ambient blocks follow poset->max_points(); every basis matrix has
// total_dim() rows.
struct ExplicitPeakSpace {
  PosetPtr poset;
  std::vector<std::size_t> ambientDims;
  std::vector<Matrix> bases;

  std::size_t total_dim() const;
  std::size_t offset(std::size_t maxPos) const;
  DimVector dims() const;
  PointSet support() const;
};

struct PeakCheck {
  bool ok = true;
  std::string violation;
};

// Throws ShapeMismatch when the matrices do not fit the ambient dimensions.
PeakCheck check_peak_space(const ExplicitPeakSpace& u);

ExplicitPeakSpace zero_space(PosetPtr poset);
// Ambient block z only, U_z = that block.
ExplicitPeakSpace simple_at(PosetPtr poset, std::size_t z);

// π_y: keep the blocks of maximal points above y, zero the rest.
Matrix project(const ExplicitPeakSpace& u, std::size_t y, const Matrix& m);

// One basis matrix per maximal point (in max_points() order), columns inside U_z.
using AdmissibleChoice = std::vector<Matrix>;

AdmissibleChoice admissible_full(const ExplicitPeakSpace& u);
AdmissibleChoice admissible_zero(const ExplicitPeakSpace& u);
// K_z = U_z for z in peaks, 0 otherwise.
AdmissibleChoice admissible_subset(const ExplicitPeakSpace& u, const PointSet& peaks);

// (U_K)_x = U_x ∩ K, re-expressed in the basis of K so that U_K is again a
// peak space over the ambient ⊕ K_z.
ExplicitPeakSpace restrict_to_admissible(const ExplicitPeakSpace& u, const AdmissibleChoice& k);
DimVector quotient_dims(const ExplicitPeakSpace& u, const AdmissibleChoice& k);

// Throws InvariantViolated if some π_x(U_y), y ≺ x, leaves U_x.
DimVector coordinate_vector(const ExplicitPeakSpace& u);
PointSet coordinate_support(const ExplicitPeakSpace& u);

// Peak space with all dimensions at most one, described by its support.
struct CombPeakSpace {
  PosetPtr poset;
  PointSet support;

  DimVector dims() const { return indicator(poset->size(), support); }
  // Supp ∩ max.
  PointSet peaks() const;
};

// U_x spanned by the sum of e_z over supported maximal z ⪰ x.
ExplicitPeakSpace materialize(const CombPeakSpace& u);

std::string dump(const ExplicitPeakSpace& u);

}  // namespace peakstab

#endif
