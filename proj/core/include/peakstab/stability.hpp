#ifndef PEAKSTAB_STABILITY_HPP
#define PEAKSTAB_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "peakstab/indecomposables.hpp"
#include "peakstab/linalg.hpp"

namespace peakstab {

// Integer functional on dimension vectors, indexed by point.
using Weight = DimVector;

Int evaluate(const Weight& w, const DimVector& d);

// μ = θ / κ.
struct Slope {
  Weight theta;
  Weight kappa;
};

Slope default_slope(const Weight& theta);  // κ = total dimension
Rat slope_of(const Slope& s, const DimVector& d);

enum class Verdict { Stable, Semistable, Unstable };
const char* to_string(Verdict v);

// θ_k = b(1, e_k) − b(e_k, 1) on shape_poset(s), indexed like s.grouped().
Weight theta_on_shape(const SincereShape& s);
// Zero-extension of a weight on S (indexed like `points`) to the host.
Weight lift_weight(const Weight& w, const std::vector<std::size_t>& points, std::size_t hostSize);
// The lifted weight of the shape underlying an indecomposable.
Weight theta_of(const Indecomposable& u);
// Recovers the shape from the coordinate support. Throws NotSincere.
Weight theta_of(const CombPeakSpace& u);

struct ThetaReport {
  Verdict verdict = Verdict::Stable;
  Int total;
  std::vector<ProperSubspace> subspaces;
  std::vector<Int> values;
  // Index into subspaces of a maximal value, when there are subspaces.
  std::optional<std::size_t> witness;
};

ThetaReport is_theta_stable(const CombPeakSpace& u, const Weight& theta, bool checkTypeA = false);

struct MuReport {
  Verdict verdict = Verdict::Stable;
  Rat slope;
  std::vector<ProperSubspace> subspaces;
  std::vector<Rat> slopes;
  std::optional<std::size_t> witness;
};

// Throws KappaNotPositive.
MuReport is_mu_stable(const CombPeakSpace& u, const Slope& s);

// κ(U)θ − θ(U)κ.
Weight theta_hat(const CombPeakSpace& u, const Slope& s);

// Weight on pTilde = p plus newPoint for a positively stable representation.
// vDims are the dimensions of the extended representation, indexed by pTilde.
Weight extend_positive(const Weight& w, const DimVector& vDims, const Poset& p, const Poset& pTilde,
                       const std::string& newPoint);

// 0 = V0 ⊂ V1 ⊂ ... ⊂ Vn = U; each step is a subset of u.peaks().
struct Filtration {
  std::vector<PointSet> steps;
  std::vector<DimVector> layers;
  std::vector<Rat> slopes;
};

// Subobject lattice of u: one entry per subset of u.peaks() (bitmask order).
std::vector<DimVector> subobject_dims(const CombPeakSpace& u);

// Throws KappaNotPositive.
Filtration hn_filtration(const CombPeakSpace& u, const Slope& s);
// Throws NotSemistable or KappaNotPositive.
Filtration jh_filtration(const CombPeakSpace& u, const Slope& s);

}  // namespace peakstab

#endif
