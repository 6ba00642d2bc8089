#include "peakstab/stability.hpp"

#include "peakstab/error.hpp"
#include "peakstab/incidence.hpp"

namespace peakstab {

namespace {

Rat ratio(const Int& a, const Int& b) {
  Rat q(a, b);
  q.canonicalize();
  return q;
}

}  // namespace

Int evaluate(const Weight& w, const DimVector& d) {
  if (w.size() != d.size()) throw Error(ErrorCode::DimensionMismatch, "weight and vector differ in length");
  Int acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * d[i];
  return acc;
}

Slope default_slope(const Weight& theta) { return Slope{theta, Weight(theta.size(), 1)}; }

Rat slope_of(const Slope& s, const DimVector& d) {
  Int k = evaluate(s.kappa, d);
  if (sgn(k) <= 0) throw Error(ErrorCode::KappaNotPositive, "kappa is not positive");
  return ratio(evaluate(s.theta, d), k);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Semistable: return "semistable";
    case Verdict::Unstable: return "unstable";
  }
  return "?";
}

Weight theta_on_shape(const SincereShape& s) {
  PosetPtr sp = shape_poset(s);
  IncidenceMatrix c = incidence_matrix(*sp);
  const DimVector ones(sp->size(), 1);
  Weight theta(sp->size());
  for (std::size_t k = 0; k < sp->size(); ++k) {
    DimVector e = unit_vector(sp->size(), k);
    theta[k] = bilinear_form(c, ones, e) - bilinear_form(c, e, ones);
  }
  return theta;
}

Weight lift_weight(const Weight& w, const std::vector<std::size_t>& points, std::size_t hostSize) {
  if (w.size() != points.size()) throw Error(ErrorCode::DimensionMismatch, "weight does not match its points");
  Weight out(hostSize, 0);
  for (std::size_t k = 0; k < points.size(); ++k) out[points[k]] = w[k];
  return out;
}

Weight theta_of(const Indecomposable& u) {
  return lift_weight(theta_on_shape(u.shape), u.shape.grouped(), u.space.poset->size());
}

Weight theta_of(const CombPeakSpace& u) {
  PointSet cs = coordinate_support(materialize(u));
  auto shape = recognize_shape(u.poset, cs);
  if (!shape) throw Error(ErrorCode::NotSincere, "coordinate support is not a sincere shape", u.poset->format_set(cs));
  return lift_weight(theta_on_shape(*shape), shape->grouped(), u.poset->size());
}

ThetaReport is_theta_stable(const CombPeakSpace& u, const Weight& theta, bool checkTypeA) {
  ThetaReport rep;
  rep.total = evaluate(theta, u.dims());
  rep.subspaces = proper_subspaces_typeA(u, checkTypeA);
  bool strict = true;
  bool weak = true;
  for (std::size_t i = 0; i < rep.subspaces.size(); ++i) {
    Int v = evaluate(theta, indicator(u.poset->size(), rep.subspaces[i].support));
    if (!rep.witness || v > rep.values[*rep.witness]) rep.witness = i;
    strict = strict && v < 0;
    weak = weak && v <= 0;
    rep.values.push_back(v);
  }
  if (sgn(rep.total) != 0) rep.verdict = Verdict::Unstable;
  else if (strict) rep.verdict = Verdict::Stable;
  else if (weak) rep.verdict = Verdict::Semistable;
  else rep.verdict = Verdict::Unstable;
  return rep;
}

namespace {

Rat checked_slope(const Slope& s, const DimVector& d, const std::string& where) {
  Int k = evaluate(s.kappa, d);
  if (sgn(k) <= 0) throw Error(ErrorCode::KappaNotPositive, "kappa is not positive on " + where, where);
  return ratio(evaluate(s.theta, d), k);
}

DimVector minus(DimVector a, const DimVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

MuReport is_mu_stable(const CombPeakSpace& u, const Slope& s) {
  const Poset& P = *u.poset;
  MuReport rep;
  rep.slope = checked_slope(s, u.dims(), P.format_set(u.support));
  rep.subspaces = proper_subspaces_typeA(u, false);
  bool strict = true;
  bool weak = true;
  for (std::size_t i = 0; i < rep.subspaces.size(); ++i) {
    const PointSet& sup = rep.subspaces[i].support;
    Rat m = checked_slope(s, indicator(P.size(), sup), P.format_set(sup));
    if (!rep.witness || m > rep.slopes[*rep.witness]) rep.witness = i;
    strict = strict && m < rep.slope;
    weak = weak && m <= rep.slope;
    rep.slopes.push_back(m);
  }
  rep.verdict = strict ? Verdict::Stable : weak ? Verdict::Semistable : Verdict::Unstable;
  return rep;
}

Weight theta_hat(const CombPeakSpace& u, const Slope& s) {
  const DimVector d = u.dims();
  const Int k = evaluate(s.kappa, d);
  const Int t = evaluate(s.theta, d);
  Weight out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = k * s.theta[i] - t * s.kappa[i];
  return out;
}

Weight extend_positive(const Weight& w, const DimVector& vDims, const Poset& p, const Poset& pTilde,
                       const std::string& newPoint) {
  if (pTilde.size() != p.size() + 1 || w.size() != p.size() || vDims.size() != pTilde.size())
    throw Error(ErrorCode::ShapeMismatch, "extension must add exactly one point");
  if (!pTilde.has_label(newPoint) || p.has_label(newPoint))
    throw Error(ErrorCode::ShapeMismatch, "new point must exist only in the extension", newPoint);
  const std::size_t np = pTilde.index(newPoint);
  Weight out(pTilde.size(), 0);
  if (pTilde.is_max(np)) {
    for (std::size_t i = 0; i < p.size(); ++i) out[pTilde.index(p.label(i))] = w[i];
    return out;
  }
  const Int dp = vDims[np];
  Int ambient = 0;
  for (auto z : p.max_points()) ambient += vDims[pTilde.index(p.label(z))];
  const Int factor = dp * ambient + 1;
  const Int nu = -factor;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t t = pTilde.index(p.label(i));
    out[t] = p.is_max(i) ? Int(-nu * w[i] - dp) : Int(factor * w[i]);
  }
  out[np] = ambient;
  return out;
}

std::vector<DimVector> subobject_dims(const CombPeakSpace& u) {
  const PointSet peaks = u.peaks();
  std::vector<DimVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << peaks.size()); ++mask) {
    PointSet sel;
    for (std::size_t b = 0; b < peaks.size(); ++b)
      if (mask >> b & 1) sel.push_back(peaks[b]);
    out.push_back(indicator(u.poset->size(), subspace_support(u, sel)));
  }
  return out;
}

namespace {

PointSet mask_points(const PointSet& peaks, std::size_t mask) {
  PointSet s;
  for (std::size_t b = 0; b < peaks.size(); ++b)
    if (mask >> b & 1) s.push_back(peaks[b]);
  return s;
}

void push_step(Filtration& f, const PointSet& peaks, const std::vector<DimVector>& dims, std::size_t from,
               std::size_t to, const Rat& slope) {
  f.steps.push_back(mask_points(peaks, to));
  f.layers.push_back(minus(dims[to], dims[from]));
  f.slopes.push_back(slope);
}

bool subset_of(std::size_t a, std::size_t b) { return (a & ~b) == 0; }

}  // namespace

Filtration hn_filtration(const CombPeakSpace& u, const Slope& s) {
  const PointSet peaks = u.peaks();
  const std::vector<DimVector> dims = subobject_dims(u);
  const std::size_t full = dims.size() - 1;
  Filtration f;
  f.steps.push_back({});
  for (std::size_t cur = 0; cur != full;) {
    std::size_t best = full;
    Rat bestSlope = checked_slope(s, minus(dims[full], dims[cur]), u.poset->format_set(u.support));
    Int bestKappa = evaluate(s.kappa, minus(dims[full], dims[cur]));
    for (std::size_t j = 0; j < full; ++j) {
      if (j == cur || !subset_of(cur, j)) continue;
      DimVector layer = minus(dims[j], dims[cur]);
      Rat m = checked_slope(s, layer, u.poset->format_set(mask_points(peaks, j)));
      Int k = evaluate(s.kappa, layer);
      if (m > bestSlope || (m == bestSlope && k > bestKappa)) {
        best = j;
        bestSlope = m;
        bestKappa = k;
      }
    }
    push_step(f, peaks, dims, cur, best, bestSlope);
    cur = best;
  }
  return f;
}

Filtration jh_filtration(const CombPeakSpace& u, const Slope& s) {
  const PointSet peaks = u.peaks();
  const std::vector<DimVector> dims = subobject_dims(u);
  const std::size_t full = dims.size() - 1;
  const Rat mu = checked_slope(s, dims[full], u.poset->format_set(u.support));
  for (std::size_t j = 1; j < full; ++j) {
    if (checked_slope(s, dims[j], u.poset->format_set(mask_points(peaks, j))) > mu)
      throw Error(ErrorCode::NotSemistable, "a subobject has larger slope",
                  u.poset->format_set(subspace_support(u, mask_points(peaks, j))));
  }
  Filtration f;
  f.steps.push_back({});
  for (std::size_t cur = 0; cur != full;) {
    std::size_t best = full;
    Int bestKappa = evaluate(s.kappa, minus(dims[full], dims[cur]));
    for (std::size_t j = 0; j < full; ++j) {
      if (j == cur || !subset_of(cur, j)) continue;
      DimVector layer = minus(dims[j], dims[cur]);
      Int k = evaluate(s.kappa, layer);
      if (sgn(k) <= 0) throw Error(ErrorCode::KappaNotPositive, "kappa is not positive on a layer");
      if (ratio(evaluate(s.theta, layer), k) == mu && k < bestKappa) {
        best = j;
        bestKappa = k;
      }
    }
    push_step(f, peaks, dims, cur, best, mu);
    cur = best;
  }
  return f;
}

}  // namespace peakstab
