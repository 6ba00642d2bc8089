#include "peakstab/charge.hpp"

#include <algorithm>
#include <functional>

#include "peakstab/error.hpp"

namespace peakstab {

std::string Complex::str() const {
  std::string out = re.get_str();
  out += sgn(im) < 0 ? "-" : "+";
  out += Rat(abs(im)).get_str() + "i";
  return out;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }

int cross_sign(const Complex& a, const Complex& b) { return sgn(Rat(a.re * b.im - a.im * b.re)); }

Complex central_charge(const LineSegment& g, const PolygonModel& p) {
  return {p.coords[g.j].x - p.coords[g.i].x, p.coords[g.j].y - p.coords[g.i].y};
}

Complex reflect(const Complex& z) { return {z.im, z.re}; }

Complex charge_of_support(const std::vector<std::size_t>& vertices, const PolygonModel& p) {
  Complex acc{0, 0};
  for (auto v : vertices) acc = acc + reflect(central_charge({v - 1, v}, p));
  return acc;
}

namespace {

void check_shape(const SincereShape& s) {
  const std::size_t expect = s.kind == ShapeKind::S1 ? s.r - 1 : s.kind == ShapeKind::S2 ? s.r : s.r + 1;
  if (s.r == 0 || s.z.size() != s.r || s.x.size() != expect || !s.host)
    throw Error(ErrorCode::NotSincere, "shape " + s.name() + " has the wrong number of points");
  auto seen = recognize_shape(s.host, s.points());
  if (!seen || seen->kind != s.kind || seen->r != s.r)
    throw Error(ErrorCode::NotSincere, "points do not form " + s.name(), s.host->format_set(s.points()));
}

// Z_m without the boundary check.
Complex raw_z_m(const SincereShape& s, const DimVector& dims, long m) {
  if (m < 1) throw Error(ErrorCode::ShapeMismatch, "m must be positive");
  auto [w, kappa] = sincere_weights(s);
  if (dims.size() != w.size()) throw Error(ErrorCode::DimensionMismatch, "dimension vector does not fit the shape");
  Complex z{0, 0};
  for (std::size_t k = 0; k < dims.size(); ++k) {
    z.re += (w[k] + m) * dims[k];
    z.im += (kappa[k] + m) * dims[k];
  }
  return z;
}

void require_interior(const Complex& z, const std::string& what) {
  if (sgn(z.re) == 0 || sgn(z.im) == 0)
    throw Error(ErrorCode::BoundaryAngle, "Z of " + what + " is " + z.str() + ", on the boundary", what);
}

}  // namespace

// A peak z has w = 1 − (fence neighbours), κ = 1; a minimum x has w = 1 and
// κ = 1 − (fence neighbours).
std::pair<Weight, Weight> sincere_weights(const SincereShape& s) {
  check_shape(s);
  const std::vector<std::size_t> f = s.fence();
  auto degree = [&](std::size_t v) {
    const std::size_t k = std::find(f.begin(), f.end(), v) - f.begin();
    return static_cast<long>((k > 0) + (k + 1 < f.size()));
  };
  Weight w, kappa;
  for (auto z : s.z) {
    w.push_back(1 - degree(z));
    kappa.push_back(1);
  }
  for (auto x : s.x) {
    w.push_back(1);
    kappa.push_back(1 - degree(x));
  }
  return {w, kappa};
}

Complex z_m(const SincereShape& s, const DimVector& dims, long m) {
  Complex z = raw_z_m(s, dims, m);
  require_interior(z, s.host->format_set(s.points()));
  return z;
}

namespace {

SincereShape own_shape(const CombPeakSpace& u) {
  PointSet all(u.poset->size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  auto s = recognize_shape(u.poset, all);
  if (!s) throw Error(ErrorCode::NotSincere, "poset is not one of the sincere shapes");
  return *s;
}

DimVector grouped_dims(const SincereShape& s, const DimVector& d) {
  DimVector out;
  for (auto v : s.grouped()) out.push_back(d[v]);
  return out;
}

PhiReport compare(const CombPeakSpace& u, const std::function<Complex(const PointSet&)>& charge, bool strictQuadrant) {
  PhiReport rep;
  rep.whole = charge(u.support);
  if (strictQuadrant) require_interior(rep.whole, u.poset->format_set(u.support));
  rep.subspaces = proper_subspaces_typeA(u, false);
  bool strict = true;
  bool weak = true;
  for (std::size_t i = 0; i < rep.subspaces.size(); ++i) {
    Complex z = charge(rep.subspaces[i].support);
    if (strictQuadrant) require_interior(z, u.poset->format_set(rep.subspaces[i].support));
    const int c = cross_sign(rep.whole, z);
    if (c <= 0 && !rep.witness) rep.witness = i;
    strict = strict && c > 0;
    weak = weak && c >= 0;
    rep.values.push_back(z);
  }
  rep.verdict = strict ? Verdict::Stable : weak ? Verdict::Semistable : Verdict::Unstable;
  return rep;
}

}  // namespace

Complex z_m(const CombPeakSpace& u, const CentralChargeCfg& cfg) {
  SincereShape s = own_shape(u);
  Complex z = raw_z_m(s, grouped_dims(s, u.dims()), cfg.m);
  require_interior(z, u.poset->format_set(u.support));
  return z;
}

PhiReport phi_stability_check(const CombPeakSpace& u, const CentralChargeCfg& cfg) {
  SincereShape s = own_shape(u);
  const std::size_t n = u.poset->size();
  return compare(
      u, [&](const PointSet& sup) { return raw_z_m(s, grouped_dims(s, indicator(n, sup)), cfg.m); }, true);
}

PhiReport phi_stability_check(const CombPeakSpace& u, const PolygonModel& p) {
  auto vertices = [&](const PointSet& sup) {
    std::vector<std::size_t> v;
    for (auto x : sup) v.push_back(std::stoul(u.poset->label(x)));
    return charge_of_support(v, p);
  };
  PhiReport rep = compare(u, vertices, false);
  auto upper = [](const Complex& z) { return sgn(z.im) > 0; };
  if (!upper(rep.whole)) throw Error(ErrorCode::BoundaryAngle, "charge leaves the upper half plane");
  for (const auto& z : rep.values)
    if (!upper(z)) throw Error(ErrorCode::BoundaryAngle, "charge leaves the upper half plane");
  return rep;
}

PrimePolygon build_polygon_prime(const SincereShape& s, long m) {
  check_shape(s);
  if (m < 1) throw Error(ErrorCode::ShapeMismatch, "m must be positive");
  auto [w, kappa] = sincere_weights(s);
  const std::size_t r = s.r;
  // Fence-indexed weights: zw[i], xw[i] for i = 1..; xw[0] is x0 (zero unless S3).
  std::vector<Int> zw(r + 2, 0), zk(r + 2, 0), xw(r + 2, 0), xk(r + 2, 0);
  for (std::size_t i = 0; i < r; ++i) {
    zw[i + 1] = w[i];
    zk[i + 1] = kappa[i];
  }
  const std::size_t x0 = s.kind == ShapeKind::S3 ? 0 : 1;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    xw[i + x0] = w[r + i];
    xk[i + x0] = kappa[r + i];
  }

  PrimePolygon out;
  out.labels.push_back("0");
  out.coords.push_back({Rat(0), Rat(0)});
  auto point = [&](long twiceIndex, const Int& a, const Int& b) {
    return Point2{Rat(Int(twiceIndex * m) + a), Rat(Int(twiceIndex * m) + b)};
  };
  const Poset& H = *s.host;
  if (s.kind != ShapeKind::S3) {
    Int sw = 0, sk = 0;
    for (std::size_t i = 1; i <= r; ++i) {
      Int zsw = sw + zw[i], zsk = sk + zk[i];
      out.labels.push_back(H.label(s.z[i - 1]));
      out.coords.push_back(point(2 * static_cast<long>(i) - 1, zsw, zsk));
      if (i <= s.x.size()) {
        out.labels.push_back(H.label(s.x[i - 1]));
        out.coords.push_back(point(2 * static_cast<long>(i), zsw + xw[i], zsk + xk[i]));
      }
      sw = zsw + xw[i];
      sk = zsk + xk[i];
    }
  } else {
    // Dual S1(r + 1): its peaks are x0..xr and its weights are (κ, w); swap back.
    Int sw = 0, sk = 0;
    for (std::size_t i = 0; i <= r; ++i) {
      Int a = sk + xk[i], b = sw + xw[i];
      out.labels.push_back(H.label(s.x[i]));
      Point2 pt = point(2 * static_cast<long>(i) + 1, a, b);
      out.coords.push_back({pt.y, pt.x});
      if (i < r) {
        out.labels.push_back(H.label(s.z[i]));
        Point2 q = point(2 * static_cast<long>(i) + 2, a + zk[i + 1], b + zw[i + 1]);
        out.coords.push_back({q.y, q.x});
      }
      sk = a + zk[i + 1];
      sw = b + zw[i + 1];
    }
  }
  const std::vector<std::size_t> f = s.fence();
  const std::vector<std::size_t> g = s.grouped();
  for (std::size_t k = 1; k < out.coords.size(); ++k) {
    std::size_t pos = 0;
    while (g[pos] != f[k - 1]) ++pos;
    Complex e = raw_z_m(s, unit_vector(g.size(), pos), m);
    Point2 d{out.coords[k].x - out.coords[k - 1].x, out.coords[k].y - out.coords[k - 1].y};
    if (d.x != e.re || d.y != e.im)
      out.discrepancies.push_back(out.labels[k] + ": edge (" + d.x.get_str() + "," + d.y.get_str() + ") but Z_m = " +
                                  e.str());
  }
  return out;
}

}  // namespace peakstab
