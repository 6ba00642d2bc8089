#include "peakstab/shapes.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "peakstab/error.hpp"
#include "peakstab/type_a.hpp"

namespace peakstab {

const char* to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::S1: return "S1";
    case ShapeKind::S2: return "S2";
    case ShapeKind::S3: return "S3";
  }
  return "?";
}

std::vector<std::size_t> SincereShape::grouped() const {
  std::vector<std::size_t> g = z;
  g.insert(g.end(), x.begin(), x.end());
  return g;
}

std::vector<std::size_t> SincereShape::fence() const {
  std::vector<std::size_t> f;
  std::size_t xi = 0;
  if (kind == ShapeKind::S3) f.push_back(x[xi++]);
  for (std::size_t i = 0; i < z.size(); ++i) {
    f.push_back(z[i]);
    if (xi < x.size()) f.push_back(x[xi++]);
  }
  return f;
}

PointSet SincereShape::points() const {
  PointSet s = grouped();
  std::sort(s.begin(), s.end());
  return s;
}

std::string SincereShape::name() const {
  return std::string(to_string(kind)) + "(" + std::to_string(r) + ")";
}

SincereShape standard_shape(ShapeKind kind, std::size_t r) {
  if (r == 0) throw Error(ErrorCode::NotSincere, "shapes need at least one peak");
  // Fence positions: tops at odd or even places depending on the kind.
  const bool startBottom = kind == ShapeKind::S3;
  const std::size_t len = kind == ShapeKind::S1 ? 2 * r - 1 : kind == ShapeKind::S2 ? 2 * r : 2 * r + 1;
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= len; ++k) labels.push_back(std::to_string(k));
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    const bool top = (k % 2 == 0) != startBottom;
    if (top) covers.push_back({labels[k + 1], labels[k]});
    else covers.push_back({labels[k], labels[k + 1]});
  }
  auto p = std::make_shared<const Poset>(Poset::build(labels, covers));
  SincereShape s;
  s.kind = kind;
  s.r = r;
  s.host = p;
  for (std::size_t k = 0; k < len; ++k) {
    const bool top = (k % 2 == 0) != startBottom;
    (top ? s.z : s.x).push_back(p->index(labels[k]));
  }
  return s;
}

PosetPtr shape_poset(const SincereShape& s) {
  return std::make_shared<const Poset>(s.host->subposet(s.grouped()));
}

namespace {

// seq alternates top/bottom; tops are maximal in the host.
SincereShape shape_from_sequence(PosetPtr p, std::vector<std::size_t> seq) {
  auto top = [&](std::size_t i) { return p->is_max(i); };
  if (seq.size() > 1 && !top(seq.front()) && top(seq.back())) std::reverse(seq.begin(), seq.end());
  if (top(seq.front()) == top(seq.back())) {
    std::vector<std::size_t> rev(seq.rbegin(), seq.rend());
    seq = std::min(seq, rev);
  }
  SincereShape s;
  s.host = p;
  for (auto v : seq) (top(v) ? s.z : s.x).push_back(v);
  s.r = s.z.size();
  const bool startTop = top(seq.front());
  const bool endTop = top(seq.back());
  if (startTop && endTop) s.kind = ShapeKind::S1;
  else if (startTop) s.kind = ShapeKind::S2;
  else s.kind = ShapeKind::S3;
  return s;
}

}  // namespace

std::vector<SincereShape> sincere_fences(PosetPtr p) {
  const Poset& P = *p;
  std::set<PointSet> seen;
  std::vector<SincereShape> out;
  std::vector<std::size_t> seq;
  std::vector<char> used(P.size(), 0);

  auto record = [&]() {
    if (seq.size() == 1 && !P.is_max(seq[0])) return;
    bool hasTop = false;
    for (auto v : seq) hasTop = hasTop || P.is_max(v);
    if (!hasTop) return;
    PointSet key = seq;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.push_back(shape_from_sequence(p, seq));
  };

  std::function<void()> extend = [&]() {
    record();
    const std::size_t last = seq.back();
    const bool lastTop = P.is_max(last);
    for (std::size_t v = 0; v < P.size(); ++v) {
      if (used[v]) continue;
      if (lastTop ? !P.less(v, last) : !(P.is_max(v) && P.less(last, v))) continue;
      bool clash = false;
      for (std::size_t k = 0; k + 1 < seq.size() && !clash; ++k) clash = P.comparable(seq[k], v);
      if (clash) continue;
      used[v] = 1;
      seq.push_back(v);
      extend();
      seq.pop_back();
      used[v] = 0;
    }
  };

  for (std::size_t v = 0; v < P.size(); ++v) {
    used[v] = 1;
    seq.assign(1, v);
    extend();
    used[v] = 0;
  }
  std::sort(out.begin(), out.end(),
            [](const SincereShape& a, const SincereShape& b) { return a.points() < b.points(); });
  return out;
}

std::vector<SincereShape> sincere_subposets(PosetPtr p) {
  TypeAVerdict v = is_type_A(*p);
  if (!v.typeA) throw Error(ErrorCode::NotTypeA, "poset contains " + v.pattern, p->format_set(v.witness));
  return sincere_fences(p);
}

std::optional<SincereShape> recognize_shape(PosetPtr p, const PointSet& points) {
  if (points.empty()) return std::nullopt;
  const Poset& P = *p;
  for (auto v : points)
    if (!P.is_max(v)) {
      bool below = false;
      for (auto w : points) below = below || P.less(v, w);
      if (!below) return std::nullopt;
    }
  // A fence has a path as comparability graph; walk it from an end.
  std::vector<std::vector<std::size_t>> adj(points.size());
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = 0; b < points.size(); ++b)
      if (a != b && P.comparable(points[a], points[b])) adj[a].push_back(b);
  std::size_t start = 0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (adj[a].size() > 2) return std::nullopt;
    if (adj[a].size() < 2) start = a;
  }
  std::vector<std::size_t> seq{points[start]};
  std::vector<char> used(points.size(), 0);
  used[start] = 1;
  for (std::size_t cur = start;;) {
    std::size_t next = points.size();
    for (auto b : adj[cur])
      if (!used[b]) next = b;
    if (next == points.size()) break;
    used[next] = 1;
    seq.push_back(points[next]);
    cur = next;
  }
  if (seq.size() != points.size()) return std::nullopt;
  if (seq.size() > 2 && P.comparable(seq.front(), seq.back())) return std::nullopt;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    const bool top = P.is_max(seq[k]);
    if (top == P.is_max(seq[k + 1])) return std::nullopt;
    if (top ? !P.less(seq[k + 1], seq[k]) : !P.less(seq[k], seq[k + 1])) return std::nullopt;
  }
  bool hasTop = false;
  for (auto v : seq) hasTop = hasTop || P.is_max(v);
  if (!hasTop) return std::nullopt;
  return shape_from_sequence(p, seq);
}

ExplicitPeakSpace sincere_rep(const SincereShape& s) {
  PosetPtr sp = shape_poset(s);
  PointSet all(sp->size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return materialize(CombPeakSpace{sp, all});
}

ExplicitPeakSpace lift_T(const SincereShape& s, const ExplicitPeakSpace& u, PosetPtr p) {
  const Poset& P = *p;
  const std::vector<std::size_t> g = s.grouped();
  if (!u.poset || u.poset->size() != g.size())
    throw Error(ErrorCode::ShapeMismatch, "representation does not live on the shape");
  if (P.size() != s.host->size()) throw Error(ErrorCode::ShapeMismatch, "host poset differs from the shape's");

  ExplicitPeakSpace out;
  out.poset = p;
  out.ambientDims.assign(P.max_points().size(), 0);
  for (std::size_t k = 0; k < g.size(); ++k)
    if (u.poset->is_max(k)) {
      if (!P.is_max(g[k])) throw Error(ErrorCode::InvariantViolated, "shape is not a peak-subposet");
      out.ambientDims[P.max_position(g[k])] = u.ambientDims[u.poset->max_position(k)];
    }
  // Row map from the shape ambient space into the host ambient space.
  const std::size_t total = out.total_dim();
  std::vector<std::size_t> rowMap(u.total_dim());
  for (std::size_t k = 0; k < g.size(); ++k)
    if (u.poset->is_max(k)) {
      const std::size_t src = u.offset(u.poset->max_position(k));
      const std::size_t dst = out.offset(P.max_position(g[k]));
      for (std::size_t d = 0; d < u.ambientDims[u.poset->max_position(k)]; ++d) rowMap[src + d] = dst + d;
    }
  std::vector<Matrix> embedded;
  for (std::size_t k = 0; k < g.size(); ++k) {
    Matrix m(total, u.bases[k].cols());
    for (std::size_t r = 0; r < u.bases[k].rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(rowMap[r], c) = u.bases[k](r, c);
    embedded.push_back(std::move(m));
  }
  for (std::size_t x = 0; x < P.size(); ++x) {
    Matrix span(total, 0);
    for (std::size_t k = 0; k < g.size(); ++k)
      if (P.leq(g[k], x)) span = hcat(span, project(out, x, embedded[k]));
    out.bases.push_back(column_basis(span));
  }
  PeakCheck chk = check_peak_space(out);
  if (!chk.ok) throw Error(ErrorCode::InvariantViolated, "lift is not a peak space: " + chk.violation);
  return out;
}

PointSet lifted_support(const SincereShape& s) {
  const Poset& P = *s.host;
  PointSet out;
  for (std::size_t v = 0; v < P.size(); ++v) {
    bool in = false;
    for (auto y : s.grouped())
      for (auto z : s.z) in = in || (P.leq(y, v) && P.leq(v, z));
    if (in) out.push_back(v);
  }
  return out;
}

}  // namespace peakstab
