#include "peakstab/peak_space.hpp"

#include <numeric>
#include <sstream>

#include "peakstab/error.hpp"

namespace peakstab {

std::size_t ExplicitPeakSpace::total_dim() const {
  return std::accumulate(ambientDims.begin(), ambientDims.end(), std::size_t{0});
}

std::size_t ExplicitPeakSpace::offset(std::size_t maxPos) const {
  return std::accumulate(ambientDims.begin(), ambientDims.begin() + static_cast<long>(maxPos), std::size_t{0});
}

DimVector ExplicitPeakSpace::dims() const {
  DimVector d(bases.size());
  for (std::size_t x = 0; x < bases.size(); ++x) d[x] = static_cast<unsigned long>(rank(bases[x]));
  return d;
}

PointSet ExplicitPeakSpace::support() const {
  PointSet s;
  for (std::size_t x = 0; x < bases.size(); ++x)
    if (rank(bases[x]) > 0) s.push_back(x);
  return s;
}

namespace {

void check_shape(const ExplicitPeakSpace& u) {
  if (!u.poset) throw Error(ErrorCode::ShapeMismatch, "peak space has no poset");
  if (u.ambientDims.size() != u.poset->max_points().size())
    throw Error(ErrorCode::ShapeMismatch, "one ambient dimension per maximal point is required");
  if (u.bases.size() != u.poset->size())
    throw Error(ErrorCode::ShapeMismatch, "one basis matrix per point is required");
  const std::size_t total = u.total_dim();
  for (std::size_t x = 0; x < u.bases.size(); ++x)
    if (u.bases[x].rows() != total)
      throw Error(ErrorCode::ShapeMismatch, "basis of point " + u.poset->label(x) + " has wrong row count");
}

Matrix block_basis(const ExplicitPeakSpace& u, std::size_t maxPos) {
  Matrix m(u.total_dim(), u.ambientDims[maxPos]);
  const std::size_t off = u.offset(maxPos);
  for (std::size_t k = 0; k < u.ambientDims[maxPos]; ++k) m(off + k, k) = 1;
  return m;
}

}  // namespace

PeakCheck check_peak_space(const ExplicitPeakSpace& u) {
  check_shape(u);
  const Poset& p = *u.poset;
  PeakCheck out;
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.violation = why;
    return out;
  };
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t zp = 0; zp < p.max_points().size(); ++zp) {
      const std::size_t z = p.max_points()[zp];
      if (p.leq(x, z)) continue;
      const std::size_t off = u.offset(zp);
      for (std::size_t r = off; r < off + u.ambientDims[zp]; ++r)
        for (std::size_t c = 0; c < u.bases[x].cols(); ++c)
          if (sgn(u.bases[x](r, c)) != 0)
            return fail("pi_" + p.label(z) + "(U_" + p.label(x) + ") is nonzero although " + p.label(x) +
                        " is not below " + p.label(z));
    }
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      if (!column_space_contains(u.bases[y], project(u, y, u.bases[x])))
        return fail("pi_" + p.label(y) + "(U_" + p.label(x) + ") is not contained in U_" + p.label(y));
    }
  for (std::size_t zp = 0; zp < p.max_points().size(); ++zp) {
    const std::size_t z = p.max_points()[zp];
    if (!same_column_space(u.bases[z], block_basis(u, zp)))
      return fail("U_" + p.label(z) + " is not the ambient summand at " + p.label(z));
  }
  return out;
}

ExplicitPeakSpace zero_space(PosetPtr poset) {
  ExplicitPeakSpace u;
  u.poset = poset;
  u.ambientDims.assign(poset->max_points().size(), 0);
  u.bases.assign(poset->size(), Matrix(0, 0));
  return u;
}

ExplicitPeakSpace simple_at(PosetPtr poset, std::size_t z) {
  if (!poset->is_max(z)) throw Error(ErrorCode::ShapeMismatch, "simple peak spaces live at maximal points");
  ExplicitPeakSpace u;
  u.poset = poset;
  u.ambientDims.assign(poset->max_points().size(), 0);
  u.ambientDims[poset->max_position(z)] = 1;
  u.bases.assign(poset->size(), Matrix(1, 0));
  u.bases[z] = Matrix(1, 1);
  u.bases[z](0, 0) = 1;
  return u;
}

Matrix project(const ExplicitPeakSpace& u, std::size_t y, const Matrix& m) {
  const Poset& p = *u.poset;
  Matrix out = m;
  for (std::size_t zp = 0; zp < p.max_points().size(); ++zp) {
    if (p.leq(y, p.max_points()[zp])) continue;
    const std::size_t off = u.offset(zp);
    for (std::size_t r = off; r < off + u.ambientDims[zp]; ++r)
      for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = 0;
  }
  return out;
}

AdmissibleChoice admissible_full(const ExplicitPeakSpace& u) {
  AdmissibleChoice k;
  for (auto d : u.ambientDims) k.push_back(Matrix::identity(d));
  return k;
}

AdmissibleChoice admissible_zero(const ExplicitPeakSpace& u) {
  AdmissibleChoice k;
  for (auto d : u.ambientDims) k.push_back(Matrix(d, 0));
  return k;
}

AdmissibleChoice admissible_subset(const ExplicitPeakSpace& u, const PointSet& peaks) {
  AdmissibleChoice k = admissible_zero(u);
  for (auto z : peaks) {
    const std::size_t zp = u.poset->max_position(z);
    if (zp >= k.size()) throw Error(ErrorCode::ShapeMismatch, "admissible subsets use maximal points only");
    k[zp] = Matrix::identity(u.ambientDims[zp]);
  }
  return k;
}

ExplicitPeakSpace restrict_to_admissible(const ExplicitPeakSpace& u, const AdmissibleChoice& k) {
  check_shape(u);
  if (k.size() != u.ambientDims.size())
    throw Error(ErrorCode::ShapeMismatch, "admissible choice needs one block per maximal point");
  std::vector<Matrix> blocks;
  std::size_t newTotal = 0;
  for (std::size_t zp = 0; zp < k.size(); ++zp) {
    if (k[zp].rows() != u.ambientDims[zp])
      throw Error(ErrorCode::ShapeMismatch, "admissible block has the wrong number of rows");
    blocks.push_back(column_basis(k[zp]));
    newTotal += blocks.back().cols();
  }
  Matrix kAmbient(u.total_dim(), newTotal);
  ExplicitPeakSpace out;
  out.poset = u.poset;
  for (std::size_t zp = 0, col = 0; zp < blocks.size(); ++zp) {
    const std::size_t off = u.offset(zp);
    for (std::size_t c = 0; c < blocks[zp].cols(); ++c, ++col)
      for (std::size_t r = 0; r < blocks[zp].rows(); ++r) kAmbient(off + r, col) = blocks[zp](r, c);
    out.ambientDims.push_back(blocks[zp].cols());
  }
  for (std::size_t x = 0; x < u.bases.size(); ++x) {
    const Matrix& ux = u.bases[x];
    if (ux.cols() == 0 || newTotal == 0) {
      out.bases.push_back(Matrix(newTotal, 0));
      continue;
    }
    Matrix ker = kernel(hcat(ux, kAmbient));
    Matrix coords(newTotal, ker.cols());
    for (std::size_t r = 0; r < newTotal; ++r)
      for (std::size_t c = 0; c < ker.cols(); ++c) coords(r, c) = -ker(ux.cols() + r, c);
    out.bases.push_back(column_basis(coords));
  }
  return out;
}

DimVector quotient_dims(const ExplicitPeakSpace& u, const AdmissibleChoice& k) {
  DimVector whole = u.dims();
  DimVector sub = restrict_to_admissible(u, k).dims();
  for (std::size_t x = 0; x < whole.size(); ++x) whole[x] -= sub[x];
  return whole;
}

DimVector coordinate_vector(const ExplicitPeakSpace& u) {
  check_shape(u);
  const Poset& p = *u.poset;
  DimVector cdn(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    const std::size_t dx = rank(u.bases[x]);
    if (p.is_max(x)) {
      cdn[x] = static_cast<unsigned long>(dx);
      continue;
    }
    Matrix below(u.total_dim(), 0);
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(y, x)) below = hcat(below, project(u, x, u.bases[y]));
    if (!column_space_contains(u.bases[x], below))
      throw Error(ErrorCode::InvariantViolated, "images from below leave U_" + p.label(x), p.label(x));
    cdn[x] = static_cast<unsigned long>(dx - rank(below));
  }
  return cdn;
}

PointSet coordinate_support(const ExplicitPeakSpace& u) {
  DimVector cdn = coordinate_vector(u);
  PointSet s;
  for (std::size_t x = 0; x < cdn.size(); ++x)
    if (sgn(cdn[x]) != 0) s.push_back(x);
  return s;
}

PointSet CombPeakSpace::peaks() const {
  PointSet s;
  for (auto x : support)
    if (poset->is_max(x)) s.push_back(x);
  return s;
}

ExplicitPeakSpace materialize(const CombPeakSpace& c) {
  const Poset& p = *c.poset;
  std::vector<char> in(p.size(), 0);
  for (auto x : c.support) in[x] = 1;
  ExplicitPeakSpace u;
  u.poset = c.poset;
  for (auto z : p.max_points()) u.ambientDims.push_back(in[z] ? 1 : 0);
  const std::size_t total = u.total_dim();
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!in[x]) {
      u.bases.push_back(Matrix(total, 0));
      continue;
    }
    Matrix v(total, 1);
    for (std::size_t zp = 0; zp < p.max_points().size(); ++zp)
      if (in[p.max_points()[zp]] && p.leq(x, p.max_points()[zp])) v(u.offset(zp), 0) = 1;
    u.bases.push_back(column_basis(v));
  }
  return u;
}

std::string dump(const ExplicitPeakSpace& u) {
  const Poset& p = *u.poset;
  std::ostringstream os;
  os << "ambient";
  for (std::size_t zp = 0; zp < u.ambientDims.size(); ++zp)
    os << ' ' << p.label(p.max_points()[zp]) << ':' << u.ambientDims[zp];
  os << '\n';
  for (auto x : p.label_order()) {
    os << p.label(x) << ':';
    const Matrix& b = u.bases[x];
    for (std::size_t c = 0; c < b.cols(); ++c) {
      os << " (";
      for (std::size_t r = 0; r < b.rows(); ++r) os << (r ? "," : "") << b(r, c).get_str();
      os << ')';
    }
    if (b.cols() == 0) os << " 0";
    os << '\n';
  }
  return os.str();
}

}  // namespace peakstab
