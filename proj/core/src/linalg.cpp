#include "peakstab/linalg.hpp"

#include <stdexcept>

namespace peakstab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const std::vector<Rat>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<Rat> Matrix::col(std::size_t c) const {
  std::vector<Rat> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    Rat inv = 1 / m(row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, c)) == 0) continue;
      Rat f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref(copy).size();
}

Matrix column_basis(const Matrix& m) {
  Matrix copy = m;
  auto pivots = rref(copy);
  Matrix out(m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, pivots[k]);
  return out;
}

Matrix kernel(const Matrix& m) {
  Matrix red = m;
  auto pivots = rref(red);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : pivots) isPivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!isPivot[c]) free.push_back(c);
  Matrix out(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], k) = -red(i, free[k]);
  }
  return out;
}

bool column_space_contains(const Matrix& a, const Matrix& b) {
  if (b.cols() == 0) return true;
  return rank(hcat(a, b)) == rank(a);
}

bool same_column_space(const Matrix& a, const Matrix& b) {
  std::size_t ra = rank(a);
  return ra == rank(b) && rank(hcat(a, b)) == ra;
}

Matrix intersect_columns(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
  Matrix sys(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) sys(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) sys(r, a.cols() + c) = -b(r, c);
  }
  Matrix ker = kernel(sys);
  Matrix coeff(a.cols(), ker.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < ker.cols(); ++c) coeff(r, c) = ker(r, c);
  return column_basis(a * coeff);
}

}  // namespace peakstab
