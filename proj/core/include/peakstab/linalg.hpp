#ifndef PEAKSTAB_LINALG_HPP
#define PEAKSTAB_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace peakstab {

using Int = mpz_class;
using Rat = mpq_class;

// Dense matrix over the rationals. Subspaces are represented by the column
// span of a matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Rat>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rat> col(std::size_t c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& other) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix hcat(const Matrix& a, const Matrix& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const Matrix& m);
// Independent columns spanning the same space (a subset of the input columns).
Matrix column_basis(const Matrix& m);
// Columns form a basis of { v : m v = 0 }.
Matrix kernel(const Matrix& m);
// True iff col(b) is contained in col(a).
bool column_space_contains(const Matrix& a, const Matrix& b);
bool same_column_space(const Matrix& a, const Matrix& b);
// Basis of col(a) intersected with col(b).
Matrix intersect_columns(const Matrix& a, const Matrix& b);

}  // namespace peakstab

#endif
