#include "peakstab/incidence.hpp"

#include <algorithm>

#include "peakstab/error.hpp"

namespace peakstab {

namespace {

// Inverse of the incidence matrix laid out along a linear extension, where it
// is upper unitriangular. Column t is solved top to bottom by back-substitution.
IntMatrix unitriangular_inverse(const IntMatrix& c) {
  const std::size_t n = c.size();
  IntMatrix inv(n, std::vector<Int>(n, 0));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t ii = n; ii-- > 0;) {
      Int acc = (ii == t) ? 1 : 0;
      for (std::size_t k = ii + 1; k < n; ++k) acc -= c[ii][k] * inv[k][t];
      inv[ii][t] = acc;
    }
  }
  return inv;
}

}  // namespace

IncidenceMatrix incidence_matrix(const Poset& p) { return incidence_matrix(p, p.linear_extension()); }

IncidenceMatrix incidence_matrix(const Poset& p, const std::vector<std::size_t>& order) {
  const std::size_t n = p.size();
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool perm = sorted.size() == n;
  for (std::size_t i = 0; perm && i < n; ++i) perm = sorted[i] == i;
  if (!perm) throw Error(ErrorCode::DimensionMismatch, "ordering is not a permutation of the points");

  const auto& ext = p.linear_extension();
  IntMatrix tri(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tri[i][j] = p.leq(ext[i], ext[j]) ? 1 : 0;
  IntMatrix triInv = unitriangular_inverse(tri);

  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[ext[i]] = i;

  IncidenceMatrix out;
  out.order = order;
  out.entries.assign(n, std::vector<Int>(n, 0));
  out.inverseEntries.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.entries[i][j] = p.leq(order[i], order[j]) ? 1 : 0;
      out.inverseEntries[i][j] = triInv[pos[order[i]]][pos[order[j]]];
    }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool is_identity(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Int bilinear_form(const IncidenceMatrix& c, const DimVector& a, const DimVector& b) {
  const std::size_t n = c.order.size();
  if (a.size() != n || b.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from poset size");
  Int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& ai = a[c.order[i]];
    if (sgn(ai) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) total += ai * c.inverseEntries[i][j] * b[c.order[j]];
  }
  return total;
}

Int bilinear_form(const Poset& p, const DimVector& a, const DimVector& b) {
  return bilinear_form(incidence_matrix(p), a, b);
}

}  // namespace peakstab
