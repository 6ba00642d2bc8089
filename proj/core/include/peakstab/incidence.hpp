#ifndef PEAKSTAB_INCIDENCE_HPP
#define PEAKSTAB_INCIDENCE_HPP

#include <vector>

#include "peakstab/poset.hpp"

namespace peakstab {

using IntMatrix = std::vector<std::vector<Int>>;

// Rows and columns follow `order`; entries[i][j] = 1 iff order[i] ⪯ order[j].
struct IncidenceMatrix {
  std::vector<std::size_t> order;
  IntMatrix entries;
  IntMatrix inverseEntries;
};

// Uses the poset's linear extension.
IncidenceMatrix incidence_matrix(const Poset& p);
// Uses an explicit ordering of all points.
IncidenceMatrix incidence_matrix(const Poset& p, const std::vector<std::size_t>& order);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
bool is_identity(const IntMatrix& m);

// b(a, b) = a · C⁻¹ · bᵀ with vectors indexed by point index.
Int bilinear_form(const Poset& p, const DimVector& a, const DimVector& b);
Int bilinear_form(const IncidenceMatrix& c, const DimVector& a, const DimVector& b);

}  // namespace peakstab

#endif
