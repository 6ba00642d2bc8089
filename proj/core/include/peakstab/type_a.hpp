#ifndef PEAKSTAB_TYPE_A_HPP
#define PEAKSTAB_TYPE_A_HPP

#include <optional>
#include <string>

#include "peakstab/poset.hpp"

namespace peakstab {

struct TypeAVerdict {
  bool typeA = true;
  // Name of the forbidden pattern found: "R1", "R2", "R3" or "R4,n".
  std::string pattern;
  PointSet witness;
};

// Forbidden peak-subposets. R4,n has n + 2 maxima and n + 2 minima.
Poset forbidden_pattern_R1();
Poset forbidden_pattern_R2();
Poset forbidden_pattern_R3();
Poset forbidden_pattern_R4(std::size_t n);

bool is_peak_subposet(const Poset& p, const PointSet& subset);

// Finds a full subposet of p isomorphic to `pattern` whose maximal points are
// maximal in p. Returns the image points in pattern order.
std::optional<std::vector<std::size_t>> find_peak_embedding(const Poset& p, const Poset& pattern);

// Throws NotConnected for a disconnected poset.
TypeAVerdict is_type_A(const Poset& p);

}  // namespace peakstab

#endif
