#ifndef PEAKSTAB_GENERATE_HPP
#define PEAKSTAB_GENERATE_HPP

#include <random>
#include <string>
#include <vector>

#include "peakstab/poset.hpp"

namespace peakstab {

// Order matrix of the lexicographically least relabeling, as a bit string.
std::string canonical_key(const Poset& p);
// The relabeling realizing canonical_key; points labelled "1".."n".
Poset canonical_form(const Poset& p);

// All posets on exactly n points up to isomorphism, in canonical form and
// sorted by key.
std::vector<PosetPtr> all_posets(std::size_t n);
std::vector<PosetPtr> connected_posets(std::size_t n);
// Connected type-𝔸 posets with 1..maxPoints points.
std::vector<PosetPtr> type_a_posets(std::size_t maxPoints);

// Random order on n points: each pair i < j related with the given
// probability, then closed transitively; labels shuffled.
Poset random_poset(std::size_t n, double density, std::mt19937_64& rng);

}  // namespace peakstab

#endif
