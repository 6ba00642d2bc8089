#ifndef PEAKSTAB_QUIVER_HPP
#define PEAKSTAB_QUIVER_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "peakstab/poset.hpp"

namespace peakstab {

enum class Orientation { Right, Left };

// Dynkin quiver of type A with vertices 1..n from left to right.
// edges[i - 1] orients the edge {i, i+1}; Right means i -> i+1.
struct QuiverA {
  std::size_t n = 0;
  std::vector<Orientation> edges;

  static QuiverA from_arrows(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows);

  bool right(std::size_t i) const { return edges[i - 1] == Orientation::Right; }
  std::vector<std::pair<std::size_t, std::size_t>> arrows() const;
  bool is_sink(std::size_t v) const;
  bool is_source(std::size_t v) const;
  std::vector<std::size_t> sinks() const;
  // Vertices with a path to z, i.e. the support of the injective I(z).
  std::vector<std::size_t> injective_support(std::size_t z) const;
  std::string describe() const;
};

struct AlienArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  bool operator==(const AlienArrow&) const = default;
};

struct AlienSet {
  std::vector<AlienArrow> arrows;
};

struct AlienViolation {
  // One of 'a', 'b', 'c', 'd'.
  char condition = 0;
  std::size_t arrowIndex = 0;
  std::string message;
};

// Every violated condition, ordered by condition letter then arrow.
struct AlienVerdict {
  bool valid = true;
  std::vector<AlienViolation> violations;

  bool violates(char condition) const;
};

AlienVerdict validate_alien_set(const QuiverA& q, const AlienSet& f);

// The sink strictly between the endpoints of an alien arrow whose injective
// support holds both endpoints. Throws InvalidAlien if there is none.
std::size_t alien_sink(const QuiverA& q, const AlienArrow& a);

// x ⪯ y iff there is a path x ⇝ y in Q^F. Points are labelled "1".."n".
Poset poset_of_quiver(const QuiverA& q, const AlienSet& f);

std::vector<QuiverA> all_orientations(std::size_t n);
// Every alien set for q, arrows listed in increasing (source, target) order.
std::vector<AlienSet> all_alien_sets(const QuiverA& q);

}  // namespace peakstab

#endif
