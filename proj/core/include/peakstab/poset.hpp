#ifndef PEAKSTAB_POSET_HPP
#define PEAKSTAB_POSET_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "peakstab/linalg.hpp"

namespace peakstab {

// Sorted list of point indices.
using PointSet = std::vector<std::size_t>;
// Integer value per point, indexed like Poset::labels().
using DimVector = std::vector<Int>;

// Numeric-aware label order: integers compare by value and sort before
// non-numeric labels, which compare lexicographically.
bool label_less(const std::string& a, const std::string& b);

class Poset {
public:
  // covers holds pairs (a, b) meaning b covers a. The input need not be
  // reduced; the stored cover relation is the transitive reduction.
  static Poset build(const std::vector<std::string>& points,
                     const std::vector<std::pair<std::string, std::string>>& covers);
  // leq must already be reflexive, antisymmetric and transitive.
  static Poset from_order(std::vector<std::string> labels, std::vector<std::vector<char>> leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index(const std::string& label) const;
  bool has_label(const std::string& label) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b] != 0; }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const PointSet& max_points() const { return max_; }
  const PointSet& min_points() const { return min_; }
  bool is_max(std::size_t i) const { return isMax_[i] != 0; }
  // Position of a maximal point inside max_points(), or size() if not maximal.
  std::size_t max_position(std::size_t i) const { return maxPos_[i]; }
  const std::vector<std::size_t>& linear_extension() const { return linext_; }

  // Principal ideal a_▵ and its union over a set.
  PointSet down(std::size_t a) const;
  PointSet down(const PointSet& xs) const;
  PointSet up(std::size_t a) const;
  // Maximal points above a.
  PointSet max_above(std::size_t a) const;

  bool connected() const;
  // Full subposet on the given points, in the given order.
  Poset subposet(const std::vector<std::size_t>& points) const;
  // Points sorted by label_less.
  std::vector<std::size_t> label_order() const;
  std::string format_set(const PointSet& s) const;

private:
  void finish();

  std::vector<std::string> labels_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  PointSet max_;
  PointSet min_;
  std::vector<char> isMax_;
  std::vector<std::size_t> maxPos_;
  std::vector<std::size_t> linext_;
};

using PosetPtr = std::shared_ptr<const Poset>;

DimVector unit_vector(std::size_t n, std::size_t i);
DimVector indicator(std::size_t n, const PointSet& s);

}  // namespace peakstab

#endif
