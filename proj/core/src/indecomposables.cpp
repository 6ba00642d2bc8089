#include "peakstab/indecomposables.hpp"

#include <algorithm>

#include "peakstab/error.hpp"
#include "peakstab/type_a.hpp"

namespace peakstab {

namespace {

void require_type_a(const Poset& p) {
  TypeAVerdict v = is_type_A(p);
  if (!v.typeA) throw Error(ErrorCode::NotTypeA, "poset contains " + v.pattern, p.format_set(v.witness));
}

}  // namespace

std::vector<Indecomposable> enumerate_indecomposables_unchecked(PosetPtr p) {
  std::vector<Indecomposable> out;
  for (auto& s : sincere_fences(p)) {
    CombPeakSpace space{p, lifted_support(s)};
    out.push_back(Indecomposable{std::move(s), std::move(space)});
  }
  std::sort(out.begin(), out.end(), [](const Indecomposable& a, const Indecomposable& b) {
    return a.space.support != b.space.support ? a.space.support < b.space.support
                                              : a.shape.points() < b.shape.points();
  });
  return out;
}

std::vector<Indecomposable> enumerate_indecomposables(PosetPtr p) {
  require_type_a(*p);
  return enumerate_indecomposables_unchecked(p);
}

PointSet subspace_support(const CombPeakSpace& u, const PointSet& peaks) {
  const Poset& P = *u.poset;
  PointSet rest;
  for (auto z : u.peaks())
    if (!std::binary_search(peaks.begin(), peaks.end(), z)) rest.push_back(z);
  PointSet in = P.down(peaks);
  PointSet out = P.down(rest);
  PointSet s;
  for (auto x : u.support)
    if (std::binary_search(in.begin(), in.end(), x) && !std::binary_search(out.begin(), out.end(), x))
      s.push_back(x);
  return s;
}

std::vector<ProperSubspace> proper_subspaces_typeA(const CombPeakSpace& u, bool checkTypeA) {
  if (checkTypeA) require_type_a(*u.poset);
  const PointSet peaks = u.peaks();
  const std::size_t k = peaks.size();
  std::vector<ProperSubspace> out;
  if (k < 2) return out;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    ProperSubspace w;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) w.peaks.push_back(peaks[b]);
    w.support = subspace_support(u, w.peaks);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace peakstab
