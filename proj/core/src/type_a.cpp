#include "peakstab/type_a.hpp"

#include <algorithm>
#include <functional>

#include "peakstab/error.hpp"

namespace peakstab {

Poset forbidden_pattern_R1() {
  return Poset::build({"z", "a", "b", "c"}, {{"a", "z"}, {"b", "z"}, {"c", "z"}});
}

Poset forbidden_pattern_R2() {
  return Poset::build({"z1", "z2", "m", "b"}, {{"m", "z1"}, {"m", "z2"}, {"b", "m"}});
}

Poset forbidden_pattern_R3() {
  return Poset::build({"z1", "z2", "z3", "o"}, {{"o", "z1"}, {"o", "z2"}, {"o", "z3"}});
}

Poset forbidden_pattern_R4(std::size_t n) {
  const std::size_t k = n + 2;
  std::vector<std::string> pts;
  for (std::size_t i = 1; i <= k; ++i) pts.push_back("z" + std::to_string(i));
  for (std::size_t i = 1; i <= k; ++i) pts.push_back("o" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 1; i <= k; ++i) {
    covers.push_back({"o" + std::to_string(i), "z" + std::to_string(i)});
    if (i < k) covers.push_back({"o" + std::to_string(i + 1), "z" + std::to_string(i)});
  }
  covers.push_back({"o1", "z" + std::to_string(k)});
  return Poset::build(pts, covers);
}

bool is_peak_subposet(const Poset& p, const PointSet& subset) {
  for (auto s : subset)
    if (s >= p.size()) throw Error(ErrorCode::UnknownLabel, "point index out of range");
  for (auto a : subset) {
    bool maximalInSub = true;
    for (auto b : subset)
      if (p.less(a, b)) {
        maximalInSub = false;
        break;
      }
    if (maximalInSub && !p.is_max(a)) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_peak_embedding(const Poset& p, const Poset& pattern) {
  const std::size_t k = pattern.size();
  if (k > p.size()) return std::nullopt;
  // Visit pattern points so that each one after the first is comparable to an
  // earlier one whenever possible; this keeps the partial maps constrained.
  std::vector<std::size_t> order;
  std::vector<char> placed(k, 0);
  while (order.size() < k) {
    std::size_t pick = k;
    for (std::size_t v = 0; v < k && pick == k; ++v) {
      if (placed[v]) continue;
      for (auto u : order)
        if (pattern.comparable(u, v)) {
          pick = v;
          break;
        }
    }
    if (pick == k)
      for (std::size_t v = 0; v < k; ++v)
        if (!placed[v]) {
          pick = v;
          break;
        }
    placed[pick] = 1;
    order.push_back(pick);
  }

  std::vector<std::size_t> image(k, p.size());
  std::vector<char> used(p.size(), 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == k) return true;
    const std::size_t v = order[depth];
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (used[c]) continue;
      if (pattern.is_max(v) && !p.is_max(c)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t u = order[d];
        if (pattern.leq(u, v) != p.leq(image[u], c) || pattern.leq(v, u) != p.leq(c, image[u])) ok = false;
      }
      if (!ok) continue;
      image[v] = c;
      used[c] = 1;
      if (extend(depth + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

TypeAVerdict is_type_A(const Poset& p) {
  if (!p.connected()) throw Error(ErrorCode::NotConnected, "poset is not connected");
  TypeAVerdict v;
  auto report = [&](const std::string& name, const std::vector<std::size_t>& img) {
    v.typeA = false;
    v.pattern = name;
    v.witness = img;
    std::sort(v.witness.begin(), v.witness.end());
  };
  const std::pair<const char*, Poset> small[] = {
      {"R1", forbidden_pattern_R1()}, {"R2", forbidden_pattern_R2()}, {"R3", forbidden_pattern_R3()}};
  for (const auto& [name, pat] : small)
    if (auto img = find_peak_embedding(p, pat)) {
      report(name, *img);
      return v;
    }
  const std::size_t peaks = p.max_points().size();
  const std::size_t rest = p.size() - peaks;
  for (std::size_t k = 2; k <= peaks && k <= rest; ++k)
    if (auto img = find_peak_embedding(p, forbidden_pattern_R4(k - 2))) {
      report("R4," + std::to_string(k - 2), *img);
      return v;
    }
  return v;
}

}  // namespace peakstab
