#include "peakstab/poset.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "peakstab/error.hpp"

namespace peakstab {

namespace {

bool parse_long(const std::string& s, long long& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

bool label_less(const std::string& a, const std::string& b) {
  long long x = 0, y = 0;
  bool na = parse_long(a, x), nb = parse_long(b, y);
  if (na && nb) return x < y || (x == y && a < b);
  if (na != nb) return na;
  return a < b;
}

Poset Poset::build(const std::vector<std::string>& points,
                   const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!idx.emplace(points[i], i).second)
      throw Error(ErrorCode::DuplicateLabel, "label '" + points[i] + "' appears twice", points[i]);
  }
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : covers) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw Error(ErrorCode::UnknownLabel, "cover references '" + a + "'", a);
    if (ib == idx.end()) throw Error(ErrorCode::UnknownLabel, "cover references '" + b + "'", b);
    succ[ia->second].push_back(ib->second);
  }

  // Cycle search on the cover digraph, reporting one closed path.
  std::vector<int> color(n, 0);
  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> cycle;
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    color[v] = 1;
    for (auto w : succ[v]) {
      if (color[w] == 1) {
        cycle.push_back(w);
        for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return true;
      }
      if (color[w] == 0) {
        parent[w] = v;
        if (dfs(w)) return true;
      }
    }
    color[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] == 0 && dfs(v)) {
      std::string path;
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (k) path += " -> ";
        path += points[cycle[k]];
      }
      throw Error(ErrorCode::CycleDetected, "cover relation has a cycle " + path, path);
    }
  }

  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    leq[s][s] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : succ[v])
        if (!leq[s][w]) {
          leq[s][w] = 1;
          stack.push_back(w);
        }
    }
  }
  return from_order(points, std::move(leq));
}

Poset Poset::from_order(std::vector<std::string> labels, std::vector<std::vector<char>> leq) {
  Poset p;
  p.labels_ = std::move(labels);
  p.leq_ = std::move(leq);
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = labels_.size();
  covers_.clear();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (less(a, c) && less(c, b)) direct = false;
      if (direct) covers_.emplace_back(a, b);
    }
  max_.clear();
  min_.clear();
  isMax_.assign(n, 0);
  maxPos_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    bool top = true, bottom = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (less(a, b)) top = false;
      if (less(b, a)) bottom = false;
    }
    if (top) {
      maxPos_[a] = max_.size();
      max_.push_back(a);
      isMax_[a] = 1;
    }
    if (bottom) min_.push_back(a);
  }
  // Kahn's algorithm, always releasing the smallest available index.
  linext_.clear();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& c : covers_) ++indeg[c.second];
  std::vector<char> done(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    done[pick] = 1;
    linext_.push_back(pick);
    for (const auto& c : covers_)
      if (c.first == pick) --indeg[c.second];
  }
}

std::size_t Poset::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorCode::UnknownLabel, "no point labelled '" + label + "'", label);
}

bool Poset::has_label(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

PointSet Poset::down(std::size_t a) const {
  PointSet out;
  for (std::size_t x = 0; x < size(); ++x)
    if (leq(x, a)) out.push_back(x);
  return out;
}

PointSet Poset::down(const PointSet& xs) const {
  PointSet out;
  for (std::size_t x = 0; x < size(); ++x)
    for (auto a : xs)
      if (leq(x, a)) {
        out.push_back(x);
        break;
      }
  return out;
}

PointSet Poset::up(std::size_t a) const {
  PointSet out;
  for (std::size_t x = 0; x < size(); ++x)
    if (leq(a, x)) out.push_back(x);
  return out;
}

PointSet Poset::max_above(std::size_t a) const {
  PointSet out;
  for (auto z : max_)
    if (leq(a, z)) out.push_back(z);
  return out;
}

bool Poset::connected() const {
  const std::size_t n = size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (!seen[w] && comparable(v, w)) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

Poset Poset::subposet(const std::vector<std::size_t>& points) const {
  std::vector<std::string> labels;
  std::vector<std::vector<char>> leq(points.size(), std::vector<char>(points.size(), 0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back(labels_[points[i]]);
    for (std::size_t j = 0; j < points.size(); ++j) leq[i][j] = leq_[points[i]][points[j]];
  }
  return from_order(std::move(labels), std::move(leq));
}

std::vector<std::size_t> Poset::label_order() const {
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return label_less(labels_[a], labels_[b]); });
  return order;
}

std::string Poset::format_set(const PointSet& s) const {
  std::vector<std::size_t> sorted = s;
  std::sort(sorted.begin(), sorted.end(),
            [&](std::size_t a, std::size_t b) { return label_less(labels_[a], labels_[b]); });
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < sorted.size(); ++k) os << (k ? "," : "") << labels_[sorted[k]];
  os << '}';
  return os.str();
}

DimVector unit_vector(std::size_t n, std::size_t i) {
  DimVector v(n, 0);
  v[i] = 1;
  return v;
}

DimVector indicator(std::size_t n, const PointSet& s) {
  DimVector v(n, 0);
  for (auto i : s) v[i] = 1;
  return v;
}

}  // namespace peakstab
