#include "peakstab/quiver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "peakstab/error.hpp"

namespace peakstab {

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency adjacency(const QuiverA& q, const AlienSet& f) {
  Adjacency adj(q.n + 1);
  for (const auto& [a, b] : q.arrows()) adj[a].push_back(b);
  for (const auto& al : f.arrows) adj[al.source].push_back(al.target);
  return adj;
}

std::vector<std::vector<char>> reachability(const Adjacency& adj, std::size_t n) {
  std::vector<std::vector<char>> r(n + 1, std::vector<char>(n + 1, 0));
  for (std::size_t s = 1; s <= n; ++s) {
    std::vector<std::size_t> stack{s};
    r[s][s] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!r[s][w]) {
          r[s][w] = 1;
          stack.push_back(w);
        }
    }
  }
  return r;
}

bool acyclic(const Adjacency& adj, std::size_t n) {
  auto r = reachability(adj, n);
  for (std::size_t v = 1; v <= n; ++v)
    for (auto w : adj[v])
      if (r[w][v]) return false;
  return true;
}

// Number of distinct paths from s to t; the quiver must be acyclic.
std::size_t path_count(const Adjacency& adj, std::size_t s, std::size_t t) {
  std::vector<long long> memo(adj.size(), -1);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t v) -> std::size_t {
    if (v == t) return 1;
    if (memo[v] >= 0) return static_cast<std::size_t>(memo[v]);
    std::size_t total = 0;
    for (auto w : adj[v]) total += go(w);
    memo[v] = static_cast<long long>(total);
    return total;
  };
  return go(s);
}

bool condition_a(const QuiverA& q, const AlienArrow& a) {
  for (auto z : q.sinks()) {
    auto supp = q.injective_support(z);
    bool s = std::find(supp.begin(), supp.end(), a.source) != supp.end();
    bool t = std::find(supp.begin(), supp.end(), a.target) != supp.end();
    if (s && t) return true;
  }
  return false;
}

bool condition_b(const QuiverA& q, const AlienArrow& a) {
  return !q.is_source(a.target) || a.target == 1 || a.target == q.n;
}

}  // namespace

QuiverA QuiverA::from_arrows(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  QuiverA q;
  q.n = n;
  std::vector<int> set(n > 0 ? n - 1 : 0, 0);
  q.edges.assign(set.size(), Orientation::Right);
  for (const auto& [a, b] : arrows) {
    std::size_t lo = std::min(a, b);
    if (a < 1 || b < 1 || a > n || b > n || (a > b ? a - b : b - a) != 1)
      throw Error(ErrorCode::ShapeMismatch, "arrow " + std::to_string(a) + "->" + std::to_string(b) +
                                                " is not an edge of the path quiver");
    if (set[lo - 1]) throw Error(ErrorCode::ShapeMismatch, "edge {" + std::to_string(lo) + "," +
                                                               std::to_string(lo + 1) + "} given twice");
    set[lo - 1] = 1;
    q.edges[lo - 1] = (a < b) ? Orientation::Right : Orientation::Left;
  }
  for (std::size_t i = 0; i < set.size(); ++i)
    if (!set[i])
      throw Error(ErrorCode::ShapeMismatch, "edge {" + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                                                "} has no orientation");
  return q;
}

std::vector<std::pair<std::size_t, std::size_t>> QuiverA::arrows() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i < n; ++i) out.push_back(right(i) ? std::make_pair(i, i + 1) : std::make_pair(i + 1, i));
  return out;
}

bool QuiverA::is_sink(std::size_t v) const {
  if (v < n && right(v)) return false;
  if (v > 1 && !right(v - 1)) return false;
  return true;
}

bool QuiverA::is_source(std::size_t v) const {
  if (v < n && !right(v)) return false;
  if (v > 1 && right(v - 1)) return false;
  return true;
}

std::vector<std::size_t> QuiverA::sinks() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 1; v <= n; ++v)
    if (is_sink(v)) out.push_back(v);
  return out;
}

std::vector<std::size_t> QuiverA::injective_support(std::size_t z) const {
  std::vector<std::size_t> out{z};
  for (std::size_t v = z; v > 1 && right(v - 1); --v) out.push_back(v - 1);
  for (std::size_t v = z; v < n && !right(v); ++v) out.push_back(v + 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::string QuiverA::describe() const {
  std::ostringstream os;
  os << 1;
  for (std::size_t i = 1; i < n; ++i) os << (right(i) ? "->" : "<-") << i + 1;
  return os.str();
}

bool AlienVerdict::violates(char condition) const {
  for (const auto& v : violations)
    if (v.condition == condition) return true;
  return false;
}

AlienVerdict validate_alien_set(const QuiverA& q, const AlienSet& f) {
  for (const auto& a : f.arrows)
    if (a.source < 1 || a.source > q.n || a.target < 1 || a.target > q.n || a.source == a.target)
      throw Error(ErrorCode::InvalidAlien, "alien arrow endpoints must be distinct vertices of Q");
  AlienVerdict v;
  auto add = [&](char c, std::size_t idx, const std::string& msg) {
    v.valid = false;
    v.violations.push_back({c, idx, msg});
  };
  auto label = [](const AlienArrow& a) {
    return "alien arrow " + std::to_string(a.source) + "->" + std::to_string(a.target);
  };
  for (std::size_t k = 0; k < f.arrows.size(); ++k)
    if (!condition_a(q, f.arrows[k]))
      add('a', k, label(f.arrows[k]) + " is not inside the support of any I(z) at a sink z");
  for (std::size_t k = 0; k < f.arrows.size(); ++k)
    if (!condition_b(q, f.arrows[k])) add('b', k, label(f.arrows[k]) + " ends at a source vertex");
  auto adj = adjacency(q, f);
  if (acyclic(adj, q.n)) {
    for (std::size_t k = 0; k < f.arrows.size(); ++k)
      if (path_count(adj, f.arrows[k].source, f.arrows[k].target) != 1)
        add('c', k, label(f.arrows[k]) + " is not the unique path between its endpoints");
  } else {
    // Path counts are unbounded on a cycle, so (c) is not evaluated.
    auto r = reachability(adj, q.n);
    for (std::size_t k = 0; k < f.arrows.size(); ++k)
      if (r[f.arrows[k].target][f.arrows[k].source])
        add('d', k, "Q^F has an oriented cycle through " + label(f.arrows[k]));
    if (v.violations.empty() || v.violations.back().condition != 'd') add('d', 0, "Q^F has an oriented cycle");
  }
  return v;
}

std::size_t alien_sink(const QuiverA& q, const AlienArrow& a) {
  const std::size_t lo = std::min(a.source, a.target), hi = std::max(a.source, a.target);
  for (auto z : q.sinks()) {
    if (z <= lo || z >= hi) continue;
    auto supp = q.injective_support(z);
    if (std::binary_search(supp.begin(), supp.end(), lo) && std::binary_search(supp.begin(), supp.end(), hi))
      return z;
  }
  throw Error(ErrorCode::InvalidAlien, "no sink between " + std::to_string(a.source) + " and " +
                                           std::to_string(a.target));
}

Poset poset_of_quiver(const QuiverA& q, const AlienSet& f) {
  auto verdict = validate_alien_set(q, f);
  if (!verdict.valid) {
    const auto& first = verdict.violations.front();
    throw Error(ErrorCode::InvalidAlien, std::string("condition (") + first.condition + ") " + first.message);
  }
  auto r = reachability(adjacency(q, f), q.n);
  std::vector<std::string> labels;
  std::vector<std::vector<char>> leq(q.n, std::vector<char>(q.n, 0));
  for (std::size_t i = 1; i <= q.n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 1; j <= q.n; ++j) leq[i - 1][j - 1] = r[i][j];
  }
  return Poset::from_order(std::move(labels), std::move(leq));
}

std::vector<QuiverA> all_orientations(std::size_t n) {
  std::vector<QuiverA> out;
  const std::size_t e = n > 0 ? n - 1 : 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << e); ++mask) {
    QuiverA q;
    q.n = n;
    for (std::size_t i = 0; i < e; ++i) q.edges.push_back((mask >> i) & 1 ? Orientation::Left : Orientation::Right);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<AlienSet> all_alien_sets(const QuiverA& q) {
  std::vector<AlienArrow> cand;
  for (std::size_t s = 1; s <= q.n; ++s)
    for (std::size_t t = 1; t <= q.n; ++t) {
      if (s == t) continue;
      AlienArrow a{s, t};
      if (condition_a(q, a) && condition_b(q, a)) cand.push_back(a);
    }
  std::vector<AlienSet> out;
  AlienSet cur;
  // Conditions (c) and (d) can only break further as arrows are added, so a
  // failing prefix is never extended.
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back(cur);
    for (std::size_t j = from; j < cand.size(); ++j) {
      cur.arrows.push_back(cand[j]);
      if (validate_alien_set(q, cur).valid) rec(j + 1);
      cur.arrows.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace peakstab
