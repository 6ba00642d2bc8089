#include "peakstab/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "peakstab/type_a.hpp"

namespace peakstab {

namespace {

using Order = std::vector<std::vector<char>>;

Order order_of(const Poset& p) {
  Order o(p.size(), std::vector<char>(p.size(), 0));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) o[a][b] = p.leq(a, b) ? 1 : 0;
  return o;
}

std::string encode(const Order& o, const std::vector<std::size_t>& perm) {
  std::string s;
  for (auto a : perm)
    for (auto b : perm) s.push_back(o[a][b] ? '1' : '0');
  return s;
}

// Points sorted by (down-set size, up-set size, ...) and grouped into blocks of
// equal invariants; only permutations inside blocks are searched.
std::vector<std::size_t> canonical_perm(const Order& o) {
  const std::size_t n = o.size();
  std::vector<std::pair<std::size_t, std::size_t>> inv(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      inv[a].first += o[b][a];
      inv[a].second += o[a][b];
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return inv[a] < inv[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t k = 0; k < n;) {
    std::size_t e = k;
    while (e < n && inv[perm[e]] == inv[perm[k]]) ++e;
    blocks.push_back({k, e});
    k = e;
  }
  std::vector<std::size_t> best = perm;
  std::string bestKey = encode(o, perm);
  // Odometer over the permutations of each block.
  for (auto& [b, e] : blocks) std::sort(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e));
  while (true) {
    std::string key = encode(o, perm);
    if (key < bestKey) {
      bestKey = key;
      best = perm;
    }
    std::size_t k = 0;
    for (; k < blocks.size(); ++k) {
      auto [b, e] = blocks[k];
      if (std::next_permutation(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e))) break;
    }
    if (k == blocks.size()) break;
  }
  return best;
}

Poset relabel(const Order& o, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<std::string> labels(n);
  Order q(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a + 1);
    for (std::size_t b = 0; b < n; ++b) q[a][b] = o[perm[a]][perm[b]];
  }
  return Poset::from_order(std::move(labels), std::move(q));
}

}  // namespace

std::string canonical_key(const Poset& p) {
  Order o = order_of(p);
  return encode(o, canonical_perm(o));
}

Poset canonical_form(const Poset& p) {
  Order o = order_of(p);
  return relabel(o, canonical_perm(o));
}

std::vector<PosetPtr> all_posets(std::size_t n) {
  std::map<std::string, PosetPtr> level;
  if (n == 0) return {};
  level.emplace("1", std::make_shared<const Poset>(Poset::from_order({"1"}, {{1}})));
  for (std::size_t size = 1; size < n; ++size) {
    std::map<std::string, PosetPtr> next;
    for (const auto& [key, p] : level) {
      Order o = order_of(*p);
      // A new maximal point sits above exactly one down-set.
      for (std::size_t mask = 0; mask < (std::size_t{1} << size); ++mask) {
        bool downSet = true;
        for (std::size_t a = 0; a < size && downSet; ++a)
          if (mask >> a & 1)
            for (std::size_t b = 0; b < size; ++b)
              if (o[b][a] && !(mask >> b & 1)) downSet = false;
        if (!downSet) continue;
        Order q(size + 1, std::vector<char>(size + 1, 0));
        for (std::size_t a = 0; a < size; ++a) {
          for (std::size_t b = 0; b < size; ++b) q[a][b] = o[a][b];
          q[a][size] = mask >> a & 1;
        }
        q[size][size] = 1;
        std::vector<std::size_t> perm = canonical_perm(q);
        std::string k = encode(q, perm);
        if (!next.count(k)) next.emplace(k, std::make_shared<const Poset>(relabel(q, perm)));
      }
    }
    level = std::move(next);
  }
  std::vector<PosetPtr> out;
  for (auto& [key, p] : level) out.push_back(p);
  return out;
}

std::vector<PosetPtr> connected_posets(std::size_t n) {
  std::vector<PosetPtr> out;
  for (auto& p : all_posets(n))
    if (p->connected()) out.push_back(p);
  return out;
}

std::vector<PosetPtr> type_a_posets(std::size_t maxPoints) {
  std::vector<PosetPtr> out;
  for (std::size_t n = 1; n <= maxPoints; ++n)
    for (auto& p : connected_posets(n))
      if (is_type_A(*p).typeA) out.push_back(p);
  return out;
}

Poset random_poset(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  Order o(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    o[a][a] = 1;
    for (std::size_t b = a + 1; b < n; ++b) o[a][b] = edge(rng) ? 1 : 0;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (o[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (o[k][b]) o[a][b] = 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(o, perm);
}

}  // namespace peakstab
