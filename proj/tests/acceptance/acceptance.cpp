#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace peakstab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budgetSeconds;
  std::function<Outcome()> run;
};

std::string show(const SegmentSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + s[k].name();
  return out + "}";
}

Outcome fixture_e1() {
  auto p = fixtures::poset_e1();
  CombPeakSpace u{p, fixtures::pts(*p, {"1", "2", "3", "4", "5", "6"})};
  auto rep = is_theta_stable(u, {1, -2, 2, 1, -1, -1, 0}, true);
  Outcome o;
  o.ok = rep.subspaces.size() == 2 && rep.subspaces[0].support == fixtures::pts(*p, {"1", "2"}) &&
         rep.subspaces[1].support == fixtures::pts(*p, {"4", "5", "6"}) && rep.total == 0 &&
         rep.verdict == Verdict::Stable;
  std::ostringstream os;
  os << rep.subspaces.size() << " proper subspaces";
  for (std::size_t k = 0; k < rep.subspaces.size(); ++k)
    os << ' ' << p->format_set(rep.subspaces[k].support) << "->" << rep.values[k].get_str();
  os << ", verdict " << to_string(rep.verdict);
  o.detail = os.str();
  return o;
}

Outcome sincere_example() {
  auto p = fixtures::poset_e1();
  auto shape = recognize_shape(p, fixtures::pts(*p, {"2", "5", "3", "6"}));
  if (!shape) return {false, "S not recognized"};
  std::vector<std::size_t> order;
  for (auto l : {"2", "5", "3", "6"}) order.push_back(p->index(l));
  Outcome o;
  auto sp = shape_poset(*shape);
  IncidenceMatrix c = incidence_matrix(*sp, {0, 1, 2, 3});
  bool inv = c.inverseEntries == IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, -1, 1, 0}, {0, -1, 0, 1}};
  Weight t = theta_on_shape(*shape);
  bool theta = shape->grouped() == order && t == Weight{-1, -2, 2, 1};
  bool w = evaluate(t, {1, 0, 0, 0}) == -1 && evaluate(t, {0, 1, 0, 1}) == -1;
  Weight lifted = lift_weight(t, shape->grouped(), p->size());
  bool lift = lifted == Weight{0, -1, 2, 0, -2, 1, 0};
  o.ok = inv && theta && w && lift;
  o.detail = std::string("inverse ") + (inv ? "ok" : "differs") + ", theta " + (theta ? "ok" : "differs") +
             ", theta(W),theta(W') " + (w ? "ok" : "differ") + ", lift " + (lift ? "ok" : "differs");
  return o;
}

Outcome theta_sweep() {
  auto posets = type_a_posets(7);
  std::atomic<std::size_t> next{0}, objects{0}, failures{0};
  auto worker = [&]() {
    for (std::size_t k; (k = next++) < posets.size();)
      for (const auto& u : enumerate_indecomposables(posets[k])) {
        ++objects;
        if (is_theta_stable(u.space, theta_of(u)).verdict != Verdict::Stable) ++failures;
      }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::ostringstream os;
  os << posets.size() << " posets, " << objects << " indecomposables, " << failures << " not stable";
  return {failures == 0, os.str()};
}

Outcome geometry_fixture() {
  auto q = fixtures::example_quiver();
  auto f = fixtures::example_aliens();
  PolygonModel p = build_polygon(q);
  std::vector<std::pair<std::string, std::pair<SegmentSet, SegmentSet>>> checks{
      {"suitable", {suitable_segments(p), fixtures::segs({{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}})}},
      {"bf(1,2)", {bi_fan({1, 2}, p), fixtures::segs({{1, 2}, {1, 5}, {1, 7}, {1, 6}, {1, 4}, {1, 3},
                                                      {0, 2}, {0, 5}, {0, 7}, {0, 6}, {0, 4}, {0, 3}})}},
      {"bf(4,5)", {bi_fan({4, 5}, p), fixtures::segs({{4, 5}, {4, 7}, {4, 6}, {3, 5}, {3, 7}, {3, 6}, {1, 5}, {1, 7},
                                                      {1, 6}, {0, 5}, {0, 7}, {0, 6}, {2, 5}, {2, 7}, {2, 6}})}},
      {"bf(6,7)", {bi_fan({6, 7}, p), fixtures::segs({{6, 7}, {4, 7}, {3, 7}, {1, 7}, {0, 7}, {2, 7}, {5, 7}})}},
      {"underline", {underline_segments(p), fixtures::segs({{0, 4}, {1, 4}, {2, 4}, {3, 4}})}},
      {"[alpha]", {frozen_segments(f.arrows[0], p), fixtures::segs({{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}})}},
      {"[beta]", {frozen_segments(f.arrows[1], p), fixtures::segs({{4, 5}, {4, 6}})}},
  };
  Outcome o;
  std::string matched;
  for (const auto& [name, pair] : checks) {
    if (pair.first == pair.second) {
      matched += (matched.empty() ? "" : ",") + name;
      continue;
    }
    o.ok = false;
    o.detail += name + " computed " + show(pair.first) + " expected " + show(pair.second) + "; ";
  }
  o.detail += "matched " + matched;
  return o;
}

Outcome equivalence() {
  auto q = fixtures::example_quiver();
  auto f = fixtures::example_aliens();
  auto poset = std::make_shared<const Poset>(poset_of_quiver(q, f));
  auto support_sets = [](const QuiverA& q, const AlienSet& f, PosetPtr poset) {
    std::multiset<PointSet> omega, algebraic;
    for (const auto& g : sp_segments(q, f)) omega.insert(functor_Omega(g, q, f, poset).support);
    for (const auto& u : enumerate_indecomposables(poset)) algebraic.insert(u.space.support);
    return std::make_pair(omega, algebraic);
  };
  auto [om, al] = support_sets(q, f, poset);
  bool example = sp_segments(q, f).size() == 15 && om == al;
  std::size_t cases = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& [qq, ff] : oracle::quivers_with_aliens(n)) {
      ++cases;
      auto pp = std::make_shared<const Poset>(poset_of_quiver(qq, ff));
      auto [a, b] = support_sets(qq, ff, pp);
      if (a != b) ++mismatches;
    }
  std::ostringstream os;
  os << "example " << sp_segments(q, f).size() << " sp-segments " << (om == al ? "match" : "differ") << ", " << cases
     << " (Q,F) with " << mismatches << " mismatches";
  return {example && mismatches == 0, os.str()};
}

Outcome socle_oracle() {
  std::size_t segments = 0, mismatches = 0, underline = 0;
  for (std::size_t k = 1; k <= 8; ++k)
    for (const auto& q : all_orientations(k)) {
      PolygonModel p = build_polygon(q);
      SegmentSet star = star_segments(p);
      SegmentSet under = underline_segments(p);
      for (const auto& g : p.all_segments()) {
        ++segments;
        Interval iv = functor_F(g);
        bool socle = oracle::socle_projective(q, iv.start, iv.end);
        if (contains(star, g) != socle) ++mismatches;
        if (contains(under, g)) {
          ++underline;
          if (socle) ++mismatches;
        }
      }
    }
  std::ostringstream os;
  os << segments << " segments, " << underline << " underline, " << mismatches << " mismatches";
  return {mismatches == 0, os.str()};
}

Outcome geometric_stability() {
  std::size_t objects = 0, geoBad = 0, boundary = 0, boundaryM1 = 0, runs = 0, semistable = 0, unstable = 0;
  std::string example;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& [q, f] : oracle::quivers_with_aliens(n)) {
      auto poset = std::make_shared<const Poset>(poset_of_quiver(q, f));
      PolygonModel p = build_polygon(q);
      for (const auto& g : sp_segments(q, f)) {
        ++objects;
        try {
          if (phi_stability_check(functor_Omega(g, q, f, poset), p).verdict != Verdict::Stable) ++geoBad;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BoundaryAngle) throw;
          ++boundary;
        }
      }
    }
  for (auto kind : {ShapeKind::S1, ShapeKind::S2, ShapeKind::S3})
    for (std::size_t r = 1; r <= 5; ++r) {
      SincereShape s = standard_shape(kind, r);
      PosetPtr sp = shape_poset(s);
      for (const auto& u : enumerate_indecomposables(sp)) {
        for (long m : {2L, 3L}) {
          ++runs;
          try {
            PhiReport rep = phi_stability_check(u.space, {ChargeScheme::SincerePrime, m});
            semistable += rep.verdict == Verdict::Semistable;
            unstable += rep.verdict == Verdict::Unstable;
            if (rep.verdict != Verdict::Stable && example.empty())
              example = s.name() + " " + sp->format_set(u.space.support) + " Z=" + rep.whole.str() + " sub " +
                        sp->format_set(rep.subspaces[*rep.witness].support) + " Z=" +
                        rep.values[*rep.witness].str() + " m=" + std::to_string(m);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::BoundaryAngle) throw;
            ++boundary;
          }
        }
        try {
          phi_stability_check(u.space, {ChargeScheme::SincerePrime, 1});
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BoundaryAngle) throw;
          ++boundaryM1;
        }
      }
    }
  std::ostringstream os;
  os << objects << " geometric objects (" << geoBad << " not stable), " << runs << " Z_m runs (" << semistable
     << " semistable, " << unstable << " unstable), " << boundary << " boundary; m=1 reported " << boundaryM1
     << " BoundaryAngle";
  if (!example.empty()) os << "; first: " << example;
  return {geoBad == 0 && semistable == 0 && unstable == 0 && boundary == 0, os.str()};
}

Outcome weight_vectors() {
  auto [w, k] = sincere_weights(standard_shape(ShapeKind::S1, 3));
  bool fixture = w == Weight{0, -1, 0, 1, 1} && k == Weight{1, 1, 1, -1, -1};
  std::size_t mismatches = 0, shapes = 0;
  for (auto kind : {ShapeKind::S1, ShapeKind::S2, ShapeKind::S3})
    for (std::size_t r = 1; r <= 5; ++r) {
      ++shapes;
      SincereShape s = standard_shape(kind, r);
      Poset sp = *shape_poset(s);
      auto [ws, ks] = sincere_weights(s);
      DimVector ones(sp.size(), 1);
      for (std::size_t i = 0; i < sp.size(); ++i) {
        if (ws[i] != oracle::bilinear_sum(sp, ones, unit_vector(sp.size(), i))) ++mismatches;
        if (ks[i] != oracle::bilinear_sum(sp, unit_vector(sp.size(), i), ones)) ++mismatches;
      }
    }
  std::ostringstream os;
  os << "S1(3) " << (fixture ? "ok" : "differs") << ", " << shapes << " shapes with " << mismatches << " mismatches";
  return {fixture && mismatches == 0, os.str()};
}

Outcome properties() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> th(-3, 3), kp(1, 3);
  auto draw = [&](std::size_t n) {
    Slope s{Weight(n), Weight(n)};
    for (std::size_t i = 0; i < n; ++i) {
      s.theta[i] = th(rng);
      s.kappa[i] = kp(rng);
    }
    return s;
  };
  std::size_t seesaw = 0, seesawFail = 0;
  for (const auto& p : type_a_posets(6))
    for (const auto& u : enumerate_indecomposables(p)) {
      auto dims = subobject_dims(u.space);
      const DimVector& v = dims.back();
      for (int t = 0; t < 3; ++t) {
        Slope s = draw(p->size());
        for (std::size_t j = 1; j + 1 < dims.size(); ++j) {
          DimVector q = v;
          for (std::size_t i = 0; i < q.size(); ++i) q[i] -= dims[j][i];
          Rat a = slope_of(s, dims[j]), b = slope_of(s, v), c = slope_of(s, q);
          ++seesaw;
          bool le = (a <= b) == (a <= c) && (a <= c) == (b <= c);
          bool lt = (a < b) == (a < c) && (a < c) == (b < c);
          bool ge = (a >= b) == (a >= c) && (a >= c) == (b >= c);
          if (!(le && lt && ge)) ++seesawFail;
        }
      }
    }
  std::size_t hn = 0, hnFail = 0, hnUnique = 0;
  for (const auto& p : type_a_posets(5))
    for (const auto& u : enumerate_indecomposables(p))
      for (int t = 0; t < 4; ++t) {
        Slope s = draw(p->size());
        Filtration f = hn_filtration(u.space, s);
        auto chains = oracle::hn_chains(u.space, s);
        ++hn;
        bool dec = true;
        for (std::size_t i = 1; i < f.slopes.size(); ++i) dec = dec && f.slopes[i] < f.slopes[i - 1];
        std::vector<std::size_t> masks;
        const PointSet peaks = u.space.peaks();
        for (const auto& st : f.steps) {
          std::size_t m = 0;
          for (auto z : st) m |= std::size_t{1} << (std::find(peaks.begin(), peaks.end(), z) - peaks.begin());
          masks.push_back(m);
        }
        bool member = false;
        for (const auto& c : chains) member = member || c.masks == masks;
        hnUnique += chains.size() == 1;
        if (!dec || !member) ++hnFail;
      }
  std::size_t incFail = 0;
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::uniform_real_distribution<double> dens(0.1, 0.7);
  for (int t = 0; t < 200; ++t) {
    Poset p = random_poset(size(rng), dens(rng), rng);
    IncidenceMatrix c = incidence_matrix(p);
    if (!is_identity(multiply(c.entries, c.inverseEntries))) ++incFail;
  }
  std::ostringstream os;
  os << seesaw << " see-saw checks (" << seesawFail << " failed), " << hn << " HN runs (" << hnUnique << " with a unique brute-force chain, " << hnFail
     << " failed), 200 incidence inverses (" << incFail << " failed)";
  return {seesawFail == 0 && hnFail == 0 && incFail == 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "POSET-E1 proper subspaces and stabilizing weight", 1, fixture_e1},
      {2, "sincere example incidence inverse and weight", 1, sincere_example},
      {3, "theta-stability sweep over type A posets up to 7 points", 300, theta_sweep},
      {4, "example polygon segment sets", 1, geometry_fixture},
      {5, "sp-segments versus algebraic indecomposables", 120, equivalence},
      {6, "star classification versus socle projectivity", 120, socle_oracle},
      {7, "geometric and Z_m stability", 120, geometric_stability},
      {8, "weight vectors of sincere shapes", 1, weight_vectors},
      {9, "see-saw, HN and incidence properties", 180, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budgetSeconds) {
      o.ok = false;
      o.detail += "; over the time budget";
    }
    failed += !o.ok;
    std::printf("%s criterion %d: %s (%.2fs) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
