#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "peakstab/peakstab.hpp"

using namespace peakstab;

namespace {

struct Input {
  PosetPtr poset;
  std::optional<QuiverInput> quiver;
};

Input load(const std::string& path) {
  const std::string text = read_file(path);
  Input in;
  if (looks_like_quiver(text)) {
    in.quiver = parse_quiver(text);
    in.poset = std::make_shared<const Poset>(poset_of_quiver(in.quiver->quiver, in.quiver->aliens));
  } else {
    in.poset = std::make_shared<const Poset>(parse_poset(text));
  }
  return in;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

PointSet parse_support(const Poset& p, const std::string& csv) {
  PointSet s;
  for (const auto& l : split_csv(csv)) {
    if (!p.has_label(l)) throw Error(ErrorCode::UnknownLabel, "no point labelled " + l, l);
    s.push_back(p.index(l));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Values listed in label order.
Weight parse_weight(const Poset& p, const std::string& csv) {
  auto items = split_csv(csv);
  if (items.size() != p.size())
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(p.size()) + " values, got " + std::to_string(items.size()));
  Weight w(p.size());
  auto order = p.label_order();
  for (std::size_t k = 0; k < order.size(); ++k) {
    try {
      w[order[k]] = Int(items[k]);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::ParseError, "not an integer: " + items[k], items[k]);
    }
  }
  return w;
}

std::string show_vector(const Poset& p, const DimVector& v) {
  std::string out = "(";
  auto order = p.label_order();
  for (std::size_t k = 0; k < order.size(); ++k) out += (k ? "," : "") + v[order[k]].get_str();
  return out + ")";
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path, path);
  out << text;
}

int cmd_validate(const std::string& path) {
  Input in = load(path);
  int status = 0;
  if (in.quiver) {
    AlienVerdict v = validate_alien_set(in.quiver->quiver, in.quiver->aliens);
    for (const auto& x : v.violations) std::cout << "alien violation (" << x.condition << "): " << x.message << '\n';
    if (!v.valid) status = 1;
    else std::cout << "alien set valid\n";
  }
  if (!in.poset->connected()) {
    std::cout << "poset is not connected\n";
    return 1;
  }
  TypeAVerdict t = is_type_A(*in.poset);
  if (t.typeA) {
    std::cout << "type A: " << in.poset->size() << " points, " << in.poset->max_points().size() << " peaks\n";
  } else {
    std::cout << "not type A: contains " << t.pattern << " at " << in.poset->format_set(t.witness) << '\n';
    status = 1;
  }
  return status;
}

int cmd_indecomposables(const std::string& path) {
  Input in = load(path);
  const Poset& p = *in.poset;
  for (const auto& u : enumerate_indecomposables(in.poset))
    std::cout << p.format_set(u.space.support) << ' ' << u.shape.name() << " csupp " << p.format_set(u.shape.points())
              << " dimv " << show_vector(p, u.space.dims()) << '\n';
  return 0;
}

int cmd_subspaces(const std::string& path, const std::string& support) {
  Input in = load(path);
  const Poset& p = *in.poset;
  CombPeakSpace u{in.poset, parse_support(p, support)};
  for (const auto& s : proper_subspaces_typeA(u))
    std::cout << "peaks " << p.format_set(s.peaks) << " support " << p.format_set(s.support) << '\n';
  return 0;
}

struct StabilityOpts {
  std::string method = "bilinear";
  long m = 2;
  std::string theta;
  std::string kappa;
};

int cmd_stability(const std::string& path, const StabilityOpts& o) {
  Input in = load(path);
  const Poset& p = *in.poset;
  std::size_t objects = 0, stable = 0;
  auto record = [&](const CombPeakSpace& u, const std::string& value, const std::string& verdict,
                    const std::string& witness) {
    ++objects;
    stable += verdict == "stable";
    std::cout << "support " << p.format_set(u.support) << " dimv " << show_vector(p, u.dims()) << " " << value
              << " verdict " << verdict;
    if (!witness.empty()) std::cout << " witness " << witness;
    std::cout << '\n';
  };

  if (o.method == "bilinear") {
    std::optional<Weight> theta, kappa;
    if (!o.theta.empty()) theta = parse_weight(p, o.theta);
    if (!o.kappa.empty()) kappa = parse_weight(p, o.kappa);
    for (const auto& u : enumerate_indecomposables(in.poset)) {
      Weight t = theta ? *theta : theta_of(u);
      std::string verdict, witness;
      if (kappa) {
        MuReport r = is_mu_stable(u.space, {t, *kappa});
        verdict = to_string(r.verdict);
        if (r.verdict != Verdict::Stable && r.witness) witness = p.format_set(r.subspaces[*r.witness].support);
      } else {
        ThetaReport r = is_theta_stable(u.space, t);
        verdict = to_string(r.verdict);
        if (r.verdict != Verdict::Stable && r.witness) witness = p.format_set(r.subspaces[*r.witness].support);
      }
      record(u.space, "weight " + show_vector(p, t), verdict, witness);
    }
  } else if (o.method == "geometric") {
    if (!o.theta.empty() || !o.kappa.empty())
      throw Error(ErrorCode::ShapeMismatch, "--theta and --kappa apply to the bilinear method");
    if (in.quiver) {
      const QuiverA& q = in.quiver->quiver;
      PolygonModel poly = build_polygon(q);
      for (const auto& g : sp_segments(q, in.quiver->aliens)) {
        CombPeakSpace u = functor_Omega(g, q, in.quiver->aliens, in.poset);
        PhiReport r = phi_stability_check(u, poly);
        record(u, "segment " + g.name() + " Z=" + r.whole.str(), to_string(r.verdict),
               r.verdict != Verdict::Stable && r.witness ? p.format_set(r.subspaces[*r.witness].support) : "");
      }
    } else {
      if (o.m < 1) throw Error(ErrorCode::ShapeMismatch, "--m must be at least 1");
      for (const auto& u : enumerate_indecomposables(in.poset)) {
        try {
          PhiReport r = phi_stability_check(u.space, {ChargeScheme::SincerePrime, o.m});
          record(u.space, "Z=" + r.whole.str(), to_string(r.verdict),
                 r.verdict != Verdict::Stable && r.witness ? p.format_set(r.subspaces[*r.witness].support) : "");
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BoundaryAngle) throw;
          record(u.space, "Z on the boundary", "boundary", e.witness());
        }
      }
    }
  } else {
    throw Error(ErrorCode::ParseError, "unknown method " + o.method, o.method);
  }
  std::cout << objects << " objects, " << stable << " stable\n";
  return stable == objects ? 0 : 1;
}

QuiverInput require_quiver(const Input& in) {
  if (!in.quiver) throw Error(ErrorCode::ParseError, "this command needs a quiver file", "1");
  return *in.quiver;
}

int cmd_polygon(const std::string& path, const std::string& out) {
  QuiverInput q = require_quiver(load(path));
  write_output(out, polygon_svg(build_polygon(q.quiver), q.aliens));
  return 0;
}

int cmd_ar_quiver(const std::string& path, bool full, const std::string& out) {
  QuiverInput q = require_quiver(load(path));
  PolygonModel poly = build_polygon(q.quiver);
  write_output(out, full ? translation_quiver_dot(translation_quiver(poly))
                         : sp_quiver_dot(ar_quiver_sp(q.quiver, q.aliens), poly));
  return 0;
}

int cmd_verify(std::size_t maxPoints, unsigned jobs) {
  if (jobs == 0) jobs = 1;
  auto posets = type_a_posets(maxPoints);
  std::atomic<std::size_t> next{0}, objects{0}, failures{0};
  std::mutex lock;
  std::vector<std::string> witnesses;
  auto worker = [&]() {
    for (std::size_t k; (k = next++) < posets.size();)
      for (const auto& u : enumerate_indecomposables(posets[k])) {
        ++objects;
        if (is_theta_stable(u.space, theta_of(u)).verdict == Verdict::Stable) continue;
        ++failures;
        std::lock_guard<std::mutex> g(lock);
        witnesses.push_back(canonical_key(*posets[k]) + " " + posets[k]->format_set(u.space.support));
      }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::sort(witnesses.begin(), witnesses.end());
  for (const auto& w : witnesses) std::cout << "unstable " << w << '\n';
  std::cout << "bilinear: " << posets.size() << " posets, " << objects << " objects, " << objects - failures
            << " stable\n";

  std::size_t segObjects = 0, segStable = 0, cases = 0;
  for (std::size_t n = 1; n <= maxPoints; ++n)
    for (const auto& q : all_orientations(n))
      for (const auto& f : all_alien_sets(q)) {
        if (!validate_alien_set(q, f).valid) continue;
        ++cases;
        auto poset = std::make_shared<const Poset>(poset_of_quiver(q, f));
        PolygonModel poly = build_polygon(q);
        for (const auto& g : sp_segments(q, f)) {
          ++segObjects;
          if (phi_stability_check(functor_Omega(g, q, f, poset), poly).verdict == Verdict::Stable) ++segStable;
          else std::cout << "unstable " << q.describe() << ' ' << g.name() << '\n';
        }
      }
  std::cout << "geometric: " << cases << " alien sets, " << segObjects << " objects, " << segStable << " stable\n";
  const std::size_t total = objects + segObjects, ok = objects - failures + segStable;
  std::cout << total << " objects, " << ok << " stable\n";
  return ok == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of peak poset representations and their polygon models"};
  app.require_subcommand(1);

  std::string input, support, output;
  StabilityOpts stab;
  bool svg = false, dot = false, full = false;
  std::size_t maxPoints = 5;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* validate = app.add_subcommand("validate", "Check the type A condition and alien-set rules");
  validate->add_option("input", input, "Poset or quiver file")->required();

  auto* indec = app.add_subcommand("indecomposables", "List indecomposable peak spaces by support");
  indec->add_option("input", input, "Poset or quiver file")->required();

  auto* subs = app.add_subcommand("subspaces", "Proper peak subspaces of a support");
  subs->add_option("input", input, "Poset or quiver file")->required();
  subs->add_option("support", support, "Comma-separated point labels")->required();

  auto* stability = app.add_subcommand("stability", "Per-object stability verdicts");
  stability->add_option("input", input, "Poset or quiver file")->required();
  stability->add_option("--method", stab.method, "bilinear or geometric")
      ->check(CLI::IsMember({"bilinear", "geometric"}));
  stability->add_option("--m", stab.m, "Shift for the Z_m charge on sincere posets");
  stability->add_option("--theta", stab.theta, "Weight values in label order");
  stability->add_option("--kappa", stab.kappa, "Positive slope denominators in label order");

  auto* polygon = app.add_subcommand("polygon", "Draw the polygon with classified segments");
  polygon->add_option("input", input, "Quiver file")->required();
  polygon->add_flag("--svg", svg, "Emit SVG")->required();
  polygon->add_option("-o,--output", output, "Output path (default stdout)");

  auto* ar = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver of the sp-segments");
  ar->add_option("input", input, "Quiver file")->required();
  ar->add_flag("--dot", dot, "Emit DOT")->required();
  ar->add_flag("--full", full, "Use every segment of the polygon");
  ar->add_option("-o,--output", output, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Exhaustive stability sweep");
  verify->add_option("--max-points", maxPoints, "Largest poset and quiver size")->check(CLI::Range(1, 9));
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(input);
    if (*indec) return cmd_indecomposables(input);
    if (*subs) return cmd_subspaces(input, support);
    if (*stability) return cmd_stability(input, stab);
    if (*polygon) return cmd_polygon(input, output);
    if (*ar) return cmd_ar_quiver(input, full, output);
    if (*verify) return cmd_verify(maxPoints, jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (!e.witness().empty()) std::cerr << "witness: " << e.witness() << '\n';
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  return 0;
}
