#include "peakstab/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "peakstab/error.hpp"

namespace peakstab {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ws(raw);
    Line l{no, {}};
    for (std::string w; ws >> w;) l.words.push_back(w);
    if (!l.words.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(l.number) + ": " + why, std::to_string(l.number));
}

std::size_t number(const Line& l, const std::string& w) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(w, &pos);
  } catch (const std::exception&) {
    fail(l, "expected a number, got '" + w + "'");
  }
  if (pos != w.size()) fail(l, "expected a number, got '" + w + "'");
  return v;
}

}  // namespace

Poset parse_poset(const std::string& text) {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& l : tokenize(text)) {
    const std::string& kw = l.words[0];
    if (kw == "point") {
      if (l.words.size() != 2) fail(l, "usage: point <label>");
      points.push_back(l.words[1]);
    } else if (kw == "cover") {
      if (l.words.size() != 3) fail(l, "usage: cover <a> <b>");
      covers.push_back({l.words[1], l.words[2]});
    } else {
      fail(l, "unknown keyword '" + kw + "'");
    }
  }
  return Poset::build(points, covers);
}

std::string format_poset(const Poset& p) {
  std::ostringstream os;
  for (auto x : p.label_order()) os << "point " << p.label(x) << '\n';
  for (const auto& [a, b] : p.covers()) os << "cover " << p.label(a) << ' ' << p.label(b) << '\n';
  return os.str();
}

QuiverInput parse_quiver(const std::string& text) {
  std::size_t n = 0;
  bool seen = false;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  AlienSet aliens;
  for (const auto& l : tokenize(text)) {
    const std::string& kw = l.words[0];
    if (kw == "quiver") {
      if (l.words.size() != 2) fail(l, "usage: quiver <n>");
      if (seen) fail(l, "quiver declared twice");
      n = number(l, l.words[1]);
      if (n == 0) fail(l, "a quiver needs at least one vertex");
      seen = true;
      continue;
    }
    if (!seen) fail(l, "the first line must be 'quiver <n>'");
    if (kw != "arrow" && kw != "alien") fail(l, "unknown keyword '" + kw + "'");
    if (l.words.size() != 3) fail(l, "usage: " + kw + " <i> <j>");
    const std::size_t a = number(l, l.words[1]);
    const std::size_t b = number(l, l.words[2]);
    if (a < 1 || a > n || b < 1 || b > n) fail(l, "vertex out of range 1.." + std::to_string(n));
    if (kw == "arrow") {
      if (a + 1 != b && b + 1 != a) fail(l, "arrows join neighbouring vertices");
      for (const auto& [x, y] : arrows)
        if (std::min(x, y) == std::min(a, b)) fail(l, "edge oriented twice");
      arrows.push_back({a, b});
    } else {
      if (a == b) fail(l, "alien arrows join distinct vertices");
      aliens.arrows.push_back({a, b});
    }
  }
  if (!seen) throw Error(ErrorCode::ParseError, "line 1: missing 'quiver <n>'", "1");
  if (arrows.size() + 1 != n)
    throw Error(ErrorCode::ParseError, "every edge needs exactly one arrow (" + std::to_string(n - 1) + " expected)");
  return QuiverInput{QuiverA::from_arrows(n, arrows), aliens};
}

bool looks_like_quiver(const std::string& text) {
  auto lines = tokenize(text);
  return !lines.empty() && lines.front().words[0] == "quiver";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path, path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace

std::string polygon_svg(const PolygonModel& p, const AlienSet& f) {
  const auto cls = classify_segments(p.quiver, f);
  const double scale = 60.0;
  const double n = static_cast<double>(p.top());
  double hmax = 1.0;
  for (const auto& c : p.coords) hmax = std::max(hmax, std::abs(to_double(c.y)));
  const double yscale = scale * (n / 2.0 + 1.0) / hmax;
  const double width = n * scale + 2 * scale;
  const double height = 2 * hmax * yscale + 2 * scale;
  auto X = [&](std::size_t v) { return scale + to_double(p.coords[v].x) * scale; };
  auto Y = [&](std::size_t v) { return height / 2 - to_double(p.coords[v].y) * yscale; };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\">\n";
  os << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (auto v : p.boundaryOrder) os << X(v) << ',' << Y(v) << ' ';
  os << "\"/>\n";
  for (const auto& [g, c] : cls) {
    const char* color = !c.frozenBy.empty() ? "#d62728" : c.sp ? "#1f77b4" : c.suitable ? "#2ca02c" : nullptr;
    if (!color) continue;
    os << "  <line class=\"" << (!c.frozenBy.empty() ? "frozen" : c.sp ? "sp" : "suitable") << "\" x1=\"" << X(g.i)
       << "\" y1=\"" << Y(g.i) << "\" x2=\"" << X(g.j) << "\" y2=\"" << Y(g.j) << "\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t v = 0; v <= p.top(); ++v) {
    const double dy = p.is_lower(v) ? 18 : -8;
    os << "  <circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"3\"/>\n";
    os << "  <text x=\"" << X(v) << "\" y=\"" << Y(v) + dy << "\" text-anchor=\"middle\" font-size=\"14\">" << v
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string translation_quiver_dot(const TranslationQuiverGraph& g) {
  std::ostringstream os;
  os << "digraph translation_quiver {\n  rankdir=LR;\n";
  for (const auto& s : g.nodes) os << "  \"" << s.name() << "\";\n";
  for (const auto& [a, b] : g.arrows) os << "  \"" << a.name() << "\" -> \"" << b.name() << "\";\n";
  for (const auto& [a, b] : g.translation)
    os << "  \"" << a.name() << "\" -> \"" << b.name() << "\" [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string sp_quiver_dot(const SpQuiver& g, const PolygonModel& p) {
  std::ostringstream os;
  os << "digraph sp_quiver {\n  rankdir=LR;\n";
  for (const auto& s : g.nodes) os << "  \"" << s.name() << "\";\n";
  for (const auto& [a, b] : g.arrows) os << "  \"" << a.name() << "\" -> \"" << b.name() << "\";\n";
  for (const auto& s : g.nodes)
    if (auto r = rotate(s, p); r && contains(g.nodes, *r))
      os << "  \"" << s.name() << "\" -> \"" << r->name() << "\" [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace peakstab
