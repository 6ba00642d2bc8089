#include <string>

#include "doctest.h"
#include "fixtures.hpp"

using namespace peakstab;

namespace {

std::string parse_failure(const std::string& text, bool quiver) {
  try {
    if (quiver) parse_quiver(text);
    else parse_poset(text);
  } catch (const Error& e) {
    return std::string(to_string(e.code())) + "|" + e.witness();
  }
  return "ok";
}

}  // namespace

TEST_CASE("poset round trip") {
  auto p = fixtures::poset_e1();
  std::string text = format_poset(*p);
  Poset q = parse_poset(text);
  CHECK(format_poset(q) == text);
  CHECK(q.size() == 7);
  CHECK(q.max_points().size() == 3);
  CHECK_FALSE(looks_like_quiver(text));
}

TEST_CASE("poset parse errors carry line numbers") {
  CHECK(parse_failure("point a\n\nfrob b\n", false) == "ParseError|3");
  CHECK(parse_failure("# comment\npoint\n", false) == "ParseError|2");
  CHECK(parse_failure("point a\ncover a\n", false) == "ParseError|2");
  CHECK_THROWS_AS(parse_poset("point a\ncover a b\n"), Error);
  CHECK_THROWS_AS(parse_poset("point a\npoint b\ncover a b\ncover b a\n"), Error);
}

TEST_CASE("quiver parsing") {
  auto in = parse_quiver(
      "quiver 7  # the example\n"
      "arrow 1 2\narrow 3 2\narrow 3 4\narrow 4 5\narrow 6 5\narrow 6 7\n"
      "alien 3 1\nalien 6 4\n");
  CHECK(in.quiver.describe() == fixtures::example_quiver().describe());
  REQUIRE(in.aliens.arrows.size() == 2);
  CHECK(in.aliens.arrows[1] == AlienArrow{6, 4});
  CHECK(looks_like_quiver("# x\nquiver 2\narrow 1 2\n"));
}

TEST_CASE("quiver parse errors carry line numbers") {
  CHECK(parse_failure("arrow 1 2\n", true) == "ParseError|1");
  CHECK(parse_failure("quiver 3\narrow 1 3\n", true) == "ParseError|2");
  CHECK(parse_failure("quiver 3\narrow 1 2\narrow 2 1\n", true) == "ParseError|3");
  CHECK(parse_failure("quiver 3\narrow 1 x\n", true) == "ParseError|2");
  CHECK(parse_failure("quiver 2\nalien 2 2\n", true) == "ParseError|2");
  CHECK(parse_failure("quiver 3\narrow 1 2\n", true).rfind("ParseError", 0) == 0);
}

TEST_CASE("emitters") {
  auto q = fixtures::example_quiver();
  auto f = fixtures::example_aliens();
  PolygonModel p = build_polygon(q);
  std::string svg = polygon_svg(p, f);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("class=\"frozen\"") != std::string::npos);
  CHECK(svg.find("class=\"sp\"") != std::string::npos);
  std::string dot = translation_quiver_dot(translation_quiver(p));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
  std::string sp = sp_quiver_dot(ar_quiver_sp(q, f), p);
  CHECK(sp.find("\"γ(0,7)\"") != std::string::npos);
}
