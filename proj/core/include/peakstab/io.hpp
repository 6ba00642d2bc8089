#ifndef PEAKSTAB_IO_HPP
#define PEAKSTAB_IO_HPP

#include <string>

#include "peakstab/polygon.hpp"
#include "peakstab/poset.hpp"
#include "peakstab/quiver.hpp"
#include "peakstab/segments.hpp"

namespace peakstab {

// Lines `point <label>` and `cover <a> <b>` (b covers a); `#` starts a comment.
// Throws ParseError with the line number, or the build errors of Poset::build.
Poset parse_poset(const std::string& text);
std::string format_poset(const Poset& p);

struct QuiverInput {
  QuiverA quiver;
  AlienSet aliens;
};

// Lines `quiver <n>`, `arrow <i> <j>` with |i − j| = 1, `alien <s> <t>`.
QuiverInput parse_quiver(const std::string& text);

// Either format, decided by the first keyword.
bool looks_like_quiver(const std::string& text);

std::string read_file(const std::string& path);

std::string polygon_svg(const PolygonModel& p, const AlienSet& f);
std::string translation_quiver_dot(const TranslationQuiverGraph& g);
std::string sp_quiver_dot(const SpQuiver& g, const PolygonModel& p);

}  // namespace peakstab

#endif
