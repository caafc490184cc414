#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "orthocover/cover.hpp"
#include "orthocover/polygon.hpp"

namespace orthocover {

// OPOLY v1: a vertex count, then one "x y" line per vertex in boundary order.
// Lines starting with '#' and blank lines are ignored. Throws ParseError.
std::vector<Point> parse_polygon_text(std::istream& in);

// Parses and validates; `fix` first merges repeated and collinear vertices.
Polygon read_polygon(std::istream& in, bool fix = false);
Polygon read_polygon_file(const std::filesystem::path& path, bool fix = false);

void write_polygon(std::ostream& out, const Polygon& p);

// OCOVER v1: a pack count, then one "x y t eta H|V" line per pack.
Cover read_cover(std::istream& in);
Cover read_cover_file(const std::filesystem::path& path);

void write_cover(std::ostream& out, const Cover& c);

}  // namespace orthocover
