#pragma once

#include <compare>
#include <cstddef>
#include <optional>

#include "orthocover/polygon.hpp"

namespace orthocover {

// Axis-parallel square by its bottom-left corner.
struct Square {
    Point corner;
    Coord side = 1;

    friend auto operator<=>(const Square&, const Square&) = default;

    Rect rect() const { return Rect{corner.x, corner.y, corner.x + side, corner.y + side}; }
};

// Direction in which a square grows away from its fixed corner.
enum class Quadrant { NE, NW, SE, SW };

inline constexpr Quadrant kQuadrants[] = {Quadrant::NE, Quadrant::NW, Quadrant::SE, Quadrant::SW};

const char* to_string(Quadrant q);

bool is_valid_square(const Polygon& p, const Square& s);

// Largest valid square with one corner at `anchor` that extends into `q`,
// or nullopt when not even the unit square fits. One pass over the edges.
std::optional<Square> largest_anchored_square(const Polygon& p, Point anchor, Quadrant q);

// Maximal corner square of a convex vertex. Throws NotConvexVertex.
Square mcs(const Polygon& p, std::size_t v);

// Quadrant between the two edges at vertex v.
Quadrant vertex_quadrant(const Polygon& p, std::size_t v);

// Throws NotValidSquare when s is not inside p.
bool is_maximal(const Polygon& p, const Square& s);

// Some maximal square containing s. Growth prefers keeping the corner, then
// shifting left, then down, then diagonally.
Square maximalize(const Polygon& p, const Square& s);

}  // namespace orthocover
