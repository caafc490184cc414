#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orthocover/error.hpp"
#include "orthocover/geometry.hpp"

namespace orthocover {

enum class VertexClass { Convex, Concave };

// Side of the polygon on which an edge lies; the exterior is on that side.
enum class Direction { Left, Right, Top, Bottom };

const char* to_string(Direction d);

struct Knob {
    std::size_t from = 0;  // vertex index i
    std::size_t to = 0;    // vertex index i + 1 (cyclic)
    Direction direction = Direction::Left;
};

enum class Location { Interior, Boundary, Exterior };

// A point whose coordinates are x + half_x / 2 and y + half_y / 2.
struct HalfPoint {
    Coord x = 0;
    Coord y = 0;
    bool half_x = false;
    bool half_y = false;
};

// Hole-free orthogonal polygon with integer vertices. Always counter-clockwise,
// starting at its lexicographically smallest vertex. Only `validate` builds one.
class Polygon {
public:
    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    // Cyclic access; any integer index is accepted.
    const Point& vertex(std::ptrdiff_t i) const;

    // Exact area, cached at validation.
    Wide area_wide() const { return area_; }

    Rect bounding_box() const { return bbox_; }

    friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

private:
    friend Polygon validate(std::span<const Point> raw);

    std::vector<Point> vertices_;
    Wide area_ = 0;
    Rect bbox_;
};

// Checks the boundary and returns the normalized polygon.
// Throws Error with NotClosedOrthogonal, SelfIntersecting, CollinearRun,
// TooFewVertices or CoordinateOverflow.
Polygon validate(std::span<const Point> raw);

// Same as validate, but first drops repeated points and merges collinear runs.
Polygon validate_fixed(std::span<const Point> raw);

BigInt area(const Polygon& p);

std::vector<VertexClass> classify_vertices(const Polygon& p);

std::vector<Knob> knobs(const Polygon& p);

// Convex vertices whose two neighbours are concave.
std::vector<std::size_t> non_knob_convex_vertices(const Polygon& p);

Location contains_point(const Polygon& p, const HalfPoint& q);
inline Location contains_point(const Polygon& p, const Point& q) { return contains_point(p, HalfPoint{q.x, q.y, false, false}); }

// r lies in the closed region of p. r must have positive width and height.
bool contains_rect(const Polygon& p, const Rect& r);

Polygon scale(const Polygon& p, Coord factor);

// Counter-clockwise quarter turn about the origin: (x, y) -> (-y, x).
Polygon rotate90(const Polygon& p);

bool is_orthogonally_convex(const Polygon& p);

namespace detail {
// Sweep-line simplicity test over orthogonal edges. Exposed for tests.
bool boundary_is_simple(std::span<const Point> ring);
// Quadratic reference version of the same test.
bool boundary_is_simple_pairwise(std::span<const Point> ring);
}  // namespace detail

}  // namespace orthocover
