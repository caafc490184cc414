#include "orthocover/squares.hpp"

#include <limits>
#include <string>

namespace orthocover {

namespace {

struct Signs {
    int sx;
    int sy;
};

Signs signs_of(Quadrant q) {
    switch (q) {
        case Quadrant::NE: return {1, 1};
        case Quadrant::NW: return {-1, 1};
        case Quadrant::SE: return {1, -1};
        case Quadrant::SW: return {-1, -1};
    }
    return {1, 1};
}

std::string describe(const Square& s) {
    return "square (" + std::to_string(s.corner.x) + "," + std::to_string(s.corner.y) + ") side " + std::to_string(s.side);
}

bool probe(const Polygon& p, Coord x, Coord y, Coord side) {
    const Wide hi_x = static_cast<Wide>(x) + side;
    const Wide hi_y = static_cast<Wide>(y) + side;
    constexpr Wide kMax = std::numeric_limits<Coord>::max();
    if (hi_x > kMax || hi_y > kMax) return false;
    return contains_rect(p, Rect{x, y, static_cast<Coord>(hi_x), static_cast<Coord>(hi_y)});
}

}  // namespace

const char* to_string(Quadrant q) {
    switch (q) {
        case Quadrant::NE: return "NE";
        case Quadrant::NW: return "NW";
        case Quadrant::SE: return "SE";
        case Quadrant::SW: return "SW";
    }
    return "?";
}

bool is_valid_square(const Polygon& p, const Square& s) {
    return s.side >= 1 && probe(p, s.corner.x, s.corner.y, s.side);
}

std::optional<Square> largest_anchored_square(const Polygon& p, Point anchor, Quadrant q) {
    const auto [sx, sy] = signs_of(q);
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    constexpr Wide kUnbounded = std::numeric_limits<Wide>::max();
    Wide limit = kUnbounded;
    // Work in a frame where the square is [0,s]^2. An edge cuts the open
    // interior of every square larger than the bound it imposes.
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[i + 1 == n ? 0 : i + 1];
        const Wide ax = sx * (static_cast<Wide>(a.x) - anchor.x);
        const Wide ay = sy * (static_cast<Wide>(a.y) - anchor.y);
        const Wide bx = sx * (static_cast<Wide>(b.x) - anchor.x);
        const Wide by = sy * (static_cast<Wide>(b.y) - anchor.y);
        if (a.x == b.x) {
            const Wide lo = std::min(ay, by);
            const Wide hi = std::max(ay, by);
            if (ax > 0 && hi > 0) limit = std::min(limit, std::max(ax, lo));
        } else {
            const Wide lo = std::min(ax, bx);
            const Wide hi = std::max(ax, bx);
            if (ay > 0 && hi > 0) limit = std::min(limit, std::max(ay, lo));
        }
    }
    if (limit == kUnbounded || limit < 1) return std::nullopt;
    // Nothing crosses the open interior, so one interior sample decides.
    const HalfPoint center{sx > 0 ? anchor.x : anchor.x - 1, sy > 0 ? anchor.y : anchor.y - 1, true, true};
    if (contains_point(p, center) != Location::Interior) return std::nullopt;
    const auto side = static_cast<Coord>(limit);
    const Coord cx = sx > 0 ? anchor.x : anchor.x - side;
    const Coord cy = sy > 0 ? anchor.y : anchor.y - side;
    return Square{{cx, cy}, side};
}

Quadrant vertex_quadrant(const Polygon& p, std::size_t v) {
    const auto i = static_cast<std::ptrdiff_t>(v);
    const Point& cur = p.vertex(i);
    const Point& prev = p.vertex(i - 1);
    const Point& next = p.vertex(i + 1);
    // One neighbour is horizontal from v and the other vertical.
    const Point& horiz = prev.y == cur.y ? prev : next;
    const Point& vert = prev.y == cur.y ? next : prev;
    const bool east = horiz.x > cur.x;
    const bool north = vert.y > cur.y;
    if (north) return east ? Quadrant::NE : Quadrant::NW;
    return east ? Quadrant::SE : Quadrant::SW;
}

Square mcs(const Polygon& p, std::size_t v) {
    if (v >= p.size()) throw Error(ErrorCode::NotConvexVertex, "vertex index " + std::to_string(v) + " out of range");
    if (classify_vertices(p)[v] != VertexClass::Convex) {
        throw Error(ErrorCode::NotConvexVertex, "vertex " + std::to_string(v) + " is concave");
    }
    const auto s = largest_anchored_square(p, p.vertices()[v], vertex_quadrant(p, v));
    if (!s) throw Error(ErrorCode::InternalInvariantViolation, "convex vertex without a corner square");
    return *s;
}

bool is_maximal(const Polygon& p, const Square& s) {
    if (!is_valid_square(p, s)) throw Error(ErrorCode::NotValidSquare, describe(s));
    const Coord x = s.corner.x;
    const Coord y = s.corner.y;
    const Coord grown = s.side + 1;
    return !probe(p, x, y, grown) && !probe(p, x - 1, y, grown) && !probe(p, x, y - 1, grown) &&
           !probe(p, x - 1, y - 1, grown);
}

Square maximalize(const Polygon& p, const Square& s) {
    if (!is_valid_square(p, s)) throw Error(ErrorCode::NotValidSquare, describe(s));
    Square cur = s;
    for (;;) {
        const Coord x = cur.corner.x;
        const Coord y = cur.corner.y;
        const Coord grown = cur.side + 1;
        if (probe(p, x, y, grown)) {
            // Repeated growth with a fixed corner ends at the anchored maximum.
            cur = *largest_anchored_square(p, cur.corner, Quadrant::NE);
        } else if (probe(p, x - 1, y, grown)) {
            cur = Square{{x - 1, y}, grown};
        } else if (probe(p, x, y - 1, grown)) {
            cur = Square{{x, y - 1}, grown};
        } else if (probe(p, x - 1, y - 1, grown)) {
            cur = Square{{x - 1, y - 1}, grown};
        } else {
            return cur;
        }
    }
}

}  // namespace orthocover
