#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orthocover {

using Coord = std::int64_t;
using Wide = __int128;
using UWide = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

// Validated polygons keep every coordinate within [-kCoordLimit, kCoordLimit].
inline constexpr Coord kCoordLimit = Coord{1} << 62;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

// Closed axis-parallel rectangle [x1, x2] x [y1, y2]; x1 < x2 and y1 < y2.
struct Rect {
    Coord x1 = 0;
    Coord y1 = 0;
    Coord x2 = 0;
    Coord y2 = 0;

    friend auto operator<=>(const Rect&, const Rect&) = default;

    Coord width() const { return x2 - x1; }
    Coord height() const { return y2 - y1; }
    UWide area() const { return static_cast<UWide>(width()) * static_cast<UWide>(height()); }
};

// True when the open interiors of a and b intersect.
inline bool interiors_overlap(const Rect& a, const Rect& b) {
    return a.x1 < b.x2 && b.x1 < a.x2 && a.y1 < b.y2 && b.y1 < a.y2;
}

inline bool rect_contains(const Rect& outer, const Rect& inner) {
    return outer.x1 <= inner.x1 && inner.x2 <= outer.x2 && outer.y1 <= inner.y1 && inner.y2 <= outer.y2;
}

// Intersection of two rectangles whose interiors overlap.
inline Rect intersection(const Rect& a, const Rect& b) {
    return Rect{std::max(a.x1, b.x1), std::max(a.y1, b.y1), std::min(a.x2, b.x2), std::min(a.y2, b.y2)};
}

BigInt to_bigint(UWide v);
BigInt to_bigint(Wide v);
std::string to_decimal(UWide v);

}  // namespace orthocover
