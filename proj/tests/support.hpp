#pragma once

// Test-only reference implementations. None of these call into the library's
// geometry, so they can serve as independent checks on small inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "orthocover/cover.hpp"
#include "orthocover/polygon.hpp"
#include "orthocover/testgen.hpp"

namespace oracle {

using orthocover::Coord;
using orthocover::Point;
using orthocover::Rect;

// Unit cells of a small region, indexed relative to a bounding box.
struct Cells {
    Coord x0 = 0, y0 = 0, w = 0, h = 0;
    std::vector<char> in;

    bool at(Coord x, Coord y) const {
        if (x < x0 || y < y0 || x >= x0 + w || y >= y0 + h) return false;
        return in[static_cast<std::size_t>((y - y0) * w + (x - x0))] != 0;
    }
    void set(Coord x, Coord y, bool v = true) { in[static_cast<std::size_t>((y - y0) * w + (x - x0))] = v; }
    std::size_t count() const { return static_cast<std::size_t>(std::count(in.begin(), in.end(), 1)); }
};

// Even-odd ray cast of the cell centre against the raw ring, in doubled coordinates.
inline bool centre_inside(const std::vector<Point>& ring, Coord cx, Coord cy) {
    const Coord px = 2 * cx + 1, py = 2 * cy + 1;
    bool inside = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point a = ring[i], b = ring[(i + 1) % ring.size()];
        if (a.x != b.x) continue;  // horizontal edges never cross a horizontal ray at odd y
        const Coord ylo = 2 * std::min(a.y, b.y), yhi = 2 * std::max(a.y, b.y);
        if (py > ylo && py < yhi && 2 * a.x > px) inside = !inside;
    }
    return inside;
}

inline Cells fill(const std::vector<Point>& ring) {
    Cells c;
    Coord x1 = ring[0].x, x2 = ring[0].x, y1 = ring[0].y, y2 = ring[0].y;
    for (const Point& p : ring) {
        x1 = std::min(x1, p.x), x2 = std::max(x2, p.x), y1 = std::min(y1, p.y), y2 = std::max(y2, p.y);
    }
    c.x0 = x1, c.y0 = y1, c.w = x2 - x1, c.h = y2 - y1;
    c.in.assign(static_cast<std::size_t>(c.w * c.h), 0);
    for (Coord y = y1; y < y2; ++y)
        for (Coord x = x1; x < x2; ++x)
            if (centre_inside(ring, x, y)) c.set(x, y);
    return c;
}

inline Cells fill(const orthocover::Polygon& p) { return fill(p.vertices()); }

struct Sq {
    Coord x, y, s;
    friend auto operator<=>(const Sq&, const Sq&) = default;
};

inline bool valid(const Cells& c, const Sq& q) {
    for (Coord y = q.y; y < q.y + q.s; ++y)
        for (Coord x = q.x; x < q.x + q.s; ++x)
            if (!c.at(x, y)) return false;
    return true;
}

inline std::vector<Sq> valid_squares(const Cells& c) {
    std::vector<Sq> out;
    for (Coord s = 1; s <= std::min(c.w, c.h); ++s)
        for (Coord y = c.y0; y + s <= c.y0 + c.h; ++y)
            for (Coord x = c.x0; x + s <= c.x0 + c.w; ++x)
                if (valid(c, {x, y, s})) out.push_back({x, y, s});
    return out;
}

inline bool contains(const Sq& outer, const Sq& inner) {
    return outer.x <= inner.x && outer.y <= inner.y && inner.x + inner.s <= outer.x + outer.s && inner.y + inner.s <= outer.y + outer.s;
}

// Valid squares contained in no strictly larger valid square, by pairwise comparison.
inline std::vector<Sq> maximal_squares(const Cells& c) {
    const std::vector<Sq> all = valid_squares(c);
    std::vector<Sq> out;
    for (const Sq& a : all) {
        bool maximal = true;
        for (const Sq& b : all)
            if (b.s > a.s && contains(b, a)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(a);
    }
    return out;
}

// Minimum cover by maximal squares, iterative deepening on the first uncovered cell.
inline std::size_t min_cover(const Cells& c) {
    const std::vector<Sq> sq = maximal_squares(c);
    std::vector<Point> cells;
    for (Coord y = c.y0; y < c.y0 + c.h; ++y)
        for (Coord x = c.x0; x < c.x0 + c.w; ++x)
            if (c.at(x, y)) cells.push_back({x, y});
    std::vector<int> covered(cells.size(), 0);
    auto covers = [](const Sq& q, const Point& p) { return p.x >= q.x && p.x < q.x + q.s && p.y >= q.y && p.y < q.y + q.s; };
    std::function<bool(std::size_t)> search = [&](std::size_t budget) -> bool {
        std::size_t first = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (!covered[i]) {
                first = i;
                break;
            }
        if (first == cells.size()) return true;
        if (budget == 0) return false;
        for (const Sq& q : sq) {
            if (!covers(q, cells[first])) continue;
            for (std::size_t i = 0; i < cells.size(); ++i) covered[i] += covers(q, cells[i]);
            const bool ok = search(budget - 1);
            for (std::size_t i = 0; i < cells.size(); ++i) covered[i] -= covers(q, cells[i]);
            if (ok) return true;
        }
        return false;
    };
    for (std::size_t k = 0;; ++k)
        if (search(k)) return k;
}

// Area of a union of rectangles by painting unit cells; coordinates must be small.
inline std::uint64_t painted_area(const std::vector<Rect>& rects) {
    std::set<std::pair<Coord, Coord>> cells;
    for (const Rect& r : rects)
        for (Coord x = r.x1; x < r.x2; ++x)
            for (Coord y = r.y1; y < r.y2; ++y) cells.insert({x, y});
    return cells.size();
}

// 4-connected components of the cells of c outside the square q.
inline std::vector<std::set<std::pair<Coord, Coord>>> components_outside(const Cells& c, const Sq& q) {
    Cells rest = c;
    for (Coord y = q.y; y < q.y + q.s; ++y)
        for (Coord x = q.x; x < q.x + q.s; ++x)
            if (rest.at(x, y)) rest.set(x, y, false);
    std::vector<std::set<std::pair<Coord, Coord>>> comps;
    std::set<std::pair<Coord, Coord>> seen;
    for (Coord y = c.y0; y < c.y0 + c.h; ++y)
        for (Coord x = c.x0; x < c.x0 + c.w; ++x) {
            if (!rest.at(x, y) || seen.count({x, y})) continue;
            std::set<std::pair<Coord, Coord>> comp;
            std::vector<std::pair<Coord, Coord>> stack{{x, y}};
            seen.insert({x, y});
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                comp.insert({cx, cy});
                const std::pair<Coord, Coord> nb[4] = {{cx + 1, cy}, {cx - 1, cy}, {cx, cy + 1}, {cx, cy - 1}};
                for (auto [nx, ny] : nb)
                    if (rest.at(nx, ny) && seen.insert({nx, ny}).second) stack.push_back({nx, ny});
            }
            comps.push_back(std::move(comp));
        }
    return comps;
}

// Sides of q (bit 1 bottom, 2 right, 4 top, 8 left) that a component touches along a cell edge.
inline unsigned contact_sides(const std::set<std::pair<Coord, Coord>>& comp, const Sq& q) {
    unsigned sides = 0;
    for (auto [x, y] : comp) {
        const bool in_x = x >= q.x && x < q.x + q.s, in_y = y >= q.y && y < q.y + q.s;
        if (in_x && y == q.y - 1) sides |= 1;
        if (in_y && x == q.x + q.s) sides |= 2;
        if (in_x && y == q.y + q.s) sides |= 4;
        if (in_y && x == q.x - 1) sides |= 8;
    }
    return sides;
}

}  // namespace oracle

namespace corpus {

// The 300-polygon mixed corpus: rect unions, staircases and orthogonally convex
// shapes with at most 24 vertices and area at most 2000.
inline std::vector<orthocover::Polygon> mixed(std::size_t count = 300) {
    using namespace orthocover;
    std::vector<Polygon> out;
    for (std::uint64_t i = 0; out.size() < count; ++i) {
        GenSpec g;
        g.kind = i % 3 == 0 ? GenKind::RectUnion : (i % 3 == 1 ? GenKind::Staircase : GenKind::OrthoConvex);
        g.seed = i * 7919 + 13;
        g.max_cell = 1 + static_cast<Coord>(i % 9);
        g.grid = 3 + static_cast<int>(i % 8);
        g.pieces = 2 + static_cast<int>(i % 7);
        g.max_vertices = 24;
        g.max_area = 2000;
        g.steps = 1 + static_cast<int>(i % 11);
        g.unit = 0;
        g.columns = 1 + static_cast<int>(i % 6);
        Polygon p = generate(g);
        if (p.size() > 24 || p.area_wide() > 2000) continue;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace corpus
