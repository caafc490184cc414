#include "orthocover/polygon.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <tuple>

namespace orthocover {

namespace {

struct HEdge {
    Coord y, xlo, xhi;
    std::size_t idx;
};

struct VEdge {
    Coord x, ylo, yhi;
    std::size_t idx;
};

bool in_bounds(Coord c) { return c >= -kCoordLimit && c <= kCoordLimit; }

bool adjacent(std::size_t i, std::size_t j, std::size_t n) { return (i + 1) % n == j || (j + 1) % n == i; }

void split_edges(std::span<const Point> ring, std::vector<HEdge>& hs, std::vector<VEdge>& vs) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if (a.y == b.y) {
            hs.push_back({a.y, std::min(a.x, b.x), std::max(a.x, b.x), i});
        } else {
            vs.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y), i});
        }
    }
}

Wide signed_area(std::span<const Point> ring) {
    // Green's theorem over the vertical edges; unsigned arithmetic wraps and
    // the true value fits, so the final cast is exact.
    UWide acc = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if (a.x != b.x) continue;
        const Wide dy = static_cast<Wide>(b.y) - static_cast<Wide>(a.y);
        acc += static_cast<UWide>(static_cast<Wide>(a.x)) * static_cast<UWide>(dy);
    }
    return static_cast<Wide>(acc);
}

Wide doubled(Coord c, bool half) { return 2 * static_cast<Wide>(c) + (half ? 1 : 0); }

std::vector<Point> drop_degenerate(std::span<const Point> raw) {
    std::vector<Point> pts(raw.begin(), raw.end());
    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        std::vector<Point> out;
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = out.empty() ? pts[(i + n - 1) % n] : out.back();
            const Point& cur = pts[i];
            const Point& next = pts[(i + 1) % n];
            if (cur == prev) {
                changed = true;
                continue;
            }
            const bool collinear = (prev.x == cur.x && cur.x == next.x) || (prev.y == cur.y && cur.y == next.y);
            if (collinear) {
                changed = true;
                continue;
            }
            out.push_back(cur);
        }
        pts = std::move(out);
    }
    return pts;
}

}  // namespace

const char* to_string(Direction d) {
    switch (d) {
        case Direction::Left: return "left";
        case Direction::Right: return "right";
        case Direction::Top: return "top";
        case Direction::Bottom: return "bottom";
    }
    return "?";
}

const Point& Polygon::vertex(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

namespace detail {

bool boundary_is_simple(std::span<const Point> ring) {
    const std::size_t n = ring.size();
    std::vector<HEdge> hs;
    std::vector<VEdge> vs;
    split_edges(ring, hs, vs);

    // Parallel edges on a common line must not even touch: no two horizontal
    // (or two vertical) edges are adjacent in an alternating ring.
    std::sort(hs.begin(), hs.end(), [](const HEdge& a, const HEdge& b) { return std::tie(a.y, a.xlo) < std::tie(b.y, b.xlo); });
    for (std::size_t i = 1; i < hs.size(); ++i) {
        if (hs[i].y == hs[i - 1].y && hs[i].xlo <= hs[i - 1].xhi) return false;
    }
    std::sort(vs.begin(), vs.end(), [](const VEdge& a, const VEdge& b) { return std::tie(a.x, a.ylo) < std::tie(b.x, b.ylo); });
    for (std::size_t i = 1; i < vs.size(); ++i) {
        if (vs[i].x == vs[i - 1].x && vs[i].ylo <= vs[i - 1].yhi) return false;
    }

    struct Event {
        Coord x;
        int kind;  // 0 insert, 1 query, 2 remove
        std::size_t ref;
    };
    std::vector<Event> events;
    events.reserve(2 * hs.size() + vs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        events.push_back({hs[i].xlo, 0, i});
        events.push_back({hs[i].xhi, 2, i});
    }
    for (std::size_t i = 0; i < vs.size(); ++i) events.push_back({vs[i].x, 1, i});
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return std::tie(a.x, a.kind) < std::tie(b.x, b.kind); });

    std::multiset<std::pair<Coord, std::size_t>> active;
    for (const Event& e : events) {
        if (e.kind == 0) {
            active.insert({hs[e.ref].y, hs[e.ref].idx});
        } else if (e.kind == 2) {
            active.erase(active.find({hs[e.ref].y, hs[e.ref].idx}));
        } else {
            const VEdge& v = vs[e.ref];
            for (auto it = active.lower_bound({v.ylo, 0}); it != active.end() && it->first <= v.yhi; ++it) {
                if (!adjacent(it->second, v.idx, n)) return false;
            }
        }
    }
    return true;
}

bool boundary_is_simple_pairwise(std::span<const Point> ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adjacent(i, j, n)) continue;
            const Point& c = ring[j];
            const Point& d = ring[(j + 1) % n];
            const bool x_overlap = std::max(std::min(a.x, b.x), std::min(c.x, d.x)) <= std::min(std::max(a.x, b.x), std::max(c.x, d.x));
            const bool y_overlap = std::max(std::min(a.y, b.y), std::min(c.y, d.y)) <= std::min(std::max(a.y, b.y), std::max(c.y, d.y));
            if (x_overlap && y_overlap) return false;
        }
    }
    return true;
}

}  // namespace detail

Polygon validate(std::span<const Point> raw) {
    const std::size_t n = raw.size();
    for (const Point& p : raw) {
        if (!in_bounds(p.x) || !in_bounds(p.y)) {
            throw Error(ErrorCode::CoordinateOverflow, "coordinate magnitude exceeds 2^62");
        }
    }
    if (n < 2) throw Error(ErrorCode::TooFewVertices, "need at least 4 vertices, got " + std::to_string(n));

    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = raw[i];
        const Point& b = raw[(i + 1) % n];
        if (a == b) throw Error(ErrorCode::NotClosedOrthogonal, "zero-length edge at vertex " + std::to_string(i));
        if (a.x != b.x && a.y != b.y) throw Error(ErrorCode::NotClosedOrthogonal, "edge " + std::to_string(i) + " is not axis-parallel");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = raw[(i + n - 1) % n];
        const Point& b = raw[i];
        const Point& c = raw[(i + 1) % n];
        const bool first_horizontal = a.y == b.y;
        const bool second_horizontal = b.y == c.y;
        if (first_horizontal == second_horizontal) {
            throw Error(ErrorCode::CollinearRun, "collinear edges meet at vertex " + std::to_string(i));
        }
    }
    if (n < 4) throw Error(ErrorCode::TooFewVertices, "need at least 4 vertices, got " + std::to_string(n));

    Coord min_x = raw[0].x, max_x = raw[0].x, min_y = raw[0].y, max_y = raw[0].y;
    for (const Point& p : raw) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    constexpr Wide kMaxSpan = std::numeric_limits<Coord>::max();
    if (static_cast<Wide>(max_x) - min_x > kMaxSpan || static_cast<Wide>(max_y) - min_y > kMaxSpan) {
        throw Error(ErrorCode::CoordinateOverflow, "bounding box span does not fit a signed 64-bit integer");
    }

    if (!detail::boundary_is_simple(raw)) throw Error(ErrorCode::SelfIntersecting, "boundary touches or crosses itself");

    std::vector<Point> ring(raw.begin(), raw.end());
    Wide a = signed_area(ring);
    if (a < 0) {
        std::reverse(ring.begin(), ring.end());
        a = -a;
    }
    const auto start = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), start, ring.end());

    Polygon p;
    p.vertices_ = std::move(ring);
    p.area_ = a;
    p.bbox_ = Rect{min_x, min_y, max_x, max_y};
    return p;
}

Polygon validate_fixed(std::span<const Point> raw) {
    const std::vector<Point> cleaned = drop_degenerate(raw);
    return validate(cleaned);
}

BigInt area(const Polygon& p) { return to_bigint(p.area_wide()); }

std::vector<VertexClass> classify_vertices(const Polygon& p) {
    const std::size_t n = p.size();
    std::vector<VertexClass> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        const Point& a = p.vertex(k - 1);
        const Point& b = p.vertex(k);
        const Point& c = p.vertex(k + 1);
        // Only the signs matter; each factor is a sign of a coordinate delta.
        const int dx1 = (b.x > a.x) - (b.x < a.x);
        const int dy1 = (b.y > a.y) - (b.y < a.y);
        const int dx2 = (c.x > b.x) - (c.x < b.x);
        const int dy2 = (c.y > b.y) - (c.y < b.y);
        const int cross = dx1 * dy2 - dy1 * dx2;
        out[i] = cross > 0 ? VertexClass::Convex : VertexClass::Concave;
    }
    return out;
}

std::vector<Knob> knobs(const Polygon& p) {
    const auto cls = classify_vertices(p);
    const std::size_t n = p.size();
    std::vector<Knob> out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (cls[i] != VertexClass::Convex || cls[j] != VertexClass::Convex) continue;
        const Point& a = p.vertices()[i];
        const Point& b = p.vertices()[j];
        Direction d;
        if (a.y == b.y) {
            d = b.x > a.x ? Direction::Bottom : Direction::Top;
        } else {
            d = b.y > a.y ? Direction::Right : Direction::Left;
        }
        out.push_back({i, j, d});
    }
    return out;
}

std::vector<std::size_t> non_knob_convex_vertices(const Polygon& p) {
    const auto cls = classify_vertices(p);
    const std::size_t n = p.size();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] == VertexClass::Convex && cls[(i + n - 1) % n] == VertexClass::Concave &&
            cls[(i + 1) % n] == VertexClass::Concave) {
            out.push_back(i);
        }
    }
    return out;
}

Location contains_point(const Polygon& p, const HalfPoint& q) {
    const Wide qx = doubled(q.x, q.half_x);
    const Wide qy = doubled(q.y, q.half_y);
    const std::size_t n = p.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p.vertices()[i];
        const Point& b = p.vertices()[(i + 1) % n];
        if (a.x == b.x) {
            const Wide ex = 2 * static_cast<Wide>(a.x);
            const Wide lo = 2 * static_cast<Wide>(std::min(a.y, b.y));
            const Wide hi = 2 * static_cast<Wide>(std::max(a.y, b.y));
            if (qx == ex && lo <= qy && qy <= hi) return Location::Boundary;
            if (ex > qx && lo <= qy && qy < hi) inside = !inside;
        } else {
            const Wide ey = 2 * static_cast<Wide>(a.y);
            const Wide lo = 2 * static_cast<Wide>(std::min(a.x, b.x));
            const Wide hi = 2 * static_cast<Wide>(std::max(a.x, b.x));
            if (qy == ey && lo <= qx && qx <= hi) return Location::Boundary;
        }
    }
    return inside ? Location::Interior : Location::Exterior;
}

bool contains_rect(const Polygon& p, const Rect& r) {
    if (r.x1 >= r.x2 || r.y1 >= r.y2) return false;
    const std::size_t n = p.size();
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[i + 1 == n ? 0 : i + 1];
        if (a.x == b.x) {
            if (r.x1 < a.x && a.x < r.x2 && std::min(a.y, b.y) < r.y2 && std::max(a.y, b.y) > r.y1) return false;
        } else {
            if (r.y1 < a.y && a.y < r.y2 && std::min(a.x, b.x) < r.x2 && std::max(a.x, b.x) > r.x1) return false;
        }
    }
    // No edge meets the open interior, so the whole rectangle is on one side.
    const Wide sx = static_cast<Wide>(r.x1) + r.x2;
    const Wide sy = static_cast<Wide>(r.y1) + r.y2;
    const auto floor_half = [](Wide s) { return static_cast<Coord>(s >= 0 ? s / 2 : -((-s + 1) / 2)); };
    const HalfPoint center{floor_half(sx), floor_half(sy), (sx & 1) != 0, (sy & 1) != 0};
    return contains_point(p, center) == Location::Interior;
}

Polygon scale(const Polygon& p, Coord factor) {
    if (factor < 1) throw Error(ErrorCode::CoordinateOverflow, "scale factor must be a positive integer");
    std::vector<Point> pts;
    pts.reserve(p.size());
    for (const Point& v : p.vertices()) {
        const Wide x = static_cast<Wide>(v.x) * factor;
        const Wide y = static_cast<Wide>(v.y) * factor;
        if (x < -kCoordLimit || x > kCoordLimit || y < -kCoordLimit || y > kCoordLimit) {
            throw Error(ErrorCode::CoordinateOverflow, "scaled coordinate exceeds 2^62");
        }
        pts.push_back({static_cast<Coord>(x), static_cast<Coord>(y)});
    }
    return validate(pts);
}

Polygon rotate90(const Polygon& p) {
    std::vector<Point> pts;
    pts.reserve(p.size());
    for (const Point& v : p.vertices()) pts.push_back({-v.y, v.x});
    return validate(pts);
}

namespace {

int direction_changes(std::vector<Coord> seq) {
    seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
    while (seq.size() > 1 && seq.back() == seq.front()) seq.pop_back();
    const std::size_t m = seq.size();
    if (m < 2) return 0;
    int changes = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const bool up_here = seq[(i + 1) % m] > seq[i];
        const bool up_next = seq[(i + 2) % m] > seq[(i + 1) % m];
        if (up_here != up_next) ++changes;
    }
    return changes;
}

}  // namespace

bool is_orthogonally_convex(const Polygon& p) {
    std::vector<Coord> xs, ys;
    xs.reserve(p.size());
    ys.reserve(p.size());
    for (const Point& v : p.vertices()) {
        xs.push_back(v.x);
        ys.push_back(v.y);
    }
    return direction_changes(std::move(xs)) == 2 && direction_changes(std::move(ys)) == 2;
}

}  // namespace orthocover
