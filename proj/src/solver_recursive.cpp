#include "orthocover/solver_recursive.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace orthocover {

namespace {

struct SideName {
    unsigned sides;
    unsigned corners;
    const char* name;
};

constexpr std::array<SideName, 12> kClasses{{
    {kTop, 0, "t"},
    {kBottom, 0, "b"},
    {kLeft, 0, "l"},
    {kRight, 0, "r"},
    {kTop | kRight, kTopRight, "tr"},
    {kBottom | kRight, kBottomRight, "br"},
    {kTop | kLeft, kTopLeft, "tl"},
    {kBottom | kLeft, kBottomLeft, "bl"},
    {kTop | kRight | kBottom, kTopRight | kBottomRight, "trb"},
    {kTop | kLeft | kBottom, kTopLeft | kBottomLeft, "tlb"},
    {kRight | kBottom | kLeft, kBottomRight | kBottomLeft, "rbl"},
    {kRight | kTop | kLeft, kTopRight | kTopLeft, "rtl"},
}};

Wide mod(Wide a, Wide m) {
    const Wide r = a % m;
    return r < 0 ? r + m : r;
}

// Square boundary walked counter-clockwise from the bottom-left corner.
class Perimeter {
public:
    explicit Perimeter(const Square& s) : r_(s.rect()), d_(s.side) {}

    Wide length() const { return 4 * d_; }
    Wide side() const { return d_; }

    bool on_square(Point q) const { return r_.x1 <= q.x && q.x <= r_.x2 && r_.y1 <= q.y && q.y <= r_.y2; }

    Wide param(Point q) const {
        if (q.y == r_.y1) return static_cast<Wide>(q.x) - r_.x1;
        if (q.x == r_.x2) return d_ + (static_cast<Wide>(q.y) - r_.y1);
        if (q.y == r_.y2) return 2 * d_ + (static_cast<Wide>(r_.x2) - q.x);
        return 3 * d_ + (static_cast<Wide>(r_.y2) - q.y);
    }

    // Corner i: 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left.
    Point corner(int i) const {
        switch (i) {
            case 0: return {r_.x1, r_.y1};
            case 1: return {r_.x2, r_.y1};
            case 2: return {r_.x2, r_.y2};
            default: return {r_.x1, r_.y2};
        }
    }

    // Corners met walking from `from` for `dist`, exclusive of both ends.
    std::vector<Point> corners_ccw(Wide from, Wide dist) const {
        std::vector<std::pair<Wide, int>> hits;
        for (int i = 0; i < 4; ++i) {
            const Wide off = mod(i * d_ - from, length());
            if (off > 0 && off < dist) hits.push_back({off, i});
        }
        std::sort(hits.begin(), hits.end());
        std::vector<Point> out;
        for (const auto& h : hits) out.push_back(corner(h.second));
        return out;
    }

    std::vector<Point> corners_cw(Wide from, Wide dist) const {
        std::vector<std::pair<Wide, int>> hits;
        for (int i = 0; i < 4; ++i) {
            const Wide off = mod(from - i * d_, length());
            if (off > 0 && off < dist) hits.push_back({off, i});
        }
        std::sort(hits.begin(), hits.end());
        std::vector<Point> out;
        for (const auto& h : hits) out.push_back(corner(h.second));
        return out;
    }

    SideSignature signature(Wide from, Wide dist) const {
        SideSignature sig;
        constexpr unsigned side_bits[4] = {kBottom, kRight, kTop, kLeft};
        constexpr unsigned corner_bits[4] = {kBottomLeft, kBottomRight, kTopRight, kTopLeft};
        const Wide end = from + dist;
        for (int i = 0; i < 4; ++i) {
            for (int wrap = 0; wrap < 2; ++wrap) {
                const Wide lo = i * d_ + wrap * length();
                const Wide hi = lo + d_;
                if (std::min(hi, end) - std::max(lo, from) > 0) sig.sides |= side_bits[i];
            }
            if (mod(i * d_ - from, length()) <= dist) sig.corners |= corner_bits[i];
        }
        return sig;
    }

private:
    Rect r_;
    Wide d_;
};

// p's boundary with extra vertices wherever it meets the square's boundary.
std::vector<Point> refine(const Polygon& p, const Rect& s) {
    std::vector<Point> out;
    const auto& vs = p.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point u = vs[i];
        const Point w = vs[i + 1 == n ? 0 : i + 1];
        out.push_back(u);
        std::vector<Point> extra;
        if (u.y == w.y) {
            if (u.y < s.y1 || u.y > s.y2) continue;
            const Coord lo = std::max(std::min(u.x, w.x), s.x1);
            const Coord hi = std::min(std::max(u.x, w.x), s.x2);
            if (lo > hi) continue;
            if (lo < hi && u.y != s.y1 && u.y != s.y2) {
                throw Error(ErrorCode::InternalInvariantViolation, "polygon edge crosses the square");
            }
            extra = {{lo, u.y}, {hi, u.y}};
            if (w.x < u.x) std::swap(extra[0], extra[1]);
        } else {
            if (u.x < s.x1 || u.x > s.x2) continue;
            const Coord lo = std::max(std::min(u.y, w.y), s.y1);
            const Coord hi = std::min(std::max(u.y, w.y), s.y2);
            if (lo > hi) continue;
            if (lo < hi && u.x != s.x1 && u.x != s.x2) {
                throw Error(ErrorCode::InternalInvariantViolation, "polygon edge crosses the square");
            }
            extra = {{u.x, lo}, {u.x, hi}};
            if (w.y < u.y) std::swap(extra[0], extra[1]);
        }
        for (const Point& e : extra) {
            if (e != u && e != w && e != out.back()) out.push_back(e);
        }
    }
    return out;
}

bool segment_outside(Point a, Point b, const Rect& s) {
    const Wide mx = static_cast<Wide>(a.x) + b.x;
    const Wide my = static_cast<Wide>(a.y) + b.y;
    return mx < 2 * static_cast<Wide>(s.x1) || mx > 2 * static_cast<Wide>(s.x2) || my < 2 * static_cast<Wide>(s.y1) ||
           my > 2 * static_cast<Wide>(s.y2);
}

Polygon ring_to_polygon(const std::vector<Point>& ring, const char* what) {
    try {
        return validate_fixed(ring);
    } catch (const Error& e) {
        throw Error(ErrorCode::InternalInvariantViolation, std::string(what) + " is not a valid polygon: " + e.what());
    }
}

// Splits a pack around the squares it produces inside `s`.
std::vector<RecPack> drop_squares_inside(const RecPack& r, const Rect& s) {
    const bool horizontal = r.orientation == Orientation::Horizontal;
    const Coord cross_lo = horizontal ? r.anchor.y : r.anchor.x;
    const Coord s_cross_lo = horizontal ? s.y1 : s.x1;
    const Coord s_cross_hi = horizontal ? s.y2 : s.x2;
    if (cross_lo < s_cross_lo || static_cast<Wide>(cross_lo) + r.t > s_cross_hi) return {r};
    const Wide along = horizontal ? r.anchor.x : r.anchor.y;
    const Wide s_lo = horizontal ? s.x1 : s.y1;
    const Wide s_hi = horizontal ? s.x2 : s.y2;
    // Indices i with s_lo <= along + i t and along + (i + 1) t <= s_hi.
    const Wide t = r.t;
    const Wide num_lo = s_lo - along;
    Wide first = num_lo <= 0 ? 0 : (num_lo + t - 1) / t;
    const Wide num_hi = s_hi - along;
    Wide last = num_hi < t ? -1 : num_hi / t - 1;
    first = std::max<Wide>(first, 0);
    last = std::min<Wide>(last, r.eta - 1);
    if (first > last) return {r};
    std::vector<RecPack> out;
    if (first > 0) out.push_back(make_pack(r.anchor, r.t, static_cast<Coord>(first), r.orientation));
    if (last < r.eta - 1) {
        const Point start = r.square(static_cast<Coord>(last + 1)).corner;
        out.push_back(make_pack(start, r.t, static_cast<Coord>(r.eta - 1 - last), r.orientation));
    }
    return out;
}

// Every corner of s that is a vertex of `child`, other than a concave vertex
// inherited from the parent, is an end of a knob lying on a side of s.
bool corners_on_knobs(const Polygon& parent, const Polygon& child, const Square& s) {
    const auto parent_class = classify_vertices(parent);
    const auto inherited_concave = [&](Point v) {
        for (std::size_t i = 0; i < parent.size(); ++i) {
            if (parent.vertices()[i] == v) return parent_class[i] == VertexClass::Concave;
        }
        return false;
    };
    const Rect r = s.rect();
    const auto ks = knobs(child);
    const std::size_t n = child.size();
    const auto on_side = [&](Point a, Point b) {
        if (a.x == b.x) return (a.x == r.x1 || a.x == r.x2) && std::min(a.y, b.y) >= r.y1 && std::max(a.y, b.y) <= r.y2;
        return (a.y == r.y1 || a.y == r.y2) && std::min(a.x, b.x) >= r.x1 && std::max(a.x, b.x) <= r.x2;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const Point v = child.vertices()[i];
        const bool is_corner = (v.x == r.x1 || v.x == r.x2) && (v.y == r.y1 || v.y == r.y2);
        if (!is_corner || inherited_concave(v)) continue;
        bool ok = false;
        for (const Knob& k : ks) {
            if (k.from != i && k.to != i) continue;
            if (on_side(child.vertices()[k.from], child.vertices()[k.to])) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

struct NodeResult {
    BigInt count = 0;
    std::vector<RecPack> packs;
};

class Recursion {
public:
    explicit Recursion(std::size_t depth_limit) : depth_limit_(depth_limit) {}

    NodeResult solve(const Polygon& p, std::size_t depth) {
        if (depth > depth_limit_) {
            throw Error(ErrorCode::RecursionDepthExceeded, "depth " + std::to_string(depth) + " exceeds " + std::to_string(depth_limit_));
        }
        const std::size_t k = knobs(p).size();
        stats.max_depth = std::max(stats.max_depth, depth);
        stats.min_knobs = std::min(stats.min_knobs, k);
        stats.max_knobs = std::max(stats.max_knobs, k);

        const auto setup = find_separating_setup(p);
        if (!setup) {
            ++stats.leaves;
            if (p.size() + 4 > 4 * k) ++stats.base_case_violations;
            return leaf(p);
        }
        const Square s = setup->second;
        std::vector<Polygon> children;
        try {
            const ComponentPartition parts = subtract_and_partition(p, s);
            for (const ComponentGroup& g : parts.groups) children.push_back(merge_with_square(g, s));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotSeparating && e.code() != ErrorCode::InternalInvariantViolation) throw;
            stats.warnings.push_back(std::string("separating cut failed, solving directly: ") + e.what());
            ++stats.fallbacks;
            ++stats.leaves;
            return leaf(p);
        }
        ++stats.internal_nodes;

        NodeResult out;
        out.packs.push_back(make_pack(s));
        const Rect sr = s.rect();
        for (const Polygon& child : children) {
            if (child.size() > p.size() || knobs(child).size() > k) ++stats.child_size_violations;
            if (!corners_on_knobs(p, child, s)) ++stats.corner_knob_violations;
            NodeResult sub = solve(child, depth + 1);
            out.count += sub.count;
            for (const RecPack& r : sub.packs) {
                for (const RecPack& kept : drop_squares_inside(r, sr)) out.packs.push_back(kept);
            }
        }
        out.count -= children.size() - 1;
        BigInt total = 0;
        for (const RecPack& r : out.packs) total += r.eta;
        if (total != out.count) {
            throw Error(ErrorCode::InternalInvariantViolation, "recombined cover has " + total.str() + " squares, expected " + out.count.str());
        }
        return out;
    }

    RecursionStats stats;

private:
    NodeResult leaf(const Polygon& p) {
        SolveResult r = solve_poly(p);
        return NodeResult{r.count, r.cover.packs()};
    }

    std::size_t depth_limit_;
};

}  // namespace

std::string SideSignature::name() const {
    for (const SideName& c : kClasses) {
        if (c.sides == sides) return c.name;
    }
    return "?";
}

bool SideSignature::admissible() const {
    for (const SideName& c : kClasses) {
        if (c.sides == sides) return (corners & c.corners) == c.corners;
    }
    return false;
}

std::size_t ComponentPartition::component_count() const {
    std::size_t c = 0;
    for (const ComponentGroup& g : groups) c += g.members.size();
    return c;
}

std::optional<std::pair<std::size_t, Square>> find_separating_setup(const Polygon& p) {
    const auto candidates = non_knob_convex_vertices(p);
    if (candidates.empty()) return std::nullopt;
    const std::size_t v = *std::min_element(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
        return p.vertices()[a] < p.vertices()[b];
    });
    return std::make_pair(v, mcs(p, v));
}

ComponentPartition subtract_and_partition(const Polygon& p, const Square& s) {
    if (!is_valid_square(p, s)) throw Error(ErrorCode::NotValidSquare, "square is not inside the polygon");
    const Rect sr = s.rect();
    const Perimeter per(s);
    const std::vector<Point> ring = refine(p, sr);
    const std::size_t m = ring.size();
    const auto outside = [&](std::size_t j) { return segment_outside(ring[j], ring[(j + 1) % m], sr); };

    std::size_t start = m;
    for (std::size_t j = 0; j < m; ++j) {
        if (per.on_square(ring[j]) && outside(j)) {
            start = j;
            break;
        }
    }
    if (start == m) throw Error(ErrorCode::NotSeparating, "the square leaves nothing outside it");

    std::vector<std::vector<Point>> arcs;
    std::vector<Point> current;
    for (std::size_t step = 0; step < m; ++step) {
        const std::size_t j = (start + step) % m;
        const Point& q = ring[j];
        if (!current.empty()) {
            current.push_back(q);
            if (per.on_square(q)) {
                arcs.push_back(std::move(current));
                current.clear();
            }
        }
        if (current.empty() && per.on_square(q) && outside(j)) current.push_back(q);
    }
    if (!current.empty()) {
        current.push_back(ring[start]);
        arcs.push_back(std::move(current));
    }
    if (arcs.size() < 2) throw Error(ErrorCode::NotSeparating, "the square leaves a single connected piece");

    ComponentPartition out{s, {}};
    std::vector<Component> comps;
    Wide area_sum = static_cast<Wide>(s.side) * s.side;
    for (auto& arc : arcs) {
        Component c;
        c.contact_from = per.param(arc.front());
        c.contact_to = per.param(arc.back());
        const Wide stretch = mod(c.contact_to - c.contact_from, per.length());
        if (stretch == 0) throw Error(ErrorCode::NotSeparating, "a piece touches the square in a single point");
        std::vector<Point> outline = arc;
        for (const Point& q : per.corners_cw(c.contact_to, stretch)) outline.push_back(q);
        c.region = ring_to_polygon(outline, "piece");
        c.signature = per.signature(c.contact_from, stretch);
        if (!c.signature.admissible()) {
            throw Error(ErrorCode::InternalInvariantViolation, "piece touches the square in an inadmissible pattern");
        }
        c.arc = std::move(arc);
        area_sum += c.region.area_wide();
        comps.push_back(std::move(c));
    }
    if (area_sum != p.area_wide()) throw Error(ErrorCode::InternalInvariantViolation, "pieces do not add up to the polygon");

    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) { return a.contact_from < b.contact_from; });
    std::map<unsigned, std::size_t> slot;
    for (Component& c : comps) {
        auto [it, fresh] = slot.emplace(c.signature.sides, out.groups.size());
        if (fresh) out.groups.push_back(ComponentGroup{c.signature, {}});
        out.groups[it->second].members.push_back(std::move(c));
    }
    return out;
}

Polygon merge_with_square(const ComponentGroup& group, const Square& s) {
    if (group.members.empty()) throw Error(ErrorCode::InternalInvariantViolation, "empty component group");
    const Perimeter per(s);
    std::vector<Point> ring;
    const std::size_t k = group.members.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Component& c = group.members[i];
        const Component& next = group.members[(i + 1) % k];
        ring.insert(ring.end(), c.arc.begin(), c.arc.end());
        Wide gap = mod(next.contact_from - c.contact_to, per.length());
        if (k == 1 && gap == 0) gap = per.length();
        for (const Point& q : per.corners_ccw(c.contact_to, gap)) ring.push_back(q);
    }
    return ring_to_polygon(ring, "merged piece");
}

RecursiveResult solve_recursive(const Polygon& p) {
    Recursion rec(p.size());
    NodeResult root = rec.solve(p, 0);
    RecursiveResult out;
    out.count = root.count;
    out.cover = Cover(std::move(root.packs));
    out.stats = std::move(rec.stats);
    return out;
}

}  // namespace orthocover
