#include "orthocover/cover.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace orthocover {

namespace {

constexpr Wide kCoordMax = std::numeric_limits<Coord>::max();

// Coverage-counting segment tree over compressed y.
class CoverageTree {
public:
    explicit CoverageTree(std::vector<Coord> ys) : ys_(std::move(ys)) {
        const std::size_t m = ys_.size() > 1 ? ys_.size() - 1 : 1;
        count_.assign(4 * m, 0);
        len_.assign(4 * m, 0);
    }

    void update(Coord y1, Coord y2, int delta) {
        if (ys_.size() < 2) return;
        const auto lo = static_cast<std::size_t>(std::lower_bound(ys_.begin(), ys_.end(), y1) - ys_.begin());
        const auto hi = static_cast<std::size_t>(std::lower_bound(ys_.begin(), ys_.end(), y2) - ys_.begin());
        if (lo < hi) update(1, 0, ys_.size() - 1, lo, hi, delta);
    }

    UWide covered() const { return ys_.size() < 2 ? 0 : len_[1]; }

private:
    void update(std::size_t node, std::size_t l, std::size_t r, std::size_t lo, std::size_t hi, int delta) {
        if (hi <= l || r <= lo) return;
        if (lo <= l && r <= hi) {
            count_[node] += delta;
        } else {
            const std::size_t mid = (l + r) / 2;
            update(2 * node, l, mid, lo, hi, delta);
            update(2 * node + 1, mid, r, lo, hi, delta);
        }
        if (count_[node] > 0) {
            len_[node] = static_cast<UWide>(static_cast<Wide>(ys_[r]) - ys_[l]);
        } else if (r - l == 1) {
            len_[node] = 0;
        } else {
            len_[node] = len_[2 * node] + len_[2 * node + 1];
        }
    }

    std::vector<Coord> ys_;
    std::vector<int> count_;
    std::vector<UWide> len_;
};

struct Event {
    Coord x;
    int delta;
    Coord y1, y2;
};

template <typename Acc, typename Mul>
Acc sweep(std::span<const Rect> rects, Mul mul) {
    std::vector<Coord> ys;
    std::vector<Event> events;
    ys.reserve(2 * rects.size());
    events.reserve(2 * rects.size());
    for (const Rect& r : rects) {
        if (r.x1 >= r.x2 || r.y1 >= r.y2) continue;
        ys.push_back(r.y1);
        ys.push_back(r.y2);
        events.push_back({r.x1, 1, r.y1, r.y2});
        events.push_back({r.x2, -1, r.y1, r.y2});
    }
    Acc total = 0;
    if (events.empty()) return total;
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    // Insertions first at equal x.
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.delta > b.delta;
    });
    CoverageTree tree(std::move(ys));
    Coord prev_x = events.front().x;
    for (const Event& e : events) {
        if (e.x != prev_x) {
            const UWide dx = static_cast<UWide>(static_cast<Wide>(e.x) - prev_x);
            total += mul(tree.covered(), dx);
            prev_x = e.x;
        }
        tree.update(e.y1, e.y2, e.delta);
    }
    return total;
}

}  // namespace

Rect RecPack::rect() const {
    const Coord long_side = t * eta;
    if (orientation == Orientation::Horizontal) return Rect{anchor.x, anchor.y, anchor.x + long_side, anchor.y + t};
    return Rect{anchor.x, anchor.y, anchor.x + t, anchor.y + long_side};
}

Square RecPack::square(Coord i) const {
    if (orientation == Orientation::Horizontal) return Square{{anchor.x + i * t, anchor.y}, t};
    return Square{{anchor.x, anchor.y + i * t}, t};
}

RecPack make_pack(Point anchor, Coord t, Coord eta, Orientation o) {
    if (t < 1 || eta < 1) {
        throw Error(ErrorCode::InternalInvariantViolation, "pack width and strength must be positive");
    }
    const Wide long_side = static_cast<Wide>(t) * eta;
    const Wide w = o == Orientation::Horizontal ? long_side : t;
    const Wide h = o == Orientation::Horizontal ? t : long_side;
    if (long_side > kCoordMax || anchor.x + w > kCoordMax || anchor.y + h > kCoordMax) {
        throw Error(ErrorCode::CoordinateOverflow, "pack rectangle leaves the 64-bit range");
    }
    return RecPack{anchor, t, eta, eta == 1 ? Orientation::Horizontal : o};
}

std::vector<Square> Extraction::materialize(std::size_t cap) const {
    if (static_cast<std::uint64_t>(pack_.eta) > cap) {
        throw Error(ErrorCode::MaterializationCapExceeded,
                    "pack holds " + std::to_string(pack_.eta) + " squares, cap is " + std::to_string(cap));
    }
    std::vector<Square> out;
    out.reserve(static_cast<std::size_t>(pack_.eta));
    for (Coord i = 0; i < pack_.eta; ++i) out.push_back(pack_.square(i));
    return out;
}

Cover::Cover(std::vector<RecPack> packs) {
    packs_.reserve(packs.size());
    for (const RecPack& r : packs) add(r);
}

void Cover::add(const RecPack& r) {
    packs_.push_back(r);
    total_ += r.eta;
}

std::vector<Rect> Cover::rects() const {
    std::vector<Rect> out;
    out.reserve(packs_.size());
    for (const RecPack& r : packs_) out.push_back(r.rect());
    return out;
}

BigInt union_area(std::span<const Rect> rects) {
    return sweep<BigInt>(rects, [](UWide len, UWide dx) { return to_bigint(len) * to_bigint(dx); });
}

UWide union_area_wide(std::span<const Rect> rects) {
    return sweep<UWide>(rects, [](UWide len, UWide dx) { return len * dx; });
}

std::optional<std::size_t> first_pack_outside(const Polygon& p, const Cover& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!contains_rect(p, c.packs()[i].rect())) return i;
    }
    return std::nullopt;
}

bool covers_polygon(const Polygon& p, const Cover& c) {
    if (const auto bad = first_pack_outside(p, c)) {
        throw Error(ErrorCode::PackOutsidePolygon, "pack " + std::to_string(*bad) + " is not inside the polygon");
    }
    const auto rects = c.rects();
    return static_cast<Wide>(union_area_wide(rects)) == p.area_wide();
}

namespace {

// Index of square `c` within a progression starting at `start` with step t
// and `count` terms, if present.
bool in_progression(Coord start, Coord t, Coord count, Coord c) {
    const Wide d = static_cast<Wide>(c) - start;
    if (d < 0 || d % t != 0) return false;
    return d / t < count;
}

}  // namespace

bool packs_collide(const RecPack& a, const RecPack& b) {
    if (a.t != b.t) return false;
    const Coord t = a.t;
    const bool ah = a.orientation == Orientation::Horizontal;
    const bool bh = b.orientation == Orientation::Horizontal;
    if (ah && bh) {
        if (a.anchor.y != b.anchor.y) return false;
        if ((static_cast<Wide>(b.anchor.x) - a.anchor.x) % t != 0) return false;
        const Wide a_last = static_cast<Wide>(a.anchor.x) + static_cast<Wide>(a.eta - 1) * t;
        const Wide b_last = static_cast<Wide>(b.anchor.x) + static_cast<Wide>(b.eta - 1) * t;
        return std::max<Wide>(a.anchor.x, b.anchor.x) <= std::min(a_last, b_last);
    }
    if (!ah && !bh) {
        if (a.anchor.x != b.anchor.x) return false;
        if ((static_cast<Wide>(b.anchor.y) - a.anchor.y) % t != 0) return false;
        const Wide a_last = static_cast<Wide>(a.anchor.y) + static_cast<Wide>(a.eta - 1) * t;
        const Wide b_last = static_cast<Wide>(b.anchor.y) + static_cast<Wide>(b.eta - 1) * t;
        return std::max<Wide>(a.anchor.y, b.anchor.y) <= std::min(a_last, b_last);
    }
    const RecPack& h = ah ? a : b;
    const RecPack& v = ah ? b : a;
    // The only square both could produce has corner (v.x, h.y).
    return in_progression(h.anchor.x, t, h.eta, v.anchor.x) && in_progression(v.anchor.y, t, v.eta, h.anchor.y);
}

std::optional<std::pair<std::size_t, std::size_t>> first_collision(std::span<const RecPack> packs) {
    std::vector<std::size_t> order(packs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<Rect> rects;
    rects.reserve(packs.size());
    for (const RecPack& r : packs) rects.push_back(r.rect());
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rects[a].x1 < rects[b].x1; });
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi + 1; oj < order.size() && rects[order[oj]].x1 < rects[i].x2; ++oj) {
            const std::size_t j = order[oj];
            if (!interiors_overlap(rects[i], rects[j]) || !packs_collide(packs[i], packs[j])) continue;
            const std::pair<std::size_t, std::size_t> pair{std::min(i, j), std::max(i, j)};
            if (!best || pair < *best) best = pair;
        }
    }
    return best;
}

}  // namespace orthocover
