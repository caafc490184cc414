#include "orthocover/solver_poly.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace orthocover {

namespace {

std::vector<Coord> sorted_unique(std::vector<Coord> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Point> cross(const std::vector<Coord>& xs, const std::vector<Coord>& ys) {
    std::vector<Point> out;
    out.reserve(xs.size() * ys.size());
    for (Coord x : xs) {
        for (Coord y : ys) out.push_back({x, y});
    }
    return out;
}

std::vector<Coord> padded(const std::vector<Coord>& v) {
    std::vector<Coord> out;
    out.reserve(3 * v.size());
    for (Coord c : v) {
        out.push_back(c - 1);
        out.push_back(c);
        out.push_back(c + 1);
    }
    return sorted_unique(std::move(out));
}

struct AnchorKey {
    Coord x;
    Coord y;
    Quadrant q;

    bool operator==(const AnchorKey&) const = default;
};

struct AnchorHash {
    std::size_t operator()(const AnchorKey& k) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(k.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(k.q) + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Pieces of `target` covered by `rects`, optionally plus one more rectangle.
std::vector<Rect> clipped(const Rect& target, const std::vector<Rect>& rects, const Rect* extra = nullptr) {
    std::vector<Rect> out;
    for (const Rect& r : rects) {
        if (interiors_overlap(r, target)) out.push_back(intersection(r, target));
    }
    if (extra && interiors_overlap(*extra, target)) out.push_back(intersection(*extra, target));
    return out;
}

bool fully_covered(const Rect& target, const std::vector<Rect>& pieces) {
    for (const Rect& r : pieces) {
        if (r == target) return true;
    }
    return union_area_wide(pieces) == target.area();
}

// Some block of `target` lies outside every rectangle of `rects` and `extra`.
bool has_residual(const Rect& target, const std::vector<Rect>& rects, const Rect* extra = nullptr) {
    return !fully_covered(target, clipped(target, rects, extra));
}

std::vector<Rect> rects_of(const Cover& ps) { return ps.rects(); }

// Shared state for one polygon: sorted vertex coordinates and a memo of
// maximal anchored squares, valid for the whole run since p never changes.
class Engine {
public:
    explicit Engine(const Polygon& p) : p_(p) {
        std::vector<Coord> xs, ys;
        for (const Point& v : p.vertices()) {
            xs.push_back(v.x);
            ys.push_back(v.y);
        }
        vx_ = sorted_unique(std::move(xs));
        vy_ = sorted_unique(std::move(ys));
    }

    const Polygon& polygon() const { return p_; }

    std::optional<Square> maximal_at(Point a, Quadrant q) {
        const AnchorKey key{a.x, a.y, q};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        auto s = largest_anchored_square(p_, a, q);
        if (s && !is_maximal(p_, *s)) s.reset();
        memo_.emplace(key, s);
        return s;
    }

    std::vector<Square> squares_at(const CandidateGrid& g) {
        std::vector<Square> out;
        const auto visit = [&](const std::vector<Point>& pts) {
            for (const Point& a : pts) {
                for (Quadrant q : kQuadrants) {
                    if (auto s = maximal_at(a, q)) out.push_back(*s);
                }
            }
        };
        visit(g.cx);
        visit(g.cy);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    CandidateGrid grid(const std::vector<Rect>& rects) const {
        std::vector<Coord> xs = vx_, ys = vy_;
        for (const Rect& r : rects) {
            xs.push_back(r.x1);
            xs.push_back(r.x2);
            ys.push_back(r.y1);
            ys.push_back(r.y2);
        }
        return CandidateGrid{cross(vx_, sorted_unique(std::move(ys))), cross(sorted_unique(std::move(xs)), vy_)};
    }

    CandidateGrid padded_grid(const std::vector<Rect>& rects, const Square* s) const {
        std::vector<Coord> xs = vx_, ys = vy_;
        for (const Rect& r : rects) {
            xs.push_back(r.x1);
            xs.push_back(r.x2);
            ys.push_back(r.y1);
            ys.push_back(r.y2);
        }
        if (s) {
            const Rect r = s->rect();
            xs.push_back(r.x1);
            xs.push_back(r.x2);
            ys.push_back(r.y1);
            ys.push_back(r.y2);
        }
        return CandidateGrid{cross(padded(sorted_unique(std::move(xs))), vy_), cross(vx_, padded(sorted_unique(std::move(ys))))};
    }

    // Padded-grid points contributed by s alone.
    CandidateGrid square_extras(const Square& s) const {
        const Rect r = s.rect();
        return CandidateGrid{cross(padded({r.x1, r.x2}), vy_), cross(vx_, padded({r.y1, r.y2}))};
    }

private:
    const Polygon& p_;
    std::vector<Coord> vx_, vy_;
    std::unordered_map<AnchorKey, std::optional<Square>, AnchorHash> memo_;
};

// Padded-grid squares that still reach uncovered area, for a frozen partial
// solution. Built once per main-loop iteration and shared by all candidates.
class Neighbourhood {
public:
    Neighbourhood(Engine& engine, const std::vector<Rect>& rects) : engine_(engine), rects_(rects) {
        base_ = engine_.squares_at(engine_.padded_grid(rects_, nullptr));
        for (const Square& d : base_) {
            if (has_residual(d.rect(), rects_)) live_.push_back(d);
        }
    }

    bool unambiguous(const Square& s) {
        const Polygon& p = engine_.polygon();
        if (!is_maximal(p, s)) return false;
        const Rect sr = s.rect();
        std::vector<Rect> pieces = clipped(sr, rects_);
        if (fully_covered(sr, pieces)) return false;

        std::vector<Square> extras = engine_.squares_at(engine_.square_extras(s));
        const auto consider = [&](const Square& d) {
            const Rect dr = d.rect();
            if (!interiors_overlap(dr, sr)) return;
            if (has_residual(dr, rects_, &sr)) pieces.push_back(intersection(dr, sr));
        };
        for (const Square& d : live_) consider(d);
        for (const Square& d : extras) {
            if (std::binary_search(base_.begin(), base_.end(), d)) continue;
            if (has_residual(d.rect(), rects_)) consider(d);
        }
        return !fully_covered(sr, pieces);
    }

private:
    Engine& engine_;
    const std::vector<Rect>& rects_;
    std::vector<Square> base_;
    std::vector<Square> live_;
};

// Frame in which the pack grows towards +u; v runs across the strip.
struct Frame {
    PackDirection dir;

    bool swapped() const { return dir == PackDirection::Up || dir == PackDirection::Down; }
    bool negated() const { return dir == PackDirection::Left || dir == PackDirection::Down; }

    Coord u(Point q) const {
        const Coord c = swapped() ? q.y : q.x;
        return negated() ? -c : c;
    }
    Coord v(Point q) const { return swapped() ? q.x : q.y; }

    // Rectangle [u0,u1] x [v0,v1] back in the original frame.
    Rect unmap(Coord u0, Coord u1, Coord v0, Coord v1) const {
        const Coord a = negated() ? -u1 : u0;
        const Coord b = negated() ? -u0 : u1;
        return swapped() ? Rect{v0, a, v1, b} : Rect{a, v0, b, v1};
    }
};

std::optional<RecPack> grow_pack(const Polygon& p, const Square& seed, const std::vector<Rect>& rects, PackDirection dir) {
    const Frame f{dir};
    const Rect sr = seed.rect();
    const Coord d = seed.side;
    const Point c1{sr.x1, sr.y1};
    const Point c2{sr.x2, sr.y2};
    const Coord u1 = std::max(f.u(c1), f.u(c2));
    const Coord v0 = std::min(f.v(c1), f.v(c2));
    const Coord v1 = std::max(f.v(c1), f.v(c2));

    // Edges running along u through the two far corners; each must overlap
    // the seed's side and continue past it.
    bool top = false, bottom = false;
    const auto& vs = p.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[i + 1 == n ? 0 : i + 1];
        if (f.v(a) != f.v(b)) continue;
        const Coord lo = std::min(f.u(a), f.u(b));
        const Coord hi = std::max(f.u(a), f.u(b));
        if (!(lo < u1 && u1 < hi)) continue;
        if (f.v(a) == v1) top = true;
        if (f.v(a) == v0) bottom = true;
    }
    if (!top || !bottom) return std::nullopt;

    Wide limit = std::numeric_limits<Wide>::max();
    for (const Point& q : vs) {
        const Coord qv = f.v(q);
        if (qv >= v0 && qv <= v1 && f.u(q) > u1) limit = std::min<Wide>(limit, f.u(q));
    }
    // Any pack reaching into the open band beyond u1 blocks from its near edge on.
    for (const Rect& r : rects) {
        const Coord ru0 = std::min(f.u({r.x1, r.y1}), f.u({r.x2, r.y2}));
        const Coord ru1 = std::max(f.u({r.x1, r.y1}), f.u({r.x2, r.y2}));
        const Coord rv0 = std::min(f.v({r.x1, r.y1}), f.v({r.x2, r.y2}));
        const Coord rv1 = std::max(f.v({r.x1, r.y1}), f.v({r.x2, r.y2}));
        if (rv0 < v1 && rv1 > v0 && ru1 > u1) limit = std::min<Wide>(limit, std::max(ru0, u1));
    }
    const Wide gap = limit - u1;
    if (gap <= d) return std::nullopt;
    const auto eta = static_cast<Coord>(gap / d);
    const Rect out = f.unmap(u1, u1 + eta * d, v0, v1);
    const Orientation o = f.swapped() ? Orientation::Vertical : Orientation::Horizontal;
    const RecPack pack = make_pack({out.x1, out.y1}, d, eta, o);

    if (!contains_rect(p, out)) {
        throw Error(ErrorCode::InternalInvariantViolation, std::string("rec-pack towards ") + to_string(dir) + " leaves the polygon");
    }
    for (const Rect& r : rects) {
        if (interiors_overlap(r, out)) {
            throw Error(ErrorCode::InternalInvariantViolation,
                        std::string("rec-pack towards ") + to_string(dir) + " overlaps the partial solution");
        }
    }
    return pack;
}

}  // namespace

const char* to_string(PackDirection d) {
    switch (d) {
        case PackDirection::Left: return "left";
        case PackDirection::Right: return "right";
        case PackDirection::Up: return "up";
        case PackDirection::Down: return "down";
    }
    return "?";
}

CandidateGrid candidate_points(const Polygon& p, const Cover& ps) {
    const Engine engine(p);
    return engine.grid(rects_of(ps));
}

CandidateGrid padded_points(const Polygon& p, const Cover& ps, const Square& s) {
    const Engine engine(p);
    return engine.padded_grid(rects_of(ps), &s);
}

std::vector<Square> candidate_squares(const Polygon& p, const Cover& ps) {
    Engine engine(p);
    return engine.squares_at(engine.grid(rects_of(ps)));
}

bool check_unambiguous(const Polygon& p, const Cover& ps, const Square& s) {
    if (!is_valid_square(p, s)) {
        throw Error(ErrorCode::NotValidSquare, "square (" + std::to_string(s.corner.x) + "," + std::to_string(s.corner.y) +
                                                   ") side " + std::to_string(s.side) + " is not inside the polygon");
    }
    Engine engine(p);
    const std::vector<Rect> rects = rects_of(ps);
    Neighbourhood nb(engine, rects);
    return nb.unambiguous(s);
}

std::optional<RecPack> generate_recpack(const Polygon& p, const Square& seed, const Cover& ps, PackDirection dir) {
    return grow_pack(p, seed, rects_of(ps), dir);
}

SolveResult solve_poly(const Polygon& p, const PolyOptions& options) {
    Engine engine(p);
    SolveResult result;
    std::vector<Rect> rects;
    Wide uncovered = p.area_wide();

    while (uncovered > 0) {
        ++result.poly.iterations;
        const std::vector<Square> candidates = engine.squares_at(engine.grid(rects));
        std::optional<Neighbourhood> nb;
        std::optional<Square> chosen;
        for (const Square& s : candidates) {
            const Rect sr = s.rect();
            if (fully_covered(sr, clipped(sr, rects))) continue;
            if (!nb) nb.emplace(engine, rects);
            ++result.poly.checks;
            if (nb->unambiguous(s)) {
                chosen = s;
                break;
            }
        }
        if (!chosen) {
            throw Error(ErrorCode::InternalInvariantViolation,
                        "no unambiguous square among " + std::to_string(candidates.size()) + " candidates");
        }
        nb.reset();

        PolyStep step{result.poly.iterations, *chosen, {}};
        const RecPack seed_pack = make_pack(*chosen);
        result.cover.add(seed_pack);
        rects.push_back(seed_pack.rect());
        step.packs.push_back(seed_pack);
        for (PackDirection dir : {PackDirection::Left, PackDirection::Right, PackDirection::Up, PackDirection::Down}) {
            if (auto r = grow_pack(p, *chosen, rects, dir)) {
                result.cover.add(*r);
                rects.push_back(r->rect());
                step.packs.push_back(*r);
            }
        }

        const Wide left = p.area_wide() - static_cast<Wide>(union_area_wide(rects));
        if (left >= uncovered) throw Error(ErrorCode::InternalInvariantViolation, "uncovered area did not shrink");
        uncovered = left;
        if (options.on_step) options.on_step(step);
    }
    result.count = result.cover.total();
    return result;
}

}  // namespace orthocover
