#include "orthocover/testgen.hpp"

#include <map>
#include <vector>

namespace orthocover {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

const char* to_string(GenKind k) {
    switch (k) {
        case GenKind::RectUnion: return "rect-union";
        case GenKind::Staircase: return "staircase";
        case GenKind::OrthoConvex: return "ortho-convex";
        case GenKind::Comb: return "comb";
        case GenKind::Rectangle: return "rectangle";
    }
    return "?";
}

std::optional<GenKind> parse_gen_kind(std::string_view s) {
    for (GenKind k : {GenKind::RectUnion, GenKind::Staircase, GenKind::OrthoConvex, GenKind::Comb, GenKind::Rectangle}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

namespace {

class CellShape {
public:
    explicit CellShape(int g) : g_(g), cells_(static_cast<std::size_t>(g * g), false) {}

    int size() const { return g_; }
    bool at(int x, int y) const {
        if (x < 0 || y < 0 || x >= g_ || y >= g_) return false;
        return cells_[static_cast<std::size_t>(y * g_ + x)];
    }
    void set(int x, int y) { cells_[static_cast<std::size_t>(y * g_ + x)] = true; }

    bool empty() const {
        for (bool c : cells_) {
            if (c) return false;
        }
        return true;
    }

    // Some cell of the block is a member or edge-adjacent to one.
    bool touches(int x1, int y1, int x2, int y2) const {
        for (int y = y1; y < y2; ++y) {
            for (int x = x1; x < x2; ++x) {
                if (at(x, y) || at(x - 1, y) || at(x + 1, y) || at(x, y - 1) || at(x, y + 1)) return true;
            }
        }
        return false;
    }

    // One 4-connected region, no holes, no two cells meeting only at a corner.
    bool well_formed() const {
        for (int y = -1; y < g_; ++y) {
            for (int x = -1; x < g_; ++x) {
                const bool a = at(x, y), b = at(x + 1, y), c = at(x, y + 1), d = at(x + 1, y + 1);
                if ((a && d && !b && !c) || (b && c && !a && !d)) return false;
            }
        }
        return fill_count(true) == count(true) && fill_count(false) == count(false);
    }

private:
    std::size_t count(bool member) const {
        std::size_t c = 0;
        for (int y = -1; y <= g_; ++y) {
            for (int x = -1; x <= g_; ++x) c += at(x, y) == member ? 1 : 0;
        }
        return c;
    }

    // Cells reached by 4-connected flood fill over cells equal to `member`,
    // on the grid padded by one ring of exterior cells.
    std::size_t fill_count(bool member) const {
        const int w = g_ + 2;
        std::vector<bool> seen(static_cast<std::size_t>(w * w), false);
        std::vector<std::pair<int, int>> stack;
        for (int y = -1; y <= g_ && stack.empty(); ++y) {
            for (int x = -1; x <= g_ && stack.empty(); ++x) {
                if (at(x, y) == member) stack.push_back({x, y});
            }
        }
        if (stack.empty()) return 0;
        seen[static_cast<std::size_t>((stack[0].second + 1) * w + stack[0].first + 1)] = true;
        std::size_t reached = 0;
        while (!stack.empty()) {
            const auto [x, y] = stack.back();
            stack.pop_back();
            ++reached;
            const int dx[] = {1, -1, 0, 0};
            const int dy[] = {0, 0, 1, -1};
            for (int k = 0; k < 4; ++k) {
                const int nx = x + dx[k], ny = y + dy[k];
                if (nx < -1 || ny < -1 || nx > g_ || ny > g_) continue;
                const auto idx = static_cast<std::size_t>((ny + 1) * w + nx + 1);
                if (seen[idx] || at(nx, ny) != member) continue;
                seen[idx] = true;
                stack.push_back({nx, ny});
            }
        }
        return reached;
    }

    int g_;
    std::vector<bool> cells_;
};

// Boundary of a well-formed cell shape, counter-clockwise, in real
// coordinates given by the cumulative column and row offsets.
std::vector<Point> trace(const CellShape& s, const std::vector<Coord>& xs, const std::vector<Coord>& ys) {
    std::map<std::pair<int, int>, std::pair<int, int>> next;
    const int g = s.size();
    for (int y = 0; y < g; ++y) {
        for (int x = 0; x < g; ++x) {
            if (!s.at(x, y)) continue;
            // Interior on the left of each directed edge.
            if (!s.at(x, y - 1)) next[{x, y}] = {x + 1, y};
            if (!s.at(x + 1, y)) next[{x + 1, y}] = {x + 1, y + 1};
            if (!s.at(x, y + 1)) next[{x + 1, y + 1}] = {x, y + 1};
            if (!s.at(x - 1, y)) next[{x, y + 1}] = {x, y};
        }
    }
    std::vector<std::pair<int, int>> loop;
    const auto start = next.begin()->first;
    auto cur = start;
    do {
        loop.push_back(cur);
        cur = next.at(cur);
    } while (cur != start && loop.size() <= next.size());
    if (loop.size() != next.size()) return {};
    std::vector<Point> pts;
    for (const auto& [x, y] : loop) pts.push_back({xs[static_cast<std::size_t>(x)], ys[static_cast<std::size_t>(y)]});
    return pts;
}

std::vector<Coord> offsets(SplitMix64& rng, int g, Coord max_cell) {
    std::vector<Coord> out{0};
    for (int i = 0; i < g; ++i) out.push_back(out.back() + rng.range(1, max_cell));
    return out;
}

Polygon rect_union(const GenSpec& spec) {
    if (spec.grid < 1 || spec.pieces < 1 || spec.max_cell < 1) {
        throw Error(ErrorCode::GenerationFailed, "rect-union needs positive grid, pieces and max_cell");
    }
    SplitMix64 rng(spec.seed);
    constexpr int kBudget = 2000;
    const int g = spec.grid;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        const std::vector<Coord> xs = offsets(rng, g, spec.max_cell);
        const std::vector<Coord> ys = offsets(rng, g, spec.max_cell);
        CellShape shape(g);
        for (int piece = 0; piece < spec.pieces; ++piece) {
            for (int tries = 0; tries < 50; ++tries) {
                const int x1 = static_cast<int>(rng.range(0, g - 1));
                const int y1 = static_cast<int>(rng.range(0, g - 1));
                const int x2 = static_cast<int>(rng.range(x1 + 1, g));
                const int y2 = static_cast<int>(rng.range(y1 + 1, g));
                if (!shape.empty() && !shape.touches(x1, y1, x2, y2)) continue;
                for (int y = y1; y < y2; ++y) {
                    for (int x = x1; x < x2; ++x) shape.set(x, y);
                }
                break;
            }
        }
        if (!shape.well_formed()) continue;
        const std::vector<Point> ring = trace(shape, xs, ys);
        if (ring.empty()) continue;
        Polygon p = validate_fixed(ring);
        if (spec.max_vertices > 0 && p.size() > static_cast<std::size_t>(spec.max_vertices)) continue;
        if (spec.max_area > 0 && p.area_wide() > spec.max_area) continue;
        return p;
    }
    throw Error(ErrorCode::GenerationFailed, "rect-union retry budget exhausted");
}

Polygon staircase(const GenSpec& spec) {
    if (spec.steps < 1 || spec.unit < 0) throw Error(ErrorCode::GenerationFailed, "staircase needs steps >= 1 and unit >= 0");
    SplitMix64 rng(spec.seed);
    std::vector<Point> pts{{0, 0}};
    Coord x = 0, y = 0;
    for (int i = 0; i < spec.steps; ++i) {
        x += spec.unit > 0 ? spec.unit : rng.range(1, spec.max_cell);
        pts.push_back({x, y});
        y += spec.unit > 0 ? spec.unit : rng.range(1, spec.max_cell);
        pts.push_back({x, y});
    }
    pts.push_back({0, y});
    return validate(pts);
}

// Strictly unimodal profile: rises to a single peak, then falls.
std::vector<Coord> peaked(SplitMix64& rng, int count, Coord max_step) {
    const int peak = static_cast<int>(rng.range(0, count - 1));
    std::vector<Coord> v(static_cast<std::size_t>(count), 0);
    for (int i = peak - 1; i >= 0; --i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i + 1)] - rng.range(1, max_step);
    for (int i = peak + 1; i < count; ++i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)] - rng.range(1, max_step);
    return v;
}

Polygon ortho_convex(const GenSpec& spec) {
    if (spec.columns < 1 || spec.max_cell < 1) throw Error(ErrorCode::GenerationFailed, "ortho-convex needs columns >= 1");
    SplitMix64 rng(spec.seed);
    const int c = spec.columns;
    std::vector<Coord> xs{0};
    for (int i = 0; i < c; ++i) xs.push_back(xs.back() + rng.range(1, spec.max_cell));
    std::vector<Coord> hi = peaked(rng, c, spec.max_cell);
    std::vector<Coord> lo = peaked(rng, c, spec.max_cell);
    // Shift so that hi >= 1 and lo <= 0 everywhere.
    Coord hi_min = 0;
    Coord lo_min = 0;
    for (int i = 0; i < c; ++i) {
        hi_min = std::min(hi_min, hi[static_cast<std::size_t>(i)]);
        lo_min = std::min(lo_min, lo[static_cast<std::size_t>(i)]);
    }
    for (auto& h : hi) h += 1 - hi_min;
    for (auto& l : lo) l = -(l - lo_min);  // valley at the old peak, maximum 0
    std::vector<Point> pts;
    const auto col = [](int i) { return static_cast<std::size_t>(i); };
    pts.push_back({xs[0], lo[0]});
    for (int i = 1; i < c; ++i) {
        pts.push_back({xs[col(i)], lo[col(i - 1)]});
        pts.push_back({xs[col(i)], lo[col(i)]});
    }
    pts.push_back({xs[col(c)], lo[col(c - 1)]});
    pts.push_back({xs[col(c)], hi[col(c - 1)]});
    for (int i = c - 1; i >= 1; --i) {
        pts.push_back({xs[col(i)], hi[col(i)]});
        pts.push_back({xs[col(i)], hi[col(i - 1)]});
    }
    pts.push_back({xs[0], hi[0]});
    return validate(pts);
}

Polygon comb(const GenSpec& spec) {
    if (spec.teeth < 1 || spec.max_cell < 1) throw Error(ErrorCode::GenerationFailed, "comb needs teeth >= 1");
    SplitMix64 rng(spec.seed);
    const Coord spine = rng.range(1, spec.max_cell);
    // Tooth columns [a_i, b_i] separated by gaps, with a margin at both ends.
    std::vector<std::pair<Coord, Coord>> cols;
    Coord x = rng.range(1, spec.max_cell);
    for (int i = 0; i < spec.teeth; ++i) {
        const Coord w = rng.range(1, spec.max_cell);
        cols.push_back({x, x + w});
        x += w + rng.range(1, spec.max_cell);
    }
    const Coord width = x;
    std::vector<Coord> down, up;
    for (int i = 0; i < spec.teeth; ++i) down.push_back(rng.range(1, spec.max_cell));
    for (int i = 0; i < spec.teeth; ++i) up.push_back(rng.range(1, spec.max_cell));

    std::vector<Point> pts{{0, 0}};
    for (int i = 0; i < spec.teeth; ++i) {
        const auto [a, b] = cols[static_cast<std::size_t>(i)];
        const Coord d = down[static_cast<std::size_t>(i)];
        pts.insert(pts.end(), {{a, 0}, {a, -d}, {b, -d}, {b, 0}});
    }
    pts.push_back({width, 0});
    pts.push_back({width, spine});
    for (int i = spec.teeth - 1; i >= 0; --i) {
        const auto [a, b] = cols[static_cast<std::size_t>(i)];
        const Coord u = spine + up[static_cast<std::size_t>(i)];
        pts.insert(pts.end(), {{b, spine}, {b, u}, {a, u}, {a, spine}});
    }
    pts.push_back({0, spine});
    return validate(pts);
}

}  // namespace

Polygon generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::RectUnion: return rect_union(spec);
        case GenKind::Staircase: return staircase(spec);
        case GenKind::OrthoConvex: return ortho_convex(spec);
        case GenKind::Comb: return comb(spec);
        case GenKind::Rectangle: {
            if (spec.t < 1) throw Error(ErrorCode::GenerationFailed, "rectangle needs t >= 1");
            const std::vector<Point> pts{{0, 0}, {spec.t, 0}, {spec.t, 1}, {0, 1}};
            return validate(pts);
        }
    }
    throw Error(ErrorCode::GenerationFailed, "unknown generator kind");
}

}  // namespace orthocover
