#include "orthocover/lattice_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

namespace orthocover {

std::size_t oracle_cap_from_env() {
    const char* raw = std::getenv("ORTHOCOVER_ORACLE_CAP");
    if (!raw || !*raw) return kDefaultOracleCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) return kDefaultOracleCap;
    return static_cast<std::size_t>(v);
}

BlockGrid::BlockGrid(Point origin, Coord width, Coord height)
    : origin_(origin), width_(width), height_(height), cells_(static_cast<std::size_t>(width * height), false) {}

std::size_t BlockGrid::index(Coord x, Coord y) const {
    return static_cast<std::size_t>((y - origin_.y) * width_ + (x - origin_.x));
}

bool BlockGrid::member(Point b) const {
    if (b.x < origin_.x || b.y < origin_.y || b.x >= origin_.x + width_ || b.y >= origin_.y + height_) return false;
    return cells_[index(b.x, b.y)];
}

void BlockGrid::set(Point b) {
    const std::size_t i = index(b.x, b.y);
    if (!cells_[i]) {
        cells_[i] = true;
        ++count_;
        prefix_.clear();
    }
}

std::vector<Point> BlockGrid::blocks() const {
    std::vector<Point> out;
    out.reserve(count_);
    for (Coord y = 0; y < height_; ++y) {
        for (Coord x = 0; x < width_; ++x) {
            if (cells_[static_cast<std::size_t>(y * width_ + x)]) out.push_back({origin_.x + x, origin_.y + y});
        }
    }
    return out;
}

void BlockGrid::build_prefix() const {
    const auto w = static_cast<std::size_t>(width_) + 1;
    const auto h = static_cast<std::size_t>(height_) + 1;
    prefix_.assign(w * h, 0);
    for (std::size_t y = 1; y < h; ++y) {
        for (std::size_t x = 1; x < w; ++x) {
            const std::uint32_t cell = cells_[(y - 1) * static_cast<std::size_t>(width_) + (x - 1)] ? 1 : 0;
            prefix_[y * w + x] = cell + prefix_[(y - 1) * w + x] + prefix_[y * w + x - 1] - prefix_[(y - 1) * w + x - 1];
        }
    }
}

std::size_t BlockGrid::members_in(Coord x1, Coord y1, Coord x2, Coord y2) const {
    x1 = std::max(x1 - origin_.x, Coord{0});
    y1 = std::max(y1 - origin_.y, Coord{0});
    x2 = std::min(x2 - origin_.x, width_);
    y2 = std::min(y2 - origin_.y, height_);
    if (x1 >= x2 || y1 >= y2) return 0;
    if (prefix_.empty()) build_prefix();
    const auto w = static_cast<std::size_t>(width_) + 1;
    const auto at = [&](Coord x, Coord y) { return prefix_[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)]; };
    return at(x2, y2) - at(x1, y2) - at(x2, y1) + at(x1, y1);
}

BlockGrid enumerate_blocks(const Polygon& p, std::size_t cap) {
    const Wide a = p.area_wide();
    if (a > static_cast<Wide>(cap)) {
        throw Error(ErrorCode::LatticeCapExceeded, "polygon area " + to_decimal(static_cast<UWide>(a)) + " exceeds cap " + std::to_string(cap));
    }
    const Rect box = p.bounding_box();
    const Wide cells = static_cast<Wide>(box.width()) * box.height();
    if (cells > static_cast<Wide>(cap) * 64) {
        throw Error(ErrorCode::LatticeCapExceeded, "bounding box has " + to_decimal(static_cast<UWide>(cells)) + " cells");
    }
    BlockGrid grid({box.x1, box.y1}, box.width(), box.height());
    const auto& vs = p.vertices();
    const std::size_t n = vs.size();
    std::vector<Coord> xs;
    for (Coord y = box.y1; y < box.y2; ++y) {
        // Vertical edges crossing the row's centre line, paired by parity.
        xs.clear();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& u = vs[i];
            const Point& v = vs[i + 1 == n ? 0 : i + 1];
            if (u.x != v.x) continue;
            if (std::min(u.y, v.y) <= y && y < std::max(u.y, v.y)) xs.push_back(u.x);
        }
        std::sort(xs.begin(), xs.end());
        for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
            for (Coord x = xs[k]; x < xs[k + 1]; ++x) grid.set({x, y});
        }
    }
    return grid;
}

bool blocks_adjacent(const BlockGrid& grid, Point a, Point b) {
    if (!grid.member(a) || !grid.member(b)) return false;
    const Coord s = std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)) + 1;
    const auto full = static_cast<std::size_t>(s * s);
    for (Coord x = std::max(a.x, b.x) - s + 1; x <= std::min(a.x, b.x); ++x) {
        for (Coord y = std::max(a.y, b.y) - s + 1; y <= std::min(a.y, b.y); ++y) {
            if (grid.members_in(x, y, x + s, y + s) == full) return true;
        }
    }
    return false;
}

std::vector<Square> lattice_maximal_squares(const BlockGrid& grid) {
    const Coord w = grid.width();
    const Coord h = grid.height();
    const Point o = grid.origin();
    // side[y][x]: largest square with bottom-left block (x, y).
    std::vector<Coord> side(static_cast<std::size_t>((w + 1) * (h + 1)), 0);
    const auto at = [&](Coord x, Coord y) -> Coord& { return side[static_cast<std::size_t>(y * (w + 1) + x)]; };
    for (Coord y = h - 1; y >= 0; --y) {
        for (Coord x = w - 1; x >= 0; --x) {
            if (grid.member({o.x + x, o.y + y})) at(x, y) = 1 + std::min({at(x + 1, y), at(x, y + 1), at(x + 1, y + 1)});
        }
    }
    std::vector<Square> out;
    for (Coord x = 0; x < w; ++x) {
        for (Coord y = 0; y < h; ++y) {
            const Coord s = at(x, y);
            if (s == 0) continue;
            const bool left = x > 0 && at(x - 1, y) > s;
            const bool down = y > 0 && at(x, y - 1) > s;
            const bool diag = x > 0 && y > 0 && at(x - 1, y - 1) > s;
            if (!left && !down && !diag) out.push_back(Square{{o.x + x, o.y + y}, s});
        }
    }
    return out;
}

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool Bitset::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Bitset& Bitset::operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool Bitset::is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
}

std::size_t AssociatedGraph::edge_count() const {
    std::size_t twice = 0;
    for (const Bitset& row : adjacency) twice += row.count() - 1;
    return twice / 2;
}

AssociatedGraph build_graph(const Polygon& p, std::size_t cap) {
    const BlockGrid grid = enumerate_blocks(p, cap);
    AssociatedGraph g;
    g.blocks = grid.blocks();
    const std::size_t n = g.blocks.size();
    g.adjacency.assign(n, Bitset(n));

    const Point o = grid.origin();
    std::vector<std::size_t> id(static_cast<std::size_t>(grid.width() * grid.height()), n);
    for (std::size_t i = 0; i < n; ++i) {
        id[static_cast<std::size_t>((g.blocks[i].y - o.y) * grid.width() + (g.blocks[i].x - o.x))] = i;
    }
    // Two blocks are adjacent exactly when some maximal square covers both.
    for (const Square& s : lattice_maximal_squares(grid)) {
        Bitset mask(n);
        std::vector<std::size_t> members;
        for (Coord y = s.corner.y; y < s.corner.y + s.side; ++y) {
            for (Coord x = s.corner.x; x < s.corner.x + s.side; ++x) {
                const std::size_t i = id[static_cast<std::size_t>((y - o.y) * grid.width() + (x - o.x))];
                mask.set(i);
                members.push_back(i);
            }
        }
        for (std::size_t i : members) g.adjacency[i] |= mask;
    }
    return g;
}

bool is_chordal(const AssociatedGraph& g) {
    const std::size_t n = g.size();
    if (n == 0) return true;
    // Maximum cardinality search with buckets; the reverse visit order is a
    // perfect elimination ordering iff the graph is chordal.
    std::vector<std::size_t> weight(n, 0), order, pos(n, n);
    std::vector<std::vector<std::size_t>> buckets(n + 1);
    for (std::size_t v = 0; v < n; ++v) buckets[0].push_back(v);
    std::size_t top = 0;
    std::vector<bool> done(n, false);
    order.reserve(n);
    while (order.size() < n) {
        std::size_t v = n;
        while (v == n) {
            while (buckets[top].empty()) --top;
            const std::size_t cand = buckets[top].back();
            buckets[top].pop_back();
            if (!done[cand] && weight[cand] == top) v = cand;
        }
        done[v] = true;
        pos[v] = n - 1 - order.size();
        order.push_back(v);
        g.adjacency[v].for_each([&](std::size_t u) {
            if (done[u]) return;
            ++weight[u];
            buckets[weight[u]].push_back(u);
            top = std::max(top, weight[u]);
        });
    }
    // Check: for each v, its later neighbours minus the earliest of them must
    // be adjacent to that earliest one.
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t parent = n;
        std::vector<std::size_t> later;
        g.adjacency[v].for_each([&](std::size_t u) {
            if (u == v || pos[u] < pos[v]) return;
            later.push_back(u);
            if (parent == n || pos[u] < pos[parent]) parent = u;
        });
        for (std::size_t u : later) {
            if (u != parent && !g.adjacency[parent].test(u)) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::size_t> node_order(const AssociatedGraph& g, TieBreak order, std::uint64_t seed) {
    std::vector<std::size_t> idx(g.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    switch (order) {
        case TieBreak::RowMajor: break;
        case TieBreak::ReverseRowMajor: std::reverse(idx.begin(), idx.end()); break;
        case TieBreak::ColumnMajor:
            std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                return std::pair(g.blocks[a].x, g.blocks[a].y) < std::pair(g.blocks[b].x, g.blocks[b].y);
            });
            break;
        case TieBreak::Shuffled: {
            std::mt19937_64 rng(seed);
            std::shuffle(idx.begin(), idx.end(), rng);
            break;
        }
    }
    return idx;
}

}  // namespace

std::size_t oracle_solve(const AssociatedGraph& g, TieBreak order, std::uint64_t seed) {
    const std::size_t n = g.size();
    const std::vector<std::size_t> scan = node_order(g, order, seed);
    Bitset alive(n);
    for (std::size_t i = 0; i < n; ++i) alive.set(i);
    std::size_t remaining = n;
    std::size_t count = 0;
    std::size_t start = 0;
    while (remaining > 0) {
        bool found = false;
        for (std::size_t k = start; k < n && !found; ++k) {
            const std::size_t v = scan[k];
            if (!alive.test(v)) {
                if (k == start) ++start;
                continue;
            }
            Bitset nv = g.adjacency[v];
            nv &= alive;
            bool clique = true;
            nv.for_each([&](std::size_t u) {
                if (clique && u != v && !nv.is_subset_of(g.adjacency[u])) clique = false;
            });
            if (!clique) continue;
            alive.subtract(nv);
            remaining -= nv.count();
            ++count;
            found = true;
        }
        if (!found) throw Error(ErrorCode::NoSimplicialNode, "residual graph with " + std::to_string(remaining) + " nodes");
    }
    return count;
}

std::size_t oracle_solve(const Polygon& p, const OracleOptions& options) {
    return oracle_solve(build_graph(p, options.cap), options.order, options.seed);
}

std::size_t exhaustive_solve(const Polygon& p, std::size_t hard_cap) {
    if (p.area_wide() > 64) throw Error(ErrorCode::SearchCapExceeded, "more than 64 blocks");
    const BlockGrid grid = enumerate_blocks(p, 64);
    const std::vector<Square> squares = lattice_maximal_squares(grid);
    if (squares.size() > hard_cap) {
        throw Error(ErrorCode::SearchCapExceeded, std::to_string(squares.size()) + " maximal squares exceed cap " + std::to_string(hard_cap));
    }
    const std::vector<Point> blocks = grid.blocks();
    const std::size_t n = blocks.size();
    std::vector<std::uint64_t> masks;
    for (const Square& s : squares) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Point& b = blocks[i];
            if (b.x >= s.corner.x && b.x < s.corner.x + s.side && b.y >= s.corner.y && b.y < s.corner.y + s.side) m |= std::uint64_t{1} << i;
        }
        masks.push_back(m);
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::size_t best = n;
    // Branch on the lowest uncovered block: one of the squares covering it
    // must be chosen.
    const auto search = [&](auto&& self, std::uint64_t covered, std::size_t used) -> void {
        if (covered == all) {
            best = std::min(best, used);
            return;
        }
        if (used + 1 >= best) return;
        const int low = __builtin_ctzll(~covered & all);
        for (std::uint64_t m : masks) {
            if ((m >> low) & 1U) self(self, covered | m, used + 1);
        }
    };
    search(search, 0, 0);
    return best;
}

}  // namespace orthocover
