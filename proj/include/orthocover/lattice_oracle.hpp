#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orthocover/polygon.hpp"
#include "orthocover/squares.hpp"

namespace orthocover {

inline constexpr std::size_t kDefaultOracleCap = 20000;

// Cap from ORTHOCOVER_ORACLE_CAP, or the default when unset or malformed.
std::size_t oracle_cap_from_env();

// Unit cells of the bounding box, flagged when inside the polygon.
// A block is named by its bottom-left lattice point.
class BlockGrid {
public:
    BlockGrid(Point origin, Coord width, Coord height);

    Point origin() const { return origin_; }
    Coord width() const { return width_; }
    Coord height() const { return height_; }
    std::size_t count() const { return count_; }

    bool member(Point block) const;
    void set(Point block);

    // Row-major list of member blocks.
    std::vector<Point> blocks() const;

    // Number of member blocks in [x1,x2) x [y1,y2) of block coordinates.
    std::size_t members_in(Coord x1, Coord y1, Coord x2, Coord y2) const;

private:
    std::size_t index(Coord x, Coord y) const;
    void build_prefix() const;

    Point origin_;
    Coord width_;
    Coord height_;
    std::size_t count_ = 0;
    std::vector<bool> cells_;
    mutable std::vector<std::uint32_t> prefix_;
};

// Throws LatticeCapExceeded when the area exceeds cap, or the bounding box
// holds more than 64 cells per allowed block.
BlockGrid enumerate_blocks(const Polygon& p, std::size_t cap = kDefaultOracleCap);

// Some valid square covers both blocks.
bool blocks_adjacent(const BlockGrid& grid, Point a, Point b);

// Maximal valid squares read off the block grid, in (corner, side) order.
std::vector<Square> lattice_maximal_squares(const BlockGrid& grid);

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    std::size_t count() const;
    bool none() const;

    Bitset& operator|=(const Bitset& o);
    Bitset& operator&=(const Bitset& o);
    // this & ~o
    Bitset& subtract(const Bitset& o);
    bool is_subset_of(const Bitset& o) const;

    template <typename F>
    void for_each(F f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::vector<std::uint64_t> words_;
};

// Block graph: blocks are adjacent when one valid square covers both.
// Self loops are included in `adjacency` so rows are closed neighbourhoods.
struct AssociatedGraph {
    std::vector<Point> blocks;
    std::vector<Bitset> adjacency;

    std::size_t size() const { return blocks.size(); }
    std::size_t edge_count() const;
};

AssociatedGraph build_graph(const Polygon& p, std::size_t cap = kDefaultOracleCap);

// Perfect elimination ordering found by maximum cardinality search, verified.
bool is_chordal(const AssociatedGraph& g);

enum class TieBreak { RowMajor, ColumnMajor, ReverseRowMajor, Shuffled };

struct OracleOptions {
    std::size_t cap = kDefaultOracleCap;
    TieBreak order = TieBreak::RowMajor;
    std::uint64_t seed = 0;  // for Shuffled
};

// Minimum clique cover of the block graph by repeated removal of the closed
// neighbourhood of a simplicial node. Throws LatticeCapExceeded or
// NoSimplicialNode.
std::size_t oracle_solve(const Polygon& p, const OracleOptions& options = {});
std::size_t oracle_solve(const AssociatedGraph& g, TieBreak order = TieBreak::RowMajor, std::uint64_t seed = 0);

// Minimum cover by search over subsets of maximal squares. Throws
// SearchCapExceeded beyond hard_cap maximal squares or 64 blocks.
std::size_t exhaustive_solve(const Polygon& p, std::size_t hard_cap = 24);

}  // namespace orthocover
