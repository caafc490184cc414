#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orthocover/polygon.hpp"
#include "orthocover/squares.hpp"

namespace orthocover {

enum class Orientation { Horizontal, Vertical };

// A t x (eta * t) rectangle standing for eta side-by-side t-squares.
struct RecPack {
    Point anchor;
    Coord t = 1;
    Coord eta = 1;
    Orientation orientation = Orientation::Horizontal;

    friend bool operator==(const RecPack&, const RecPack&) = default;

    Rect rect() const;
    // i-th square of the extraction, 0 <= i < eta; left to right or bottom to top.
    Square square(Coord i) const;
};

// Checked constructor: positive t and eta, rectangle within 64-bit range.
// Single squares are normalized to Horizontal.
RecPack make_pack(Point anchor, Coord t, Coord eta, Orientation o);
inline RecPack make_pack(const Square& s) { return make_pack(s.corner, s.side, 1, Orientation::Horizontal); }

inline constexpr std::size_t kDefaultMaterializeCap = 1'000'000;

// Lazy view of a pack's squares; `materialize` realizes them under a cap.
class Extraction {
public:
    explicit Extraction(const RecPack& pack) : pack_(pack) {}

    Coord size() const { return pack_.eta; }
    Square operator[](Coord i) const { return pack_.square(i); }

    // Throws MaterializationCapExceeded when eta > cap.
    std::vector<Square> materialize(std::size_t cap = kDefaultMaterializeCap) const;

private:
    RecPack pack_;
};

inline Extraction extract(const RecPack& r) { return Extraction(r); }

class Cover {
public:
    Cover() = default;
    explicit Cover(std::vector<RecPack> packs);

    void add(const RecPack& r);

    const std::vector<RecPack>& packs() const { return packs_; }
    std::size_t size() const { return packs_.size(); }
    bool empty() const { return packs_.empty(); }

    // Number of squares over all packs.
    const BigInt& total() const { return total_; }

    std::vector<Rect> rects() const;

private:
    std::vector<RecPack> packs_;
    BigInt total_ = 0;
};

// Exact area of the union of closed rectangles.
BigInt union_area(std::span<const Rect> rects);

// Faster variant for rectangles whose union area is known to fit in 128 bits,
// such as any set of rectangles inside a validated polygon.
UWide union_area_wide(std::span<const Rect> rects);

// Index of the first pack not contained in p.
std::optional<std::size_t> first_pack_outside(const Polygon& p, const Cover& c);

// Throws PackOutsidePolygon naming the first pack outside p.
bool covers_polygon(const Polygon& p, const Cover& c);

// True when two packs produce the same square.
bool packs_collide(const RecPack& a, const RecPack& b);

// First colliding pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_collision(std::span<const RecPack> packs);

inline bool overlap_free(const Cover& c) { return !first_collision(c.packs()).has_value(); }

}  // namespace orthocover
