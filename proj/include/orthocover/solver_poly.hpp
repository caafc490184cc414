#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "orthocover/cover.hpp"
#include "orthocover/polygon.hpp"
#include "orthocover/squares.hpp"

namespace orthocover {

// Lattice points from which squares are enumerated. For the candidate grid,
// cx pairs vertex x with vertex or pack y, cy pairs vertex or pack x with
// vertex y. The padded grid also admits coordinates off by one.
struct CandidateGrid {
    std::vector<Point> cx;
    std::vector<Point> cy;
};

CandidateGrid candidate_points(const Polygon& p, const Cover& ps);

// Padded grid used to test a square s, with s counted as a pack.
CandidateGrid padded_points(const Polygon& p, const Cover& ps, const Square& s);

// Maximal squares with a corner on the candidate grid, ordered by (corner, side).
std::vector<Square> candidate_squares(const Polygon& p, const Cover& ps);

// True when s covers a simplicial uncovered block together with all of its
// uncovered neighbours. Throws NotValidSquare when s is not inside p.
bool check_unambiguous(const Polygon& p, const Cover& ps, const Square& s);

enum class PackDirection { Left, Right, Up, Down };

const char* to_string(PackDirection d);

// Widest rec-pack of the seed's width next to the seed in direction `dir`,
// along the strip between the polygon edges through the seed's two corners
// on that side. nullopt when no such strip exists or there is no room.
std::optional<RecPack> generate_recpack(const Polygon& p, const Square& seed, const Cover& ps, PackDirection dir);

struct PolyStep {
    std::size_t iteration = 0;
    Square seed;
    std::vector<RecPack> packs;
};

struct PolyStats {
    std::size_t iterations = 0;
    std::size_t checks = 0;
};

struct PolyOptions {
    // Called after every main-loop iteration.
    std::function<void(const PolyStep&)> on_step;
};

struct SolveResult {
    BigInt count = 0;
    Cover cover;
    PolyStats poly;
};

// Exact minimum square cover. Throws InternalInvariantViolation if no
// unambiguous square can be found while area is still uncovered.
SolveResult solve_poly(const Polygon& p, const PolyOptions& options = {});

}  // namespace orthocover
