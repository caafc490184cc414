#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "orthocover/polygon.hpp"

namespace orthocover {

// splitmix64: state += 0x9E3779B97F4A7C15, then
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Ranges are drawn as lo + next() % (hi - lo + 1); the slight modulo bias is
// part of the contract so that ports reproduce the same corpora.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform-ish integer in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

enum class GenKind { RectUnion, Staircase, OrthoConvex, Comb, Rectangle };

const char* to_string(GenKind k);
std::optional<GenKind> parse_gen_kind(std::string_view s);

struct GenSpec {
    GenKind kind = GenKind::Rectangle;
    std::uint64_t seed = 0;

    // RectUnion: cells per side of the grid, rectangles to union, widest cell.
    int grid = 6;
    int pieces = 4;
    Coord max_cell = 3;
    int max_vertices = 0;  // retry until n is at most this; 0 disables
    Coord max_area = 0;    // same for area

    // Staircase: step count and step size; unit 0 draws each step in [1, max_cell].
    int steps = 3;
    Coord unit = 1;

    // OrthoConvex: number of columns; the polygon has 4 * columns vertices.
    int columns = 4;

    // Comb: teeth on each side, giving 8 * teeth + 4 vertices and 2 * teeth + 2 knobs.
    int teeth = 3;

    // Rectangle: the 1 x t rectangle, wide along x.
    Coord t = 5;
};

// Deterministic in the spec. Throws GenerationFailed when RectUnion exhausts
// its retry budget.
Polygon generate(const GenSpec& spec);

}  // namespace orthocover
