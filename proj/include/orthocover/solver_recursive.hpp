#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthocover/cover.hpp"
#include "orthocover/polygon.hpp"
#include "orthocover/solver_poly.hpp"
#include "orthocover/squares.hpp"

namespace orthocover {

// Sides of a square, as bits.
enum SideBit : unsigned { kBottom = 1, kRight = 2, kTop = 4, kLeft = 8 };

// Corners of a square, as bits.
enum CornerBit : unsigned { kBottomLeft = 1, kBottomRight = 2, kTopRight = 4, kTopLeft = 8 };

struct SideSignature {
    unsigned sides = 0;
    unsigned corners = 0;

    friend auto operator<=>(const SideSignature&, const SideSignature&) = default;

    // One of t, b, l, r, tr, br, tl, bl, trb, tlb, rbl, rtl; "?" otherwise.
    std::string name() const;
    // Contiguous run of one to three sides whose inner corners are touched.
    bool admissible() const;
};

// One connected piece of p minus s: the boundary arc of p it owns, running
// counter-clockwise from a to b, and its contact stretch on the square's
// boundary, measured counter-clockwise from the bottom-left corner.
struct Component {
    std::vector<Point> arc;
    Wide contact_from = 0;
    Wide contact_to = 0;
    SideSignature signature;
    Polygon region;
};

struct ComponentGroup {
    SideSignature signature;
    std::vector<Component> members;  // in contact order around the square
};

struct ComponentPartition {
    Square square;
    std::vector<ComponentGroup> groups;

    std::size_t component_count() const;
};

// Lexicographically smallest non-knob convex vertex and its corner square.
std::optional<std::pair<std::size_t, Square>> find_separating_setup(const Polygon& p);

// Splits p along the boundary of s. Throws NotSeparating when fewer than two
// pieces remain and InternalInvariantViolation on inconsistent geometry.
ComponentPartition subtract_and_partition(const Polygon& p, const Square& s);

// The group's pieces together with the square, as one polygon.
Polygon merge_with_square(const ComponentGroup& group, const Square& s);

struct RecursionStats {
    std::size_t internal_nodes = 0;
    std::size_t leaves = 0;
    std::size_t fallbacks = 0;
    std::size_t max_depth = 0;
    std::size_t min_knobs = SIZE_MAX;
    std::size_t max_knobs = 0;
    // Per-node checks: children never gain vertices or knobs, leaves have at
    // most 4k - 4 vertices, corners of the square sit on knobs along its sides.
    std::size_t child_size_violations = 0;
    std::size_t base_case_violations = 0;
    std::size_t corner_knob_violations = 0;
    std::vector<std::string> warnings;
};

struct RecursiveResult {
    BigInt count = 0;
    Cover cover;
    RecursionStats stats;
};

// Cuts along separating corner squares while non-knob convex vertices exist
// and solves the pieces with solve_poly. Throws RecursionDepthExceeded.
RecursiveResult solve_recursive(const Polygon& p);

}  // namespace orthocover
