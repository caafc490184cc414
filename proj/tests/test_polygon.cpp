#include <doctest.h>

#include <sstream>

#include "orthocover/io.hpp"
#include "orthocover/polygon.hpp"
#include "orthocover/testgen.hpp"
#include "support.hpp"

using namespace orthocover;

namespace {

const std::vector<Point> kSquare4{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
const std::vector<Point> kL{{0, 0}, {2, 0}, {2, 2}, {1, 2}, {1, 1}, {0, 1}};
const std::vector<Point> kRect5{{0, 0}, {5, 0}, {5, 1}, {0, 1}};
const std::vector<Point> kPlus{{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {2, 2}, {2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}, {1, 1}};
const std::vector<Point> kT{{0, 0}, {6, 0}, {6, 2}, {4, 2}, {4, 4}, {2, 4}, {2, 2}, {0, 2}};
const std::vector<Point> kU{{0, 0}, {6, 0}, {6, 4}, {4, 4}, {4, 2}, {2, 2}, {2, 4}, {0, 4}};
const std::vector<Point> kStair{{0, 0}, {2, 0}, {2, 2}, {4, 2}, {4, 4}, {0, 4}};

ErrorCode code_of(const std::vector<Point>& pts) {
    try {
        validate(pts);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("validation unexpectedly succeeded");
    return ErrorCode::InternalInvariantViolation;
}

std::size_t count(const std::vector<VertexClass>& v, VertexClass c) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), c));
}

}  // namespace

TEST_CASE("validate accepts the basic shapes") {
    const Polygon sq = validate(kSquare4);
    CHECK(sq.size() == 4);
    CHECK(area(sq) == 16);
    const Polygon l = validate(kL);
    CHECK(l.size() == 6);
    CHECK(area(l) == 3);
    CHECK(area(validate(kRect5)) == 5);
}

TEST_CASE("validate normalizes orientation and start vertex") {
    std::vector<Point> cw(kL.rbegin(), kL.rend());
    std::rotate(cw.begin(), cw.begin() + 2, cw.end());
    const Polygon a = validate(kL);
    const Polygon b = validate(cw);
    CHECK(a == b);
    CHECK(a.vertices().front() == Point{0, 0});
    CHECK(a.area_wide() > 0);
}

TEST_CASE("validate rejects malformed boundaries") {
    CHECK(code_of({{0, 0}, {4, 0}, {4, 4}}) == ErrorCode::NotClosedOrthogonal);
    CHECK(code_of({{0, 0}}) == ErrorCode::TooFewVertices);
    CHECK(code_of({{0, 0}, {3, 1}, {3, 3}, {0, 3}}) == ErrorCode::NotClosedOrthogonal);
    CHECK(code_of({{0, 0}, {2, 0}, {4, 0}, {4, 2}, {0, 2}}) == ErrorCode::CollinearRun);
    CHECK(code_of({{0, 0}, {2, 0}, {2, 0}, {2, 2}, {0, 2}}) == ErrorCode::NotClosedOrthogonal);
    // bow tie made of two squares sharing the point (2,2)
    CHECK(code_of({{0, 0}, {2, 0}, {2, 4}, {4, 4}, {4, 2}, {0, 2}}) == ErrorCode::SelfIntersecting);
    CHECK(code_of({{0, 0}, {2, 0}, {2, 2}, {4, 2}, {4, 4}, {2, 4}, {2, 2}, {0, 2}}) == ErrorCode::SelfIntersecting);
    const Coord big = (Coord{1} << 62) + 1;
    CHECK(code_of({{0, 0}, {big, 0}, {big, 1}, {0, 1}}) == ErrorCode::CoordinateOverflow);
    const Coord lim = Coord{1} << 62;
    CHECK(code_of({{-lim, 0}, {lim, 0}, {lim, 1}, {-lim, 1}}) == ErrorCode::CoordinateOverflow);
    CHECK_NOTHROW(validate(std::vector<Point>{{0, 0}, {lim, 0}, {lim, 1}, {0, 1}}));
}

TEST_CASE("validate_fixed merges repeated and collinear vertices") {
    const Polygon p = validate_fixed(std::vector<Point>{{0, 0}, {2, 0}, {4, 0}, {4, 0}, {4, 2}, {0, 2}});
    CHECK(p.size() == 4);
    CHECK(area(p) == 8);
}

TEST_CASE("vertex classes") {
    auto rect = classify_vertices(validate(kRect5));
    CHECK(count(rect, VertexClass::Convex) == 4);
    auto l = classify_vertices(validate(kL));
    CHECK(count(l, VertexClass::Convex) == 5);
    CHECK(count(l, VertexClass::Concave) == 1);
    auto plus = classify_vertices(validate(kPlus));
    CHECK(count(plus, VertexClass::Convex) == 8);
    CHECK(count(plus, VertexClass::Concave) == 4);
}

TEST_CASE("knobs of a rectangle face all four ways") {
    const auto ks = knobs(validate(kRect5));
    REQUIRE(ks.size() == 4);
    std::set<Direction> dirs;
    for (const Knob& k : ks) dirs.insert(k.direction);
    CHECK(dirs.size() == 4);
    // short sides are left and right knobs
    const Polygon p = validate(kRect5);
    for (const Knob& k : ks) {
        const Point a = p.vertex(static_cast<std::ptrdiff_t>(k.from)), b = p.vertex(static_cast<std::ptrdiff_t>(k.to));
        if (a.x == b.x) CHECK((k.direction == Direction::Left || k.direction == Direction::Right));
        if (a.x == b.x && a.x == 0) CHECK(k.direction == Direction::Left);
        if (a.y == b.y && a.y == 1) CHECK(k.direction == Direction::Top);
    }
}

TEST_CASE("non-knob convex vertices") {
    CHECK(non_knob_convex_vertices(validate(kRect5)).empty());
    CHECK(non_knob_convex_vertices(validate(kL)).empty());
    CHECK(non_knob_convex_vertices(validate(kT)).empty());
    CHECK(non_knob_convex_vertices(validate(kPlus)).empty());
    // Staircase: independent pass over the neighbours' turn directions.
    const Polygon s = validate(kStair);
    std::vector<std::size_t> expected;
    const auto& v = s.vertices();
    auto cross = [&](std::size_t i) {
        const Point a = v[(i + v.size() - 1) % v.size()], b = v[i], c = v[(i + 1) % v.size()];
        return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    };
    for (std::size_t i = 0; i < v.size(); ++i)
        if (cross(i) > 0 && cross((i + v.size() - 1) % v.size()) < 0 && cross((i + 1) % v.size()) < 0) expected.push_back(i);
    CHECK(non_knob_convex_vertices(s) == expected);
    CHECK(expected.empty());
    // a double step does have one: the middle outer corner (4,2)
    const Polygon d = validate(std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {4, 2}, {4, 4}, {6, 4}, {6, 6}, {0, 6}});
    CHECK(non_knob_convex_vertices(d).size() == 1);
}

TEST_CASE("point and rectangle containment") {
    const Polygon sq = validate(kSquare4);
    CHECK(contains_point(sq, Point{2, 2}) == Location::Interior);
    CHECK(contains_point(sq, Point{0, 2}) == Location::Boundary);
    CHECK(contains_point(sq, Point{5, 2}) == Location::Exterior);
    CHECK(contains_point(sq, HalfPoint{3, 3, true, true}) == Location::Interior);
    CHECK(contains_point(sq, HalfPoint{4, 3, false, true}) == Location::Boundary);
    CHECK(contains_rect(sq, Rect{1, 1, 3, 3}));
}

TEST_CASE("the L-shape notch is outside") {
    const Polygon l = validate(kL);
    CHECK_FALSE(contains_rect(l, Rect{0, 1, 1, 2}));
    CHECK(contains_rect(l, Rect{1, 1, 2, 2}));
    CHECK(contains_rect(l, Rect{0, 0, 2, 1}));
    CHECK_FALSE(contains_rect(l, Rect{0, 0, 2, 2}));
}

TEST_CASE("containment agrees with cell painting") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        GenSpec g;
        g.kind = GenKind::RectUnion;
        g.seed = seed;
        const Polygon p = generate(g);
        const oracle::Cells cells = oracle::fill(p);
        CHECK(cells.count() == static_cast<std::size_t>(p.area_wide()));
        for (Coord y = cells.y0; y < cells.y0 + cells.h; ++y)
            for (Coord x = cells.x0; x < cells.x0 + cells.w; ++x) {
                const bool in = contains_rect(p, Rect{x, y, x + 1, y + 1});
                CHECK(in == cells.at(x, y));
                const Location loc = contains_point(p, HalfPoint{x, y, true, true});
                CHECK((loc == Location::Interior) == cells.at(x, y));
            }
        // 2x2 windows
        for (Coord y = cells.y0; y + 2 <= cells.y0 + cells.h; ++y)
            for (Coord x = cells.x0; x + 2 <= cells.x0 + cells.w; ++x)
                CHECK(contains_rect(p, Rect{x, y, x + 2, y + 2}) == oracle::valid(cells, {x, y, 2}));
    }
}

TEST_CASE("transforms") {
    const Polygon l = validate(kL);
    const Polygon l3 = scale(l, 3);
    std::vector<Point> tripled;
    for (const Point& v : l.vertices()) tripled.push_back({3 * v.x, 3 * v.y});
    CHECK(l3 == validate(tripled));
    CHECK(area(l3) == 27);
    CHECK(scale(l, 1) == l);
    const Polygon r = rotate90(validate(kRect5));
    CHECK(r.bounding_box().width() == 1);
    CHECK(r.bounding_box().height() == 5);
    CHECK(area(r) == 5);
    const Coord lim = Coord{1} << 61;
    const Polygon big = validate(std::vector<Point>{{0, 0}, {lim, 0}, {lim, 1}, {0, 1}});
    CHECK_THROWS_AS(scale(big, 4), Error);
}

TEST_CASE("orthogonal convexity") {
    CHECK(is_orthogonally_convex(validate(kRect5)));
    CHECK(is_orthogonally_convex(validate(kPlus)));
    CHECK(is_orthogonally_convex(validate(kStair)));
    CHECK_FALSE(is_orthogonally_convex(validate(kU)));
}

TEST_CASE("convexity flag matches line probing on cells") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GenSpec g;
        g.kind = GenKind::RectUnion;
        g.seed = seed;
        const Polygon p = generate(g);
        const oracle::Cells c = oracle::fill(p);
        bool convex = true;
        for (Coord y = c.y0; y < c.y0 + c.h; ++y) {
            int runs = 0;
            for (Coord x = c.x0; x < c.x0 + c.w; ++x) runs += c.at(x, y) && !c.at(x - 1, y);
            convex &= runs <= 1;
        }
        for (Coord x = c.x0; x < c.x0 + c.w; ++x) {
            int runs = 0;
            for (Coord y = c.y0; y < c.y0 + c.h; ++y) runs += c.at(x, y) && !c.at(x, y - 1);
            convex &= runs <= 1;
        }
        CHECK(is_orthogonally_convex(p) == convex);
    }
}

TEST_CASE("properties over generated polygons") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        GenSpec g;
        g.kind = static_cast<GenKind>(seed % 4);
        g.seed = seed;
        g.unit = 0;
        const Polygon p = generate(g);
        const auto cls = classify_vertices(p);
        CHECK(count(cls, VertexClass::Convex) == count(cls, VertexClass::Concave) + 4);
        for (const Knob& k : knobs(p)) {
            CHECK(cls[k.from] == VertexClass::Convex);
            CHECK(cls[k.to] == VertexClass::Convex);
        }
        CHECK(area(scale(p, 3)) == 9 * area(p));
        CHECK(area(rotate90(p)) == area(p));
        CHECK(rotate90(rotate90(rotate90(rotate90(p)))) == p);
        CHECK(detail::boundary_is_simple(p.vertices()) == detail::boundary_is_simple_pairwise(p.vertices()));
        std::stringstream ss;
        write_polygon(ss, p);
        CHECK(read_polygon(ss) == p);
        if (is_orthogonally_convex(p)) CHECK(knobs(p).size() == 4);
    }
}

TEST_CASE("sweep simplicity matches the pairwise test on perturbed rings") {
    SplitMix64 rng(99);
    int rejected = 0;
    for (int trial = 0; trial < 400; ++trial) {
        GenSpec g;
        g.kind = GenKind::RectUnion;
        g.seed = static_cast<std::uint64_t>(trial);
        std::vector<Point> ring = generate(g).vertices();
        // move one vertical edge sideways, which keeps the ring orthogonal
        const std::size_t i = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(ring.size()) - 1));
        const std::size_t j = (i + 1) % ring.size();
        const Coord d = rng.range(-3, 3);
        if (ring[i].x == ring[j].x) {
            ring[i].x += d, ring[j].x += d;
        } else {
            ring[i].y += d, ring[j].y += d;
        }
        const bool sweep = detail::boundary_is_simple(ring);
        CHECK(sweep == detail::boundary_is_simple_pairwise(ring));
        rejected += !sweep;
    }
    CHECK(rejected > 0);
}
