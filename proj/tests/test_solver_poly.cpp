#include <doctest.h>

#include "orthocover/lattice_oracle.hpp"
#include "orthocover/solver_poly.hpp"
#include "orthocover/testgen.hpp"
#include "support.hpp"

using namespace orthocover;

namespace {

const Polygon kSq4 = validate(std::vector<Point>{{0, 0}, {4, 0}, {4, 4}, {0, 4}});
const Polygon kRect5 = validate(std::vector<Point>{{0, 0}, {5, 0}, {5, 1}, {0, 1}});
const Polygon kRect8 = validate(std::vector<Point>{{0, 0}, {8, 0}, {8, 1}, {0, 1}});
const Polygon kRect21 = validate(std::vector<Point>{{0, 0}, {2, 0}, {2, 1}, {0, 1}});
const Polygon kL = validate(std::vector<Point>{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
const Polygon kPlus = validate(std::vector<Point>{
    {1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {2, 2}, {2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}, {1, 1}});

std::set<Point> as_set(const std::vector<Point>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("candidate points") {
    const CandidateGrid g = candidate_points(kSq4, Cover{});
    const std::set<Point> corners{{0, 0}, {4, 0}, {0, 4}, {4, 4}};
    CHECK(as_set(g.cx) == corners);
    CHECK(as_set(g.cy) == corners);
    CHECK(g.cx.size() == 4);

    const Cover ps({make_pack({0, 0}, 1, 1, Orientation::Horizontal)});
    const CandidateGrid h = candidate_points(kRect5, ps);
    CHECK(as_set(h.cy) == std::set<Point>{{0, 0}, {1, 0}, {5, 0}, {0, 1}, {1, 1}, {5, 1}});
    CHECK(as_set(h.cx) == std::set<Point>{{0, 0}, {5, 0}, {0, 1}, {5, 1}});
    CHECK(std::is_sorted(h.cy.begin(), h.cy.end()));
}

TEST_CASE("candidate grid sizes respect their bounds") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GenSpec g;
        g.kind = GenKind::RectUnion;
        g.seed = seed;
        const Polygon p = generate(g);
        const SolveResult r = solve_poly(p);
        const std::size_t n = p.size(), m = r.cover.size();
        const CandidateGrid c = candidate_points(p, r.cover);
        CHECK(c.cx.size() <= n * (n + 4 * m));
        CHECK(c.cy.size() <= n * (n + 4 * m));
        const Square s = r.cover.packs().front().square(0);
        const CandidateGrid d = padded_points(p, r.cover, s);
        CHECK(d.cx.size() <= 3 * (n + 4 * m + 4) * n);
        CHECK(d.cy.size() <= 3 * (n + 4 * m + 4) * n);
    }
}

TEST_CASE("candidate squares examples") {
    CHECK(candidate_squares(kSq4, Cover{}) == std::vector<Square>{{{0, 0}, 4}});
    CHECK(candidate_squares(kRect5, Cover{}) == std::vector<Square>{{{0, 0}, 1}, {{4, 0}, 1}});
    const auto l = candidate_squares(kL, Cover{});
    CHECK(l == std::vector<Square>{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}});
    const auto brute = oracle::maximal_squares(oracle::fill(kL));
    CHECK(brute.size() == 3);
    for (const auto& q : brute) CHECK(std::find(l.begin(), l.end(), Square{{q.x, q.y}, q.s}) != l.end());
}

TEST_CASE("candidate squares are the maximal squares cornered on the grid") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec g;
        g.kind = seed % 2 ? GenKind::RectUnion : GenKind::Staircase;
        g.seed = seed;
        g.unit = 0;
        const Polygon p = generate(g);
        const Cover ps({solve_poly(p).cover.packs().front()});
        const CandidateGrid grid = candidate_points(p, ps);
        std::set<Point> pts(grid.cx.begin(), grid.cx.end());
        pts.insert(grid.cy.begin(), grid.cy.end());
        std::vector<Square> want;
        for (const auto& q : oracle::maximal_squares(oracle::fill(p))) {
            const Point corners[4] = {{q.x, q.y}, {q.x + q.s, q.y}, {q.x, q.y + q.s}, {q.x + q.s, q.y + q.s}};
            bool hit = false;
            for (const Point& c : corners) hit |= pts.count(c) > 0;
            if (hit) want.push_back({{q.x, q.y}, q.s});
        }
        std::sort(want.begin(), want.end());
        CHECK(candidate_squares(p, ps) == want);
    }
}

TEST_CASE("check_unambiguous examples") {
    CHECK(check_unambiguous(kSq4, Cover{}, Square{{0, 0}, 4}));
    CHECK_FALSE(check_unambiguous(kSq4, Cover{}, Square{{1, 1}, 2}));
    CHECK(check_unambiguous(kRect21, Cover{}, Square{{0, 0}, 1}));
    CHECK_THROWS_AS(check_unambiguous(kSq4, Cover{}, Square{{3, 3}, 3}), Error);
    // block (0,0) of the 2x1 rectangle is simplicial with closed neighbourhood {itself}
    const AssociatedGraph g = build_graph(kRect21);
    REQUIRE(g.size() == 2);
    CHECK(g.adjacency[0].count() == 1);
}

TEST_CASE("a square whose blocks all lie in bigger squares is ambiguous") {
    // 3x2 rectangle: the two 2-squares overlap in the middle column
    const Polygon p = validate(std::vector<Point>{{0, 0}, {3, 0}, {3, 2}, {0, 2}});
    CHECK(check_unambiguous(p, Cover{}, Square{{0, 0}, 2}));
    CHECK(check_unambiguous(p, Cover{}, Square{{1, 0}, 2}));
    // a single middle 2-square already placed makes nothing ambiguous about the left one
    const Cover ps({make_pack({1, 0}, 2, 1, Orientation::Horizontal)});
    CHECK(check_unambiguous(p, ps, Square{{0, 0}, 2}));
}

TEST_CASE("generate_recpack examples") {
    const Square left{{0, 0}, 1};
    const auto r = generate_recpack(kRect8, left, Cover({make_pack(left)}), PackDirection::Right);
    REQUIRE(r.has_value());
    CHECK(*r == make_pack({1, 0}, 1, 7, Orientation::Horizontal));
    for (PackDirection d : {PackDirection::Left, PackDirection::Right, PackDirection::Up, PackDirection::Down}) {
        CHECK_FALSE(generate_recpack(kSq4, Square{{0, 0}, 4}, Cover({make_pack(Square{{0, 0}, 4})}), d).has_value());
    }
    const Square right{{7, 0}, 1};
    const auto l = generate_recpack(kRect8, right, Cover({make_pack(right)}), PackDirection::Left);
    REQUIRE(l.has_value());
    CHECK(*l == make_pack({0, 0}, 1, 7, Orientation::Horizontal));
    CHECK_FALSE(generate_recpack(kRect8, left, Cover({make_pack(left)}), PackDirection::Up).has_value());
}

TEST_CASE("generate_recpack in a vertical strip") {
    const Polygon p = rotate90(kRect8);  // x in [-1,0], y in [0,8]
    const Square bottom{{-1, 0}, 1};
    const auto r = generate_recpack(p, bottom, Cover({make_pack(bottom)}), PackDirection::Up);
    REQUIRE(r.has_value());
    CHECK(*r == make_pack({-1, 1}, 1, 7, Orientation::Vertical));
}

TEST_CASE("generate_recpack stops at packs already placed") {
    const Square left{{0, 0}, 1};
    const Cover ps({make_pack(left), make_pack({5, 0}, 1, 1, Orientation::Horizontal)});
    const auto r = generate_recpack(kRect8, left, ps, PackDirection::Right);
    REQUIRE(r.has_value());
    CHECK(*r == make_pack({1, 0}, 1, 4, Orientation::Horizontal));
    // a gap of exactly one square is not worth a pack
    const Cover tight({make_pack(left), make_pack({2, 0}, 1, 1, Orientation::Horizontal)});
    CHECK_FALSE(generate_recpack(kRect8, left, tight, PackDirection::Right).has_value());
}

TEST_CASE("solve_poly examples") {
    CHECK(solve_poly(kSq4).count == 1);
    CHECK(solve_poly(kRect5).count == 5);
    const SolveResult plus = solve_poly(kPlus);
    CHECK(plus.count == 5);
    CHECK(oracle_solve(kPlus) == 5);
    CHECK(oracle::min_cover(oracle::fill(kPlus)) == 5);
}

TEST_CASE("solve_poly reports every step") {
    std::vector<PolyStep> steps;
    PolyOptions opts;
    opts.on_step = [&](const PolyStep& s) { steps.push_back(s); };
    const SolveResult r = solve_poly(kRect8, opts);
    CHECK(r.count == 8);
    REQUIRE(!steps.empty());
    CHECK(steps.size() == r.poly.iterations);
    std::size_t packs = 0;
    for (const PolyStep& s : steps) {
        REQUIRE(!s.packs.empty());
        CHECK(s.packs.front() == make_pack(s.seed));
        packs += s.packs.size();
    }
    CHECK(packs == r.cover.size());
}

TEST_CASE("solve_poly is optimal on small polygons") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        GenSpec g;
        g.kind = static_cast<GenKind>(seed % 3);
        g.seed = seed;
        g.grid = 4;
        g.max_cell = 2;
        g.steps = 1 + static_cast<int>(seed % 4);
        g.unit = 0;
        g.max_cell = 2;
        g.columns = 1 + static_cast<int>(seed % 3);
        const Polygon p = generate(g);
        const oracle::Cells cells = oracle::fill(p);
        if (cells.count() > 40) continue;
        const SolveResult r = solve_poly(p);
        CHECK(r.count == oracle::min_cover(cells));
        CHECK(covers_polygon(p, r.cover));
        CHECK(overlap_free(r.cover));
        CHECK(r.cover.total() == r.count);
    }
}

TEST_CASE("solve_poly outputs maximal squares inside the polygon") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenSpec g;
        g.kind = static_cast<GenKind>(seed % 4);
        g.seed = seed;
        g.unit = 0;
        const Polygon p = generate(g);
        const SolveResult r = solve_poly(p);
        CHECK(covers_polygon(p, r.cover));
        CHECK(overlap_free(r.cover));
        CHECK(r.count == oracle_solve(p));
        for (const RecPack& pk : r.cover.packs()) {
            CHECK(contains_rect(p, pk.rect()));
            if (pk.eta == 1) CHECK(is_maximal(p, pk.square(0)));
        }
    }
}

TEST_CASE("rectangles of every length") {
    for (Coord t : {Coord{1}, Coord{2}, Coord{7}, Coord{1000}, Coord{1} << 40, Coord{1} << 60}) {
        const Polygon p = validate(std::vector<Point>{{0, 0}, {t, 0}, {t, 1}, {0, 1}});
        const SolveResult r = solve_poly(p);
        CHECK(r.count == t);
        CHECK(r.cover.size() <= 3);
        CHECK(covers_polygon(p, r.cover));
        CHECK(overlap_free(r.cover));
    }
    const Coord t = Coord{1} << 40;
    const Polygon fat = validate(std::vector<Point>{{0, 0}, {3 * t + 1, 0}, {3 * t + 1, t}, {0, t}});
    const SolveResult r = solve_poly(fat);
    CHECK(r.count == 4);
    CHECK(covers_polygon(fat, r.cover));
}
