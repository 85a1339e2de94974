#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "skeletal/constructions.hpp"
#include "skeletal/lattice.hpp"

using namespace skeletal;

TEST_CASE("grid limits and base selection") {
    CHECK(grid_limit(1, 2) == 3);
    CHECK(grid_limit(2, 2) == 15);
    CHECK(grid_limit(3, 2) == 63);
    CHECK(grid_limit(2, 3) == 80);
    CHECK_THROWS_AS(grid_limit(0, 2), ValidationError);
    CHECK_THROWS_AS(grid_limit(2, 1), ValidationError);

    CHECK(choose_scale_base(2, 1) == 2);
    CHECK(choose_scale_base(2, 225) == 2);
    CHECK(choose_scale_base(2, 226) == 3);
    CHECK(choose_scale_base(2, 6400) == 3);
    CHECK(choose_scale_base(2, 6401) == 4);
    CHECK(choose_scale_base(3, 250047) == 2);
    CHECK_THROWS_AS(choose_scale_base(2, 0), ValidationError);
}

TEST_CASE("target set is the lexicographic prefix") {
    ConstructionResult res = skeleton_construction(2, 0, 4);
    CHECK(res.i == 2);
    REQUIRE(res.S.size() == 4);
    const std::vector<Coord> expected{1, 1, 1, 2, 1, 3, 1, 4};
    CHECK(res.S.flat() == expected);

    ConstructionResult wrap = skeleton_construction(2, 0, 17);
    auto row = wrap.S.row(16);  // index 16 = (2, 2) in the 15-wide grid
    CHECK(row[0] == 2);
    CHECK(row[1] == 2);
}

TEST_CASE("vertex-only construction covers every target point") {
    for (Coord p : {Coord{1}, Coord{10}, Coord{225}}) {
        ConstructionResult res = skeleton_construction(2, 0, p);
        CHECK(res.B.size() == 3025);  // 55^2
        const CoverReport rep = verify_cover(res.B, res.S, 0);
        CHECK(rep.satisfied);
    }
    // 247^3 cover points: needs a cap above the 10M default.
    ConstructionResult three = skeleton_construction(3, 0, 10, 20'000'000);
    CHECK(three.B.size() == 247 * 247 * 247);
    CHECK(verify_cover(three.B, three.S, 0).satisfied);
}

TEST_CASE("k >= 1 unions have the predicted exact size") {
    ConstructionResult res = skeleton_construction(2, 1, 225);
    CHECK(res.B.size() == 1425);
    CHECK(static_cast<Coord>(res.B.size()) == skeleton_union_size(2, 1, 2));
    CHECK(skeleton_union_size(2, 0, 2) == 3025);
    CHECK_THROWS_AS(skeleton_union_size(2, 2, 2), ValidationError);  // k < n required
}

TEST_CASE("edge skeletons fail exactly at the grid corners") {
    // The union demands one coordinate inside [1, m] at every skeleton point,
    // but a cube centered on a corner of the grid has a vertex with all
    // coordinates below 1, for every radius. The four corners are therefore
    // uncoverable; every other grid point has a witness.
    ConstructionResult res = skeleton_construction(2, 1, 225);
    const CoverReport rep = verify_cover(res.B, res.S, 1);
    CHECK(!rep.satisfied);
    const std::vector<std::size_t> corner_indices{0, 14, 210, 224};
    CHECK(rep.failure_indices == corner_indices);
    // (1,1) is the lexicographically first grid point, so even p = 1 fails.
    ConstructionResult tiny = skeleton_construction(2, 1, 1);
    CHECK(!verify_cover(tiny.B, tiny.S, 1).satisfied);
    // An interior point is fine.
    PointSet interior = PointSet::from_flat(2, {7, 9});
    CHECK(verify_cover(res.B, interior, 1).satisfied);
}

TEST_CASE("growing p within one base never changes the cover set") {
    ConstructionResult small = skeleton_construction(2, 1, 10);
    ConstructionResult large = skeleton_construction(2, 1, 225);
    CHECK(small.B == large.B);
    ConstructionResult v_small = skeleton_construction(2, 0, 10);
    ConstructionResult v_large = skeleton_construction(2, 0, 225);
    CHECK(v_small.B == v_large.B);
}

TEST_CASE("corner-condition construction always verifies") {
    for (int l : {1, 2}) {
        ConstructionResult res = nl_construction(2, l, 50);
        CHECK(res.B.dim() == l);
        CHECK(res.S.dim() == 2);
        CHECK(verify_nl_condition(res.B, res.S, l).satisfied);
    }
    ConstructionResult res = nl_construction(3, 2, 100);
    CHECK(res.B.size() == 247 * 247);
    CHECK(verify_nl_condition(res.B, res.S, 2).satisfied);
    CHECK_THROWS_AS(nl_construction(2, 0, 5), ValidationError);
    CHECK_THROWS_AS(nl_construction(2, 3, 5), ValidationError);
}

TEST_CASE("sign basis: frozen 2-dimensional instance and exact inverses") {
    SignBasis b2 = sign_basis(2);
    CHECK(b2.scale == 2);
    CHECK(b2.vectors == std::vector<std::vector<Coord>>{{1, 1}, {1, -1}});
    CHECK(b2.inverse_scaled == std::vector<std::vector<Coord>>{{1, 1}, {1, -1}});

    for (int n = 1; n <= 5; ++n) {
        SignBasis basis = sign_basis(n);
        CHECK(basis.scale >= 1);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                Coord acc = 0;
                for (int t = 0; t < n; ++t)
                    acc += basis.vectors[r][t] * basis.inverse_scaled[t][c];
                CHECK(acc == (r == c ? basis.scale : 0));
            }
        }
    }
}

TEST_CASE("orthoplex construction verifies and keeps sizes") {
    ConstructionResult res = orthoplex_construction(2, 225);
    CHECK(res.scale == 2);
    CHECK(res.S.size() == 225);   // the basis map is injective
    CHECK(res.B.size() == 3025);  // |D|^2 survives the transform
    CHECK(verify_orthoplex_cover(res.B, res.S).satisfied);

    ConstructionResult tiny = orthoplex_construction(1, 3);
    CHECK(verify_orthoplex_cover(tiny.B, tiny.S).satisfied);
}

TEST_CASE("budget guards reject oversized requests") {
    CHECK_THROWS_AS(skeleton_construction(2, 0, 226, 1000), BudgetError);
    CHECK_THROWS_AS(skeleton_construction(2, 0, 5000, 100), BudgetError);
    CHECK_THROWS_AS(nl_construction(2, 2, 10, 100), BudgetError);
    CHECK_THROWS_AS(orthoplex_construction(2, 10, 100), BudgetError);
    try {
        skeleton_construction(2, 0, 226, 1000);
        FAIL("expected a budget error");
    } catch (const BudgetError& e) {
        CHECK(e.estimated > e.cap);
        CHECK(e.cap == 1000);
    }
}
