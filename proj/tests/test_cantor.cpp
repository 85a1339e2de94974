#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "skeletal/cantor.hpp"
#include "skeletal/common.hpp"

using namespace skeletal;

namespace {

std::vector<Rational> rationals(std::vector<std::pair<long, long>> fracs) {
    std::vector<Rational> out;
    out.reserve(fracs.size());
    for (auto [num, den] : fracs) out.emplace_back(num, den);
    return out;
}

Stage stage_from_values(int index, Rational scale, std::vector<Rational> values) {
    Stage s;
    s.index = index;
    s.scale = std::move(scale);
    s.values = std::move(values);
    s.diameter = s.values.back() - s.values.front();
    s.min_gap = s.values.size() > 1 ? s.values[1] - s.values[0] : Rational(0);
    s.ell = static_cast<std::int64_t>(s.values.size());
    return s;
}

}  // namespace

TEST_CASE("stage values and metadata are exact") {
    VertexStages vs = vertex_stages(1, Rational(1), 3);
    REQUIRE(vs.T.stages.size() == 3);
    REQUIRE(vs.A.stages.size() == 3);

    // Scales 1/(i! * (i-1)!) for i = 2, 3, 4; both families share them.
    auto scales = rationals({{1, 4}, {1, 36}, {1, 576}});
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(vs.T.stages[j].index == static_cast<int>(j) + 2);
        CHECK(vs.T.stages[j].scale == scales[j]);
        CHECK(vs.A.stages[j].scale == scales[j]);
    }

    CHECK(vs.T.stages[0].values == rationals({{1, 4}, {1, 2}, {3, 4}}));
    CHECK(vs.A.stages[0].values ==
          rationals({{-1, 1}, {-1, 2}, {-1, 4}, {0, 1}, {1, 4}, {1, 2}, {1, 1}}));

    std::vector<std::int64_t> t_ells{3, 8, 15}, a_ells{7, 15, 23};
    auto t_diams = rationals({{1, 2}, {7, 36}, {7, 288}});
    auto a_diams = rationals({{2, 1}, {2, 3}, {1, 12}});
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(vs.T.stages[j].ell == t_ells[j]);
        CHECK(vs.A.stages[j].ell == a_ells[j]);
        CHECK(vs.T.stages[j].diameter == t_diams[j]);
        CHECK(vs.A.stages[j].diameter == a_diams[j]);
        // Both families contain consecutive multiples of the cell width, so
        // the measured minimum gap is the cell width itself.
        CHECK(vs.T.stages[j].min_gap == scales[j]);
        CHECK(vs.A.stages[j].min_gap == scales[j]);
    }
}

TEST_CASE("decay and nesting flags are measured, not assumed") {
    VertexStages vs = vertex_stages(1, Rational(1), 3);
    CHECK(vs.T.geometric_decay);
    CHECK(vs.T.nesting);
    CHECK(vs.A.geometric_decay);
    // diameter(A_3) + min_gap(A_3) = 2/3 + 1/36 > 1/4 = min_gap(A_2): a later
    // stage does not fit between consecutive points of the previous one.
    CHECK(!vs.A.nesting);
}

TEST_CASE("truncated sums of hand-built stages") {
    StageSpec spec;
    spec.label = "demo";
    spec.stages.push_back(stage_from_values(2, Rational(1), rationals({{0, 1}, {1, 1}})));
    spec.stages.push_back(stage_from_values(3, Rational(1, 4), rationals({{0, 1}, {1, 4}})));

    TruncatedSum one = truncated_sum(spec, 1);
    CHECK(one.points == rationals({{0, 1}, {1, 1}}));
    TruncatedSum two = truncated_sum(spec, 2);
    CHECK(two.points == rationals({{0, 1}, {1, 4}, {1, 1}, {5, 4}}));

    CHECK_THROWS_AS(truncated_sum(spec, 0), ValidationError);
    CHECK_THROWS_AS(truncated_sum(spec, 3), ValidationError);
}

TEST_CASE("vertex sums: nesting keeps T collision-free, A collides") {
    VertexStages vs = vertex_stages(1, Rational(1), 3);
    TruncatedSum t_sum = truncated_sum(vs.T, 3);
    CHECK(static_cast<std::int64_t>(t_sum.points.size()) == 3 * 8 * 15);
    TruncatedSum a_sum = truncated_sum(vs.A, 3);
    CHECK(a_sum.points.size() == 1147);  // strictly below 7 * 15 * 23 = 2415
    CHECK_THROWS_AS(truncated_sum(vs.T, 3, 100), BudgetError);
}

TEST_CASE("box count over half-open cells") {
    auto pts = rationals({{0, 1}, {1, 2}, {1, 1}});
    CHECK(box_count(pts, Rational(1, 2)) == 3);
    CHECK(box_count(pts, Rational(2)) == 1);
    auto lone = rationals({{7, 3}});
    CHECK(box_count(lone, Rational(1, 5)) == 1);
    auto neg = rationals({{-1, 2}, {0, 1}});
    CHECK(box_count(neg, Rational(1, 2)) == 2);  // cells -1 and 0
}

TEST_CASE("box counts of the depth-3 sums at the stage separations") {
    VertexStages vs = vertex_stages(1, Rational(1), 3);
    auto scales = rationals({{1, 4}, {1, 36}, {1, 576}});
    TruncatedSum t_sum = truncated_sum(vs.T, 3);
    TruncatedSum a_sum = truncated_sum(vs.A, 3);
    std::vector<std::int64_t> t_counts{3, 24, 360}, a_counts{12, 100, 1147};
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(box_count(t_sum.points, scales[j]) == t_counts[j]);
        CHECK(box_count(a_sum.points, scales[j]) == a_counts[j]);
    }
}

TEST_CASE("dimension estimates") {
    VertexStages vs = vertex_stages(1, Rational(1), 3);
    auto scales = rationals({{1, 4}, {1, 36}, {1, 576}});
    DimensionEstimate t_est = dimension_estimate(truncated_sum(vs.T, 3).points, scales);
    CHECK(t_est.slope == doctest::Approx(0.963889).epsilon(1e-5));
    REQUIRE(t_est.rows.size() == 3);
    CHECK(t_est.rows[2].count == 360);
    CHECK(t_est.rows[0].ratio ==
          doctest::Approx(0.792481).epsilon(1e-5));  // log 3 / log 4

    DimensionEstimate a_est = dimension_estimate(truncated_sum(vs.A, 3).points, scales);
    CHECK(a_est.slope == doctest::Approx(0.915928).epsilon(1e-5));

    // A uniform dyadic grid has slope exactly 1.
    std::vector<Rational> grid;
    for (int v = 0; v < 64; ++v) grid.emplace_back(v, 64);
    auto dyadic = rationals({{1, 2}, {1, 4}, {1, 8}, {1, 16}, {1, 64}});
    CHECK(dimension_estimate(grid, dyadic).slope == doctest::Approx(1.0).epsilon(1e-9));

    // A single point has slope 0 and all per-scale ratios 0.
    auto lone = rationals({{1, 3}});
    DimensionEstimate flat = dimension_estimate(lone, dyadic);
    CHECK(flat.slope == doctest::Approx(0.0));
    for (const auto& row : flat.rows) CHECK(row.ratio == doctest::Approx(0.0));

    CHECK_THROWS_AS(dimension_estimate(grid, rationals({{1, 2}})), ValidationError);
    CHECK_THROWS_AS(dimension_estimate(grid, rationals({{1, 4}, {1, 2}})), ValidationError);
}

TEST_CASE("per-stage density ratios") {
    VertexStages vs = vertex_stages(1, Rational(1), 3);
    std::vector<double> ratios = density_ratio_table(vs.T);
    REQUIRE(ratios.size() == 3);
    CHECK(ratios[0] == doctest::Approx(0.792481).epsilon(1e-5));
    CHECK(ratios[1] == doctest::Approx(0.886853).epsilon(1e-5));
    CHECK(ratios[2] == doctest::Approx(0.926055).epsilon(1e-5));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(vertex_stages(0, Rational(1), 2), ValidationError);
    CHECK_THROWS_AS(vertex_stages(1, Rational(1), 1), ValidationError);
    CHECK_THROWS_AS(vertex_stages(1, Rational(0), 2), ValidationError);
    CHECK_THROWS_AS(vertex_stages(1, Rational(3, 2), 2), ValidationError);
    // t = 3/4 makes the decay exponent 8/3, which is not an integer.
    CHECK_THROWS_AS(vertex_stages(1, Rational(3, 4), 2), ValidationError);
    // t = 2/3 gives exponent 3 and is accepted.
    VertexStages ok = vertex_stages(1, Rational(2, 3), 2);
    CHECK(ok.T.stages.size() == 2);
    CHECK(ok.T.stages[0].scale == Rational(1, 4));  // beta_2 = 1 regardless of e
}

TEST_CASE("higher ambient dimension changes the cell counts") {
    // n = 2: i^(2n) = i^4 cells per stage, T_2 has 15 members.
    VertexStages vs = vertex_stages(2, Rational(1), 2);
    CHECK(vs.T.stages[0].ell == 15);
    CHECK(vs.T.stages[0].scale == Rational(1, 16));
    CHECK(vs.A.stages[0].ell == 55);  // digit-set size for i = 2, n = 2
}

TEST_CASE("first-row ratio definition when a scale hits 1") {
    // scale = 1 gives -log(scale) = 0; the row ratio is reported as 0 and the
    // fit still uses the point (0, log count).
    std::vector<Rational> grid;
    for (int v = 0; v < 4; ++v) grid.emplace_back(v, 4);
    auto scales = rationals({{1, 1}, {1, 4}});
    DimensionEstimate est = dimension_estimate(grid, scales);
    CHECK(est.rows[0].ratio == doctest::Approx(0.0));
    CHECK(est.rows[0].count == 1);
    CHECK(est.rows[1].count == 4);
    CHECK(est.slope == doctest::Approx(1.0).epsilon(1e-9));
}
