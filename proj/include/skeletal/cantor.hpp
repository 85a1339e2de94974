#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skeletal/rational.hpp"

namespace skeletal {

// One stage Q_i of an iterated sum construction: a finite set of exact
// rationals plus metadata computed from the set itself (never trusted from
// the recipe that produced it).
struct Stage {
    int index = 0;        // i
    Rational scale;       // cell width the stage was generated from
    std::vector<Rational> values;  // ascending, distinct
    Rational diameter;    // max - min
    Rational min_gap;     // smallest gap between consecutive values; 0 if |Q|=1
    std::int64_t ell = 0;  // |values|
};

struct StageSpec {
    std::string label;
    std::vector<Stage> stages;
    // There is a single c < 1 with diameter_j <= c * diameter_{j-1} for every
    // consecutive pair (equivalently: every ratio is < 1).
    bool geometric_decay = false;
    // diameter_j + min_gap_j <= min_gap_{j-1} for every consecutive pair:
    // a whole later stage (plus its own separation) fits between two points
    // of the previous one, so sums never collide.
    bool nesting = false;
};

// The two stage families of the vertex construction, for i = 2..depth+1:
//   scale_i = beta_i / i^(2n) with beta_i = ((i-1)!)^(-e), e = 2n^2/t;
//   T_i = scale_i * {1, ..., i^(2n)-1},  A_i = scale_i * D_{i,n}.
// t must make e a positive integer so every value is an exact rational.
struct VertexStages {
    StageSpec A;
    StageSpec T;
};
VertexStages vertex_stages(int n, const Rational& t, int depth);

struct TruncatedSum {
    int depth = 0;
    std::vector<Rational> points;  // ascending, distinct
};

// Exact sumset of the first `depth` stages (1 <= depth <= #stages).
TruncatedSum truncated_sum(const StageSpec& spec, int depth,
                           std::int64_t size_cap = 10'000'000);

// Number of distinct indices floor(p / scale): half-open boxes
// [m*scale, (m+1)*scale) anchored at 0.
std::int64_t box_count(std::span<const Rational> points, const Rational& scale);

struct ScaleRow {
    Rational scale;
    std::int64_t count = 0;
    double ratio = 0.0;  // log(count) / (-log(scale)); 0 when undefined
};

struct DimensionEstimate {
    double slope = 0.0;  // least-squares slope of log(count) vs -log(scale)
    std::vector<ScaleRow> rows;
};

// Scales must be positive and strictly decreasing, at least two of them.
DimensionEstimate dimension_estimate(std::span<const Rational> points,
                                     std::span<const Rational> scales);

// Per stage j: log(ell_1 * ... * ell_j) / (-log(min_gap_j)), the finite-depth
// surrogate of the box-dimension upper bound.
std::vector<double> density_ratio_table(const StageSpec& spec);

}  // namespace skeletal
