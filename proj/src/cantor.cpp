#include "skeletal/cantor.hpp"

#include <algorithm>
#include <cmath>

#include "skeletal/digits.hpp"
#include "skeletal/fit.hpp"

namespace skeletal {

namespace {

Stage make_stage(int index, const Rational& scale, std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Stage st;
    st.index = index;
    st.scale = scale;
    st.diameter = values.size() > 1 ? Rational(values.back() - values.front()) : Rational(0);
    st.min_gap = 0;
    for (std::size_t j = 1; j < values.size(); ++j) {
        const Rational gap = values[j] - values[j - 1];
        if (j == 1 || gap < st.min_gap) st.min_gap = gap;
    }
    st.ell = static_cast<std::int64_t>(values.size());
    st.values = std::move(values);
    return st;
}

void compute_flags(StageSpec& spec) {
    spec.geometric_decay = spec.stages.size() >= 2;
    spec.nesting = spec.stages.size() >= 2;
    for (std::size_t j = 1; j < spec.stages.size(); ++j) {
        const Stage& prev = spec.stages[j - 1];
        const Stage& cur = spec.stages[j];
        if (!(cur.diameter < prev.diameter)) spec.geometric_decay = false;
        if (!(cur.diameter + cur.min_gap <= prev.min_gap)) spec.nesting = false;
    }
}

}  // namespace

VertexStages vertex_stages(int n, const Rational& t, int depth) {
    if (n < 1) throw ValidationError("vertex_stages: n must be >= 1");
    if (depth < 2) throw ValidationError("vertex_stages: depth must be >= 2");
    if (!(t > 0) || t > 1) throw ValidationError("vertex_stages: t must lie in (0, 1]");
    const Rational e_rat = Rational(2 * n * n) / t;
    if (boost::multiprecision::denominator(e_rat) != 1)
        throw ValidationError("vertex_stages: 2n^2/t must be an integer for exact stages");
    const auto e = static_cast<unsigned>(boost::multiprecision::numerator(e_rat));

    VertexStages out;
    out.A.label = "A";
    out.T.label = "T";
    BigInt factorial = 1;  // (i-1)! as i advances
    for (int i = 2; i <= depth + 1; ++i) {
        factorial *= i - 1;
        const BigInt beta_den = boost::multiprecision::pow(factorial, e);
        const Coord cells = ipow_checked(i, 2 * n);  // i^(2n)
        const Rational scale = Rational(1, beta_den * cells);

        std::vector<Rational> t_values;
        t_values.reserve(static_cast<std::size_t>(cells - 1));
        for (Coord v = 1; v < cells; ++v) t_values.push_back(scale * v);
        out.T.stages.push_back(make_stage(i, scale, std::move(t_values)));

        const DigitSet D = build_digit_set(i, n);
        std::vector<Rational> a_values;
        a_values.reserve(D.members.size());
        for (Coord d : D.members) a_values.push_back(scale * d);
        out.A.stages.push_back(make_stage(i, scale, std::move(a_values)));
    }
    compute_flags(out.A);
    compute_flags(out.T);
    return out;
}

TruncatedSum truncated_sum(const StageSpec& spec, int depth, std::int64_t size_cap) {
    if (depth < 1) throw ValidationError("truncated_sum: depth must be >= 1");
    if (static_cast<std::size_t>(depth) > spec.stages.size())
        throw ValidationError("truncated_sum: fewer stages available than requested depth");
    std::vector<Rational> points = spec.stages[0].values;
    for (int j = 1; j < depth; ++j) {
        const auto& next = spec.stages[j].values;
        const std::int64_t projected =
            static_cast<std::int64_t>(points.size()) * static_cast<std::int64_t>(next.size());
        if (projected > size_cap)
            throw BudgetError("truncated_sum: sumset would exceed size cap", projected, size_cap);
        std::vector<Rational> sums;
        sums.reserve(static_cast<std::size_t>(projected));
        for (const Rational& a : points)
            for (const Rational& b : next) sums.push_back(a + b);
        std::sort(sums.begin(), sums.end());
        sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
        points = std::move(sums);
    }
    return {depth, std::move(points)};
}

std::int64_t box_count(std::span<const Rational> points, const Rational& scale) {
    if (points.empty()) throw ValidationError("box_count: empty point set");
    if (!(scale > 0)) throw ValidationError("box_count: scale must be positive");
    std::vector<BigInt> indices;
    indices.reserve(points.size());
    for (const Rational& p : points) indices.push_back(rational_floor(p / scale));
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return static_cast<std::int64_t>(indices.size());
}

DimensionEstimate dimension_estimate(std::span<const Rational> points,
                                     std::span<const Rational> scales) {
    if (scales.size() < 2) throw ValidationError("dimension_estimate: need at least two scales");
    for (std::size_t j = 0; j < scales.size(); ++j) {
        if (!(scales[j] > 0))
            throw ValidationError("dimension_estimate: scales must be positive");
        if (j > 0 && !(scales[j] < scales[j - 1]))
            throw ValidationError("dimension_estimate: scales must be strictly decreasing");
    }
    DimensionEstimate est;
    std::vector<double> xs, ys;
    for (const Rational& scale : scales) {
        const std::int64_t count = box_count(points, scale);
        const double x = -std::log(rational_to_double(scale));
        const double y = std::log(static_cast<double>(count));
        xs.push_back(x);
        ys.push_back(y);
        est.rows.push_back({scale, count, x != 0.0 ? y / x : 0.0});
    }
    est.slope = fit_line(xs, ys).slope;
    return est;
}

std::vector<double> density_ratio_table(const StageSpec& spec) {
    std::vector<double> ratios;
    double log_cells = 0.0;
    for (const Stage& st : spec.stages) {
        log_cells += std::log(static_cast<double>(st.ell));
        if (!(st.min_gap > 0))
            throw ValidationError("density_ratio_table: stage without positive separation");
        const double x = -std::log(rational_to_double(st.min_gap));
        ratios.push_back(x != 0.0 ? log_cells / x : 0.0);
    }
    return ratios;
}

}  // namespace skeletal
