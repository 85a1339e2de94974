#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skeletal/cantor.hpp"
#include "skeletal/rational.hpp"

namespace skeletal {

// One point of a scaling study: target-set and cover-set sizes at base i.
// Sizes come from closed forms (digit-set cardinalities, the product-union
// count, the full-grid count), so no point set is materialized.
struct ScalingRow {
    int i = 0;
    Coord size_s = 0;
    Coord size_b = 0;
};

std::vector<ScalingRow> skeleton_scaling_rows(int n, int k, int i_min, int i_max);
std::vector<ScalingRow> orthoplex_scaling_rows(int n, int i_min, int i_max);

// Least-squares slope of log(size_b) against log(size_s).
double scaling_slope(std::span<const ScalingRow> rows);

std::string scaling_csv(std::span<const ScalingRow> rows);  // i,size_s,size_b

// Interval covering of the multiscale set A_N at the scale ladder
//   R_j = 3^(2n+1) * (p!)^(2n) / (j!)^(2n),  j = 1..p,
// against the envelope  count <= constant * (N/R_j)^((2n-1)/(2n)) * N^slack.
struct MultiscaleRow {
    int p = 0;
    int j = 0;
    Coord modulus = 0;  // N
    Coord R = 0;
    std::int64_t count = 0;
    double bound = 0.0;
    bool within = false;
};

std::vector<MultiscaleRow> multiscale_cover_rows(int n, std::span<const int> ps,
                                                 double constant = 4.0, double slack = 0.1);

std::string multiscale_csv(std::span<const MultiscaleRow> rows);  // p,j,modulus,R,count,bound,within

// Exponent summary rows for n = 1..n_max, k = 0..n-1.
struct ExponentRow {
    int n = 0;
    int k = 0;
    Rational beta;
    int converged_at = -1;
};

std::vector<ExponentRow> exponent_rows(int n_max,
                                       const Rational& tol = Rational(1, 1000000000));

std::string exponent_csv(std::span<const ExponentRow> rows);  // n,k,beta_num,beta_den,converged_at

// scale_num,scale_den,count rows of a box-count ladder.
std::string box_count_csv(std::span<const ScaleRow> rows);

}  // namespace skeletal
