#pragma once

#include <span>
#include <vector>

#include "skeletal/common.hpp"

namespace skeletal {

// D_{i,n}: all values sum_{j=0}^{2n-1} a_j * i^j over digit strings with
// a_j in [2(1-i), 2(i-1)] and at least one zero digit. Values are
// deduplicated; distinct strings frequently collide on the same value.
struct DigitSet {
    int base = 0;  // i
    int n = 0;
    std::vector<Coord> members;  // ascending, distinct
    bool contains(Coord v) const;
};

// i >= 1 (i = 1 yields {0}, the degenerate stage used by the multiscale set);
// string_cap bounds the (4i-3)^{2n} digit strings that must be enumerated.
DigitSet build_digit_set(int i, int n, std::int64_t string_cap = 500'000'000);

// Deterministic radius witness for x_1..x_n in [1, i^{2n}-1]: each input is
// matched to one pair of digit positions (2m, 2m+1), pinning the first
// slot/input pair (slot-major scan) that contributes a nonzero digit, and
//   r = | sum_m d(x_{pi(m)}, 2m) * i^{2m}  -  sum_m d(x_{pi(m)}, 2m+1) * i^{2m+1} |.
// Guarantees r >= 1 and x_j ± r in D_{i,n} for every j (the combination
// cancels each input's digits at its own slot, leaving a zero digit there).
Coord find_radius(std::span<const Coord> xs, int i);

// Same construction but inputs may be 0 (needed stagewise by the multiscale
// set); returns 0 iff every input is 0, in which case x_j ± 0 = 0 is in
// D_{i,n} trivially, so the guarantee is preserved.
Coord find_radius_allow_zero(std::span<const Coord> xs, int i);

// A_N for N = (p!)^{2n}: the sumset  sum_{i=2}^{p} c_i * D_{i,n}  with stage
// scales c_i = (p!/i!)^{2n}. Mixed-radix digits with place values c_i and
// digit ranges [0, i^{2n}-1] represent [0, N-1] exactly.
struct MultiScaleSet {
    int p = 0, n = 0;
    Coord modulus = 0;               // N
    std::vector<int> stage_base;     // i = 2..p
    std::vector<Coord> stage_scale;  // c_i, aligned with stage_base
    std::vector<DigitSet> stages;    // D_{i,n}, aligned with stage_base
    std::vector<Coord> members;      // ascending, distinct
    bool contains(Coord v) const;
};

Coord multiscale_modulus(int p, int n);  // N = (p!)^{2n}

// cap bounds the number of stage combinations that must be enumerated.
MultiScaleSet build_multiscale_set(int p, int n, std::int64_t cap = 10'000'000);

// Stagewise witness for x_1..x_n in [1, N-1]: r = sum_i c_i * rho_i where
// rho_i is the stage radius of the i-th mixed-radix digits. Guarantees
// r >= 1 and x_j ± r in A_N.
Coord find_radius_multiscale(std::span<const Coord> xs, int p, int n);

// Minimum number of closed real intervals of length R (i.e. [a, a+R]) needed
// to cover the given values; greedy left-to-right sweep is optimal in 1D.
std::int64_t interval_cover_count(std::span<const Coord> values, Coord R);

}  // namespace skeletal
