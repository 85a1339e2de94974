#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "skeletal/point_set.hpp"

namespace skeletal {

// C(n, k) clamped at `cap` (returns cap when the true value is >= cap);
// never overflows internally.
Coord binom_capped(Coord n, Coord k, Coord cap);

// Exact C(n, k); throws OverflowError if it does not fit a Coord.
Coord binom_exact(Coord n, Coord k);

// Greedy cascade (combinatorial) representation of m at arity b:
//   m = C(a_1, b) + C(a_2, b-1) + ... with a_1 > a_2 > ... and a_t >= arity_t.
// Unique, always terminates.
struct CascadeTerm {
    Coord a;
    int arity;
};
std::vector<CascadeTerm> cascade_representation(Coord m, int b);

// Kruskal–Katona: any family of m b-sets has c-fold lower shadow of size at
// least sum_t C(a_t, arity_t - c), with C(x, 0) = 1 and C(x, neg) = 0.
Coord kk_shadow_bound(Coord m, int b, int c);

// Lovász's relaxation: solve C(x, b) = m over real x >= b-1 and bound the
// shadow by C(x, b-c). Always <= the Kruskal–Katona bound.
double lovasz_shadow_bound(Coord m, int b, int c);

// A finite family of b-element subsets of the positive integers. Each member
// is a strictly increasing row; rows are kept in canonical sorted order.
// Text format: one member per line as space-separated increasing integers,
// '#' comments allowed.
struct SetFamily {
    PointSet members;
    int arity() const { return members.dim(); }
    std::size_t size() const { return members.size(); }
};

SetFamily make_set_family(int arity, std::vector<Coord> flat);
SetFamily parse_set_family(std::string_view text);
SetFamily read_set_family(const std::filesystem::path& path);
void write_set_family(std::ostream& out, const SetFamily& family);
void write_set_family(const std::filesystem::path& path, const SetFamily& family);

// All (b-c)-subsets of members of `family` (the c-fold lower shadow); 0 <= c < b.
SetFamily exact_shadow(const SetFamily& family, int c);

// First m b-sets of {1, 2, ...} in colexicographic order; these families
// attain the Kruskal–Katona bound exactly.
SetFamily colex_segment(Coord m, int b, std::int64_t cap = 10'000'000);

}  // namespace skeletal
