#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "skeletal/point_set.hpp"

namespace skeletal {

enum class ShapeKind { Skeleton, Orthoplex };

// Minimal-cover search instance: choose a radius r(x) in [1, r_max] for every
// x in S so that the union of the shapes is as small as possible.
struct CoverInstance {
    PointSet S;
    ShapeKind shape = ShapeKind::Skeleton;
    int k = 0;  // skeleton parameter; ignored for orthoplex
    Coord r_max = 1;
};

struct OracleResult {
    Coord min_size = 0;
    std::vector<Coord> assignment;  // radius per point of S, canonical order
    std::int64_t nodes_explored = 0;
    // False when the node budget ran out: min_size is then only the best
    // value seen, not a proven minimum.
    bool complete = true;
};

// Exact minimum of |U_x shape(x, r(x))| by depth-first search with
// branch-and-bound (prune once the partial union already matches the best
// full union). Radii are tried in increasing order point by point, so the
// reported assignment is the lexicographically smallest optimal one.
OracleResult min_cover(const CoverInstance& instance, std::int64_t node_budget = 10'000'000);

struct SweepRow {
    std::size_t size_s = 0;
    Coord min_size = 0;
    Coord r_max = 0;
    std::int64_t nodes_explored = 0;
    bool complete = true;
};

// min_cover over a family, rows ordered by |S| (stable for equal sizes).
std::vector<SweepRow> min_cover_sweep(std::span<const CoverInstance> instances,
                                      std::int64_t node_budget = 10'000'000);

// The union the assignment generates; |replay| == min_size for a complete
// result, and it passes the matching cover verifier.
PointSet replay_assignment(const CoverInstance& instance, std::span<const Coord> assignment);

// Smallest integer L with (2^(n-1) * L)^(2n) >= s^(2n-1), i.e. the integer
// form of L >= s^((2n-1)/(2n)) / 2^(n-1); evaluated in exact arithmetic.
Coord cover_lower_bound(int n, std::size_t size_s);

}  // namespace skeletal
