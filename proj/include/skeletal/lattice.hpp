#pragma once

#include <optional>
#include <span>
#include <vector>

#include "skeletal/point_set.hpp"

namespace skeletal {

// Closed axis-aligned cube [c-r, c+r]^n around `center`; its k-skeleton is the
// set of lattice points with at most k coordinates strictly between the faces,
// i.e. at least n-k coordinates at exactly c_d ± r. k = 0 gives the 2^n
// vertices, k = n the full cube.

// |k-skeleton| = sum_{e=0}^{k} C(n,e) * 2^(n-e) * (2r-1)^e  (e = # interior coords).
Coord skeleton_count(int n, Coord r, int k);

PointSet skeleton_points(std::span<const Coord> center, Coord r, int k);

// The 2n points center ± r*e_d (an l_1-sphere / orthoplex vertex set).
PointSet orthoplex_points(std::span<const Coord> center, Coord r);

// Is the whole k-skeleton of the radius-r cube at x contained in B?
bool skeleton_contained(const PointIndex& B, std::span<const Coord> x, Coord r, int k);

bool orthoplex_contained(const PointIndex& B, std::span<const Coord> y, Coord r);

// Smallest r >= 1 whose k-skeleton at x lies inside B, if any. Complete: any
// skeleton contains the two diagonal vertices x ± r*(1,...,1), so r is capped
// by x's distance to B's bounding box and the scan range is finite.
std::optional<Coord> covering_radius(const PointIndex& B, std::span<const Coord> x, int k);

struct CoverReport {
    bool satisfied = false;
    // Per point of S (canonical order): witness radius, or 0 if none exists.
    std::vector<Coord> radii;
    std::vector<std::size_t> failure_indices;
};

// Every x in S must have some r >= 1 with the k-skeleton at x inside B.
CoverReport verify_cover(const PointSet& B, const PointSet& S, int k);

// Every x in S (dim n) must have some r >= 1 such that for every l-subset I of
// the coordinates and every sign vector s in {-1,+1}^l, x|_I + r*s lies in A
// (dim l). This is the "no l-dimensional corner missing" condition.
CoverReport verify_nl_condition(const PointSet& A, const PointSet& S, int l);

// Every y in S must have some r >= 1 with all 2n points y ± r*e_d inside B.
CoverReport verify_orthoplex_cover(const PointSet& B, const PointSet& S);

}  // namespace skeletal
