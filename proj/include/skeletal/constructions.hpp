#pragma once

#include "skeletal/digits.hpp"
#include "skeletal/point_set.hpp"

namespace skeletal {

// Shared shape of every construction: a target set S of p points and a cover
// witness set B, plus the parameters that produced them.
struct ConstructionResult {
    PointSet B;
    PointSet S;
    int n = 0;
    int param = 0;  // k (skeleton), l (corner condition), -1 (orthoplex)
    Coord p = 0;
    int i = 0;      // interpolation base
    Coord scale = 1;  // lattice scale of the orthoplex image; 1 otherwise
};

// Largest grid coordinate for base i: m = i^{2n} - 1.
Coord grid_limit(int n, int i);

// Smallest i >= 2 whose grid [1, m]^n holds p points (p <= m^n).
int choose_scale_base(int n, Coord p);

// Exact size of the union  B = U_{|J|=k} prod_d (d in J ? [1,m] : D_{i,n})
// by inclusion–exclusion over the C(n,k) product sets; no materialization.
Coord skeleton_union_size(int n, int k, int i);

// S = first p lex points of [1, m]^n; B as above. For k = 0 every x in S
// has a 0-skeleton (vertex set) of some radius inside B: r = find_radius(x, i)
// puts every x_d +- r in D. For k >= 1 containment can fail at grid corners
// and edges: the vertex (1-r, ..., 1-r) of a cube centered at (1, ..., 1) has
// no coordinate inside [1, m], yet every product in the union demands k of
// them there. verify_cover reports the exact failing points.
ConstructionResult skeleton_construction(int n, int k, Coord p,
                                         std::int64_t point_cap = 10'000'000);

// S as above (dim n); B = D_{i,n}^l in Z^l: every l-subset of coordinates of
// every x in S admits a common corner radius.
ConstructionResult nl_construction(int n, int l, Coord p,
                                   std::int64_t point_cap = 10'000'000);

// Rows sigma^(1) = (1,...,1) and sigma^(j) = all ones with -1 in slot j
// (j = 2..n), plus an exact integer inverse: M * G = scale * I.
struct SignBasis {
    int n = 0;
    std::vector<std::vector<Coord>> vectors;
    std::vector<std::vector<Coord>> inverse_scaled;  // G
    Coord scale = 1;
};
SignBasis sign_basis(int n);

// Images S = G(first p lex of [1,m]^n), B = G(D_{i,n}^n): every y in S has
// all 2n points y ± r'*e_d in B for r' = scale * find_radius(G^{-1} y, i).
ConstructionResult orthoplex_construction(int n, Coord p,
                                          std::int64_t point_cap = 10'000'000);

}  // namespace skeletal
