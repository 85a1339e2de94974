#include "skeletal/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "skeletal/parallel.hpp"

namespace skeletal {

namespace {

// Saturating product on non-negative values; anything that would leave the
// Coord range clamps to max. Used only for budget estimates, where "huge" is
// as informative as the exact value.
Coord sat_mul(Coord a, Coord b) {
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<Coord>::max();
    return r;
}

Coord sat_pow(Coord base, int exp) {
    Coord r = 1;
    for (int e = 0; e < exp; ++e) r = sat_mul(r, base);
    return r;
}

void check_budget(const char* what, Coord estimated, std::int64_t cap) {
    if (estimated > cap) {
        throw BudgetError(std::string(what) + ": estimated " + std::to_string(estimated) +
                              " points exceeds cap " + std::to_string(cap),
                          estimated, cap);
    }
}

// First p points of [1, m]^n in lexicographic order: index idx maps to the
// base-m digit string of idx (most significant digit first), shifted by +1.
std::vector<Coord> lex_prefix_flat(int n, Coord m, Coord p) {
    std::vector<Coord> flat(static_cast<std::size_t>(p) * n);
    parallel_for(static_cast<std::size_t>(p), [&](std::size_t begin, std::size_t end) {
        for (std::size_t row = begin; row < end; ++row) {
            Coord rem = static_cast<Coord>(row);
            for (int d = n - 1; d >= 0; --d) {
                flat[row * n + d] = rem % m + 1;
                rem /= m;
            }
        }
    });
    return flat;
}

// Appends the full product  prod_d lists[d]  (each list ascending) to `out`
// in lexicographic order via an odometer.
void append_product(const std::vector<const std::vector<Coord>*>& lists,
                    std::vector<Coord>& out) {
    const int n = static_cast<int>(lists.size());
    std::vector<std::size_t> pos(n, 0);
    std::vector<Coord> current(n);
    for (int d = 0; d < n; ++d) {
        if (lists[d]->empty()) return;
        current[d] = (*lists[d])[0];
    }
    for (;;) {
        out.insert(out.end(), current.begin(), current.end());
        int d = n - 1;
        while (d >= 0) {
            if (++pos[d] < lists[d]->size()) {
                current[d] = (*lists[d])[pos[d]];
                break;
            }
            pos[d] = 0;
            current[d] = (*lists[d])[0];
            --d;
        }
        if (d < 0) return;
    }
}

void validate_skeleton_params(int n, int k) {
    if (n < 1) throw ValidationError("skeleton_construction: n must be >= 1");
    if (k < 0 || k >= n) throw ValidationError("skeleton_construction: k must be in [0, n-1]");
}

// Exact integer matrix inverse of M up to a scalar: returns (G, scale) with
// M * G = scale * I, scale > 0, via fraction-free Gauss-Jordan elimination.
// Matrices here are tiny (n x n sign matrices), so simplicity wins.
std::pair<std::vector<std::vector<Coord>>, Coord> scaled_inverse(
    const std::vector<std::vector<Coord>>& M) {
    const int n = static_cast<int>(M.size());
    // Work on [A | I] with exact rational entries encoded as num/den pairs.
    struct Frac {
        Coord num = 0, den = 1;
        void normalize() {
            if (den < 0) {
                num = -num;
                den = -den;
            }
            Coord g = std::gcd(num < 0 ? -num : num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
            if (num == 0) den = 1;
        }
    };
    auto add = [](Frac a, Frac b) {
        Frac r{checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den)};
        r.normalize();
        return r;
    };
    auto mul = [](Frac a, Frac b) {
        Frac r{checked_mul(a.num, b.num), checked_mul(a.den, b.den)};
        r.normalize();
        return r;
    };
    auto neg = [](Frac a) { return Frac{-a.num, a.den}; };
    auto inv = [](Frac a) {
        if (a.num == 0) throw ValidationError("sign_basis: singular matrix");
        Frac r{a.den, a.num};
        r.normalize();
        return r;
    };

    std::vector<std::vector<Frac>> A(n, std::vector<Frac>(2 * n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) A[r][c] = Frac{M[r][c], 1};
        A[r][n + r] = Frac{1, 1};
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (A[r][col].num != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw ValidationError("sign_basis: singular matrix");
        std::swap(A[col], A[pivot]);
        Frac scale = inv(A[col][col]);
        for (int c = 0; c < 2 * n; ++c) A[col][c] = mul(A[col][c], scale);
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col].num == 0) continue;
            Frac factor = neg(A[r][col]);
            for (int c = 0; c < 2 * n; ++c) A[r][c] = add(A[r][c], mul(factor, A[col][c]));
        }
    }
    Coord lcm = 1;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) lcm = std::lcm(lcm, A[r][n + c].den);
    std::vector<std::vector<Coord>> G(n, std::vector<Coord>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            G[r][c] = checked_mul(A[r][n + c].num, lcm / A[r][n + c].den);
    return {G, lcm};
}

}  // namespace

Coord grid_limit(int n, int i) {
    if (n < 1) throw ValidationError("grid_limit: n must be >= 1");
    if (i < 2) throw ValidationError("grid_limit: base must be >= 2");
    return checked_add(ipow_checked(i, 2 * n), -1);
}

int choose_scale_base(int n, Coord p) {
    if (n < 1) throw ValidationError("choose_scale_base: n must be >= 1");
    if (p < 1) throw ValidationError("choose_scale_base: p must be >= 1");
    for (int i = 2;; ++i) {
        const Coord m = sat_pow(i, 2 * n) - 1;
        if (sat_pow(m, n) >= p) return i;
    }
}

Coord skeleton_union_size(int n, int k, int i) {
    validate_skeleton_params(n, k);
    const Coord m = grid_limit(n, i);
    const DigitSet D = build_digit_set(i, n);
    const auto lo = std::lower_bound(D.members.begin(), D.members.end(), Coord{1});
    const auto hi = std::upper_bound(D.members.begin(), D.members.end(), m);
    const Coord both = hi - lo;                                  // |T and D|
    const Coord t_only = m - both;                               // |T \ D|
    const Coord d_only = static_cast<Coord>(D.members.size()) - both;  // |D \ T|

    // A point is in the union iff no coordinate is outside T u D and the
    // count t of T-only coordinates satisfies t <= k <= t + b, where b is the
    // count of coordinates in both. Sum multinomials over (b, t, u).
    std::vector<std::vector<Coord>> binom(n + 1, std::vector<Coord>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            binom[a][b] = checked_add(binom[a - 1][b - 1], b <= a - 1 ? binom[a - 1][b] : 0);
    }
    Coord total = 0;
    for (int t = 0; t <= k; ++t) {
        for (int b = std::max(0, k - t); b + t <= n; ++b) {
            const int u = n - t - b;
            Coord term = checked_mul(binom[n][t], binom[n - t][b]);
            term = checked_mul(term, ipow_checked(t_only, t));
            term = checked_mul(term, ipow_checked(both, b));
            term = checked_mul(term, ipow_checked(d_only, u));
            total = checked_add(total, term);
        }
    }
    return total;
}

ConstructionResult skeleton_construction(int n, int k, Coord p, std::int64_t point_cap) {
    validate_skeleton_params(n, k);
    if (p < 1) throw ValidationError("skeleton_construction: p must be >= 1");
    const int i = choose_scale_base(n, p);
    const Coord m = grid_limit(n, i);
    check_budget("skeleton_construction: target set", p, point_cap);

    const DigitSet D = build_digit_set(i, n);
    const Coord d_size = static_cast<Coord>(D.members.size());
    const Coord per_product = sat_mul(sat_pow(m, k), sat_pow(d_size, n - k));
    // The union contains each full product, so one product already over cap
    // means the union is too; for the enumeration budget, count every product.
    Coord products = 1;
    for (int a = 0; a < k; ++a) products = products * (n - a) / (a + 1);
    check_budget("skeleton_construction: cover set", sat_mul(per_product, products), point_cap);

    ConstructionResult res{PointSet(n), PointSet(n), n, k, p, i, 1};
    res.S = PointSet::from_flat_sorted(n, lex_prefix_flat(n, m, p));

    if (k == 0) {
        std::vector<Coord> flat;
        flat.reserve(static_cast<std::size_t>(per_product) * n);
        std::vector<const std::vector<Coord>*> lists(n, &D.members);
        append_product(lists, flat);
        res.B = PointSet::from_flat_sorted(n, std::move(flat));
        return res;
    }

    std::vector<Coord> grid_axis(static_cast<std::size_t>(m));
    std::iota(grid_axis.begin(), grid_axis.end(), Coord{1});
    std::vector<Coord> flat;
    flat.reserve(static_cast<std::size_t>(sat_mul(per_product, products)) * n);
    // Iterate the k-subsets J of {0..n-1}; coordinates in J range over the
    // grid axis, the rest over the digit set.
    std::vector<int> J(k);
    std::iota(J.begin(), J.end(), 0);
    for (;;) {
        std::vector<const std::vector<Coord>*> lists(n, &D.members);
        for (int idx : J) lists[idx] = &grid_axis;
        append_product(lists, flat);
        int t = k - 1;
        while (t >= 0 && J[t] == n - k + t) --t;
        if (t < 0) break;
        ++J[t];
        for (int s = t + 1; s < k; ++s) J[s] = J[s - 1] + 1;
    }
    res.B = PointSet::from_flat(n, std::move(flat));
    return res;
}

ConstructionResult nl_construction(int n, int l, Coord p, std::int64_t point_cap) {
    if (n < 1) throw ValidationError("nl_construction: n must be >= 1");
    if (l < 1 || l > n) throw ValidationError("nl_construction: l must be in [1, n]");
    if (p < 1) throw ValidationError("nl_construction: p must be >= 1");
    const int i = choose_scale_base(n, p);
    const Coord m = grid_limit(n, i);
    check_budget("nl_construction: target set", p, point_cap);

    const DigitSet D = build_digit_set(i, n);
    const Coord d_size = static_cast<Coord>(D.members.size());
    check_budget("nl_construction: cover set", sat_pow(d_size, l), point_cap);

    ConstructionResult res{PointSet(l), PointSet(n), n, l, p, i, 1};
    res.S = PointSet::from_flat_sorted(n, lex_prefix_flat(n, m, p));

    std::vector<Coord> flat;
    flat.reserve(static_cast<std::size_t>(sat_pow(d_size, l)) * l);
    std::vector<const std::vector<Coord>*> lists(l, &D.members);
    append_product(lists, flat);
    res.B = PointSet::from_flat_sorted(l, std::move(flat));
    return res;
}

SignBasis sign_basis(int n) {
    if (n < 1) throw ValidationError("sign_basis: n must be >= 1");
    SignBasis basis;
    basis.n = n;
    basis.vectors.assign(n, std::vector<Coord>(n, 1));
    for (int j = 1; j < n; ++j) basis.vectors[j][j] = -1;
    auto [G, scale] = scaled_inverse(basis.vectors);
    basis.inverse_scaled = std::move(G);
    basis.scale = scale;
    return basis;
}

ConstructionResult orthoplex_construction(int n, Coord p, std::int64_t point_cap) {
    if (n < 1) throw ValidationError("orthoplex_construction: n must be >= 1");
    if (p < 1) throw ValidationError("orthoplex_construction: p must be >= 1");
    const int i = choose_scale_base(n, p);
    const Coord m = grid_limit(n, i);
    check_budget("orthoplex_construction: target set", p, point_cap);

    const DigitSet D = build_digit_set(i, n);
    const Coord d_size = static_cast<Coord>(D.members.size());
    check_budget("orthoplex_construction: cover set", sat_pow(d_size, n), point_cap);

    const SignBasis basis = sign_basis(n);
    auto transform = [&](std::span<const Coord> x, Coord* out) {
        for (int r = 0; r < n; ++r) {
            Coord acc = 0;
            for (int c = 0; c < n; ++c)
                acc = checked_add(acc, checked_mul(basis.inverse_scaled[r][c], x[c]));
            out[r] = acc;
        }
    };

    ConstructionResult res{PointSet(n), PointSet(n), n, -1, p, i, basis.scale};

    std::vector<Coord> raw = lex_prefix_flat(n, m, p);
    std::vector<Coord> s_flat(raw.size());
    for (std::size_t row = 0; row < static_cast<std::size_t>(p); ++row)
        transform({raw.data() + row * n, static_cast<std::size_t>(n)}, s_flat.data() + row * n);
    res.S = PointSet::from_flat(n, std::move(s_flat));

    std::vector<Coord> b_raw;
    b_raw.reserve(static_cast<std::size_t>(sat_pow(d_size, n)) * n);
    std::vector<const std::vector<Coord>*> lists(n, &D.members);
    append_product(lists, b_raw);
    std::vector<Coord> b_flat(b_raw.size());
    for (std::size_t row = 0; row * n < b_raw.size(); ++row)
        transform({b_raw.data() + row * n, static_cast<std::size_t>(n)}, b_flat.data() + row * n);
    res.B = PointSet::from_flat(n, std::move(b_flat));
    return res;
}

}  // namespace skeletal
