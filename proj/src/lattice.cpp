#include "skeletal/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "skeletal/parallel.hpp"

namespace skeletal {

namespace {

Coord small_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Coord r = 1;
    for (int t = 1; t <= k; ++t) r = checked_mul(r, n - k + t) / t;
    return r;
}

// Iterate over all points that have exactly the dims in `interior` strictly
// inside (c_d - r, c_d + r) and every other dim at c_d ± r; returns false as
// soon as one point is missing from B.
bool check_exact_pattern(const PointIndex& B, std::span<const Coord> x, Coord r,
                         std::uint32_t interior, std::vector<Coord>& p, int d) {
    const int n = static_cast<int>(x.size());
    if (d == n) return B.contains(p);
    if (interior & (1u << d)) {
        for (Coord v = x[d] - r + 1; v <= x[d] + r - 1; ++v) {
            p[d] = v;
            if (!check_exact_pattern(B, x, r, interior, p, d + 1)) return false;
        }
        return true;
    }
    p[d] = x[d] - r;
    if (!check_exact_pattern(B, x, r, interior, p, d + 1)) return false;
    p[d] = x[d] + r;
    return check_exact_pattern(B, x, r, interior, p, d + 1);
}

void emit_exact_pattern(std::span<const Coord> x, Coord r, std::uint32_t interior,
                        std::vector<Coord>& p, int d, std::vector<Coord>& out) {
    const int n = static_cast<int>(x.size());
    if (d == n) {
        out.insert(out.end(), p.begin(), p.end());
        return;
    }
    if (interior & (1u << d)) {
        for (Coord v = x[d] - r + 1; v <= x[d] + r - 1; ++v) {
            p[d] = v;
            emit_exact_pattern(x, r, interior, p, d + 1, out);
        }
        return;
    }
    p[d] = x[d] - r;
    emit_exact_pattern(x, r, interior, p, d + 1, out);
    p[d] = x[d] + r;
    emit_exact_pattern(x, r, interior, p, d + 1, out);
}

// All bitmasks of [0,n) with popcount up to k, grouped by popcount ascending
// so cheap patterns (vertices) are probed first.
std::vector<std::uint32_t> interior_masks(int n, int k) {
    std::vector<std::uint32_t> masks;
    for (int e = 0; e <= k; ++e)
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (std::popcount(m) == e) masks.push_back(m);
    return masks;
}

Coord box_radius_bound(const PointSet& B, std::span<const Coord> x) {
    if (B.empty()) return 0;
    Coord bound = INT64_MAX;
    for (int d = 0; d < B.dim(); ++d) {
        auto [lo, hi] = *B.bounds(d);
        bound = std::min(bound, std::min(x[d] - lo, hi - x[d]));
    }
    return std::max<Coord>(bound, 0);
}

std::vector<std::uint32_t> subset_masks(int n, int l) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == l) masks.push_back(m);
    return masks;
}

CoverReport run_pointwise(const PointSet& S,
                          const std::function<std::optional<Coord>(std::span<const Coord>)>& radius_of) {
    CoverReport report;
    report.radii.assign(S.size(), 0);
    parallel_for(S.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            auto r = radius_of(S.row(idx));
            report.radii[idx] = r ? *r : 0;
        }
    });
    for (std::size_t idx = 0; idx < S.size(); ++idx)
        if (report.radii[idx] == 0) report.failure_indices.push_back(idx);
    report.satisfied = report.failure_indices.empty();
    return report;
}

}  // namespace

Coord skeleton_count(int n, Coord r, int k) {
    if (n < 1) throw ValidationError("skeleton_count: dimension must be >= 1");
    if (r < 1) throw ValidationError("skeleton_count: radius must be >= 1");
    if (k < 0 || k > n) throw ValidationError("skeleton_count: need 0 <= k <= n");
    Coord total = 0;
    for (int e = 0; e <= k; ++e) {
        Coord term = small_binom(n, e);
        term = checked_mul(term, ipow_checked(2, n - e));
        term = checked_mul(term, ipow_checked(2 * r - 1, e));
        total = checked_add(total, term);
    }
    return total;
}

PointSet skeleton_points(std::span<const Coord> center, Coord r, int k) {
    const int n = static_cast<int>(center.size());
    Coord count = skeleton_count(n, r, k);  // validates; also sizes the buffer
    std::vector<Coord> flat;
    flat.reserve(static_cast<std::size_t>(count) * n);
    std::vector<Coord> p(n);
    for (std::uint32_t mask : interior_masks(n, k))
        emit_exact_pattern(center, r, mask, p, 0, flat);
    return PointSet::from_flat(n, std::move(flat));
}

PointSet orthoplex_points(std::span<const Coord> center, Coord r) {
    const int n = static_cast<int>(center.size());
    if (n < 1) throw ValidationError("orthoplex_points: dimension must be >= 1");
    if (r < 1) throw ValidationError("orthoplex_points: radius must be >= 1");
    std::vector<Coord> flat;
    flat.reserve(static_cast<std::size_t>(2 * n) * n);
    for (int d = 0; d < n; ++d)
        for (Coord sign : {Coord{-1}, Coord{1}}) {
            for (int t = 0; t < n; ++t)
                flat.push_back(center[t] + (t == d ? sign * r : 0));
        }
    return PointSet::from_flat(n, std::move(flat));
}

bool skeleton_contained(const PointIndex& B, std::span<const Coord> x, Coord r, int k) {
    const int n = static_cast<int>(x.size());
    if (r < 1) throw ValidationError("skeleton_contained: radius must be >= 1");
    if (k < 0 || k > n) throw ValidationError("skeleton_contained: need 0 <= k <= n");
    std::vector<Coord> p(n);
    for (std::uint32_t mask : interior_masks(n, k))
        if (!check_exact_pattern(B, x, r, mask, p, 0)) return false;
    return true;
}

bool orthoplex_contained(const PointIndex& B, std::span<const Coord> y, Coord r) {
    const int n = static_cast<int>(y.size());
    if (r < 1) throw ValidationError("orthoplex_contained: radius must be >= 1");
    std::vector<Coord> p(y.begin(), y.end());
    for (int d = 0; d < n; ++d) {
        p[d] = y[d] - r;
        bool lo = B.contains(p);
        p[d] = y[d] + r;
        bool hi = B.contains(p);
        p[d] = y[d];
        if (!lo || !hi) return false;
    }
    return true;
}

std::optional<Coord> covering_radius(const PointIndex& B, std::span<const Coord> x, int k) {
    const int n = static_cast<int>(x.size());
    if (B.points().dim() != n)
        throw ValidationError("covering_radius: dimension mismatch");
    const Coord bound = box_radius_bound(B.points(), x);
    std::vector<Coord> p(n);
    const auto masks = interior_masks(n, k);
    for (Coord r = 1; r <= bound; ++r) {
        bool ok = true;
        for (std::uint32_t mask : masks)
            if (!check_exact_pattern(B, x, r, mask, p, 0)) {
                ok = false;
                break;
            }
        if (ok) return r;
    }
    return std::nullopt;
}

CoverReport verify_cover(const PointSet& B, const PointSet& S, int k) {
    if (B.dim() != S.dim()) throw ValidationError("verify_cover: dimension mismatch");
    if (k < 0 || k > S.dim()) throw ValidationError("verify_cover: need 0 <= k <= n");
    PointIndex index(B);
    return run_pointwise(S, [&](std::span<const Coord> x) { return covering_radius(index, x, k); });
}

CoverReport verify_nl_condition(const PointSet& A, const PointSet& S, int l) {
    const int n = S.dim();
    if (A.dim() != l) throw ValidationError("verify_nl_condition: A must have dimension l");
    if (l < 1 || l > n) throw ValidationError("verify_nl_condition: need 1 <= l <= n");
    if (n > 30) throw ValidationError("verify_nl_condition: dimension too large");
    PointIndex index(A);
    const auto masks = subset_masks(n, l);
    return run_pointwise(S, [&](std::span<const Coord> x) -> std::optional<Coord> {
        if (A.empty()) return std::nullopt;
        // For each l-subset I and slot t, x_{I_t} ± r must stay inside A's
        // t-th coordinate range, which bounds the scan.
        Coord bound = INT64_MAX;
        std::vector<std::vector<Coord>> projections;
        for (std::uint32_t mask : masks) {
            std::vector<Coord> proj;
            proj.reserve(l);
            for (int d = 0; d < n; ++d)
                if (mask & (1u << d)) proj.push_back(x[d]);
            for (int t = 0; t < l; ++t) {
                auto [lo, hi] = *A.bounds(t);
                bound = std::min(bound, std::min(proj[t] - lo, hi - proj[t]));
            }
            projections.push_back(std::move(proj));
        }
        std::vector<Coord> q(l);
        for (Coord r = 1; r <= bound; ++r) {
            bool ok = true;
            for (const auto& proj : projections) {
                for (std::uint32_t signs = 0; signs < (1u << l) && ok; ++signs) {
                    for (int t = 0; t < l; ++t)
                        q[t] = proj[t] + ((signs >> t) & 1 ? r : -r);
                    if (!index.contains(q)) ok = false;
                }
                if (!ok) break;
            }
            if (ok) return r;
        }
        return std::nullopt;
    });
}

CoverReport verify_orthoplex_cover(const PointSet& B, const PointSet& S) {
    if (B.dim() != S.dim()) throw ValidationError("verify_orthoplex_cover: dimension mismatch");
    PointIndex index(B);
    return run_pointwise(S, [&](std::span<const Coord> y) -> std::optional<Coord> {
        const Coord bound = box_radius_bound(B, y);
        for (Coord r = 1; r <= bound; ++r)
            if (orthoplex_contained(index, y, r)) return r;
        return std::nullopt;
    });
}

}  // namespace skeletal
