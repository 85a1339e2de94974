#include "skeletal/shadows.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace skeletal {

namespace {

using Wide = __int128;

// Exact C(n, k) as __int128, clamped at `cap` (cap must fit Wide).
Wide binom_wide(Coord n, Coord k, Wide cap) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Wide r = 1;
    for (Coord t = 1; t <= k; ++t) {
        r = r * (n - k + t) / t;  // exact: product of t consecutive integers
        if (r >= cap) return cap;
    }
    return r;
}

constexpr Wide kWideCap = static_cast<Wide>(1) << 100;

double falling_factorial_over_kfact(double x, int k) {
    double r = 1.0;
    for (int t = 0; t < k; ++t) r *= (x - t) / (t + 1);
    return r;
}

}  // namespace

Coord binom_capped(Coord n, Coord k, Coord cap) {
    if (cap < 0) throw ValidationError("binom_capped: cap must be >= 0");
    Wide r = binom_wide(n, k, static_cast<Wide>(cap));
    return static_cast<Coord>(std::min<Wide>(r, cap));
}

Coord binom_exact(Coord n, Coord k) {
    Wide r = binom_wide(n, k, kWideCap);
    if (r >= static_cast<Wide>(INT64_MAX))
        throw OverflowError("binom_exact: value does not fit 64 bits");
    return static_cast<Coord>(r);
}

std::vector<CascadeTerm> cascade_representation(Coord m, int b) {
    if (m < 1) throw ValidationError("cascade_representation: m must be >= 1");
    if (b < 1) throw ValidationError("cascade_representation: b must be >= 1");
    std::vector<CascadeTerm> terms;
    Coord rem = m;
    int arity = b;
    while (rem > 0) {
        // arity >= 1 is invariant: at arity 1, C(a, 1) = a = rem finishes.
        // Largest a with C(a, arity) <= rem, by doubling then bisecting.
        const Wide cap = static_cast<Wide>(rem) + 1;
        Coord lo = arity, hi = arity + 1;
        while (binom_wide(hi, arity, cap) <= static_cast<Wide>(rem)) {
            lo = hi;
            if (hi > INT64_MAX / 2) throw OverflowError("cascade_representation: term too large");
            hi *= 2;
        }
        while (lo + 1 < hi) {
            Coord mid = lo + (hi - lo) / 2;
            if (binom_wide(mid, arity, cap) <= static_cast<Wide>(rem))
                lo = mid;
            else
                hi = mid;
        }
        terms.push_back({lo, arity});
        rem -= static_cast<Coord>(binom_wide(lo, arity, cap));
        --arity;
    }
    return terms;
}

Coord kk_shadow_bound(Coord m, int b, int c) {
    if (b < 1) throw ValidationError("kk_shadow_bound: b must be >= 1");
    if (c < 0 || c > b) throw ValidationError("kk_shadow_bound: need 0 <= c <= b");
    if (m < 0) throw ValidationError("kk_shadow_bound: m must be >= 0");
    if (m == 0) return 0;
    Wide total = 0;
    for (const auto& term : cascade_representation(m, b)) {
        const int target = term.arity - c;
        if (target < 0) continue;
        if (target == 0) {
            total += 1;  // C(a, 0): the empty set
            continue;
        }
        total += binom_wide(term.a, target, kWideCap);
    }
    if (total >= static_cast<Wide>(INT64_MAX))
        throw OverflowError("kk_shadow_bound: value does not fit 64 bits");
    return static_cast<Coord>(total);
}

double lovasz_shadow_bound(Coord m, int b, int c) {
    if (b < 1) throw ValidationError("lovasz_shadow_bound: b must be >= 1");
    if (c < 0 || c > b) throw ValidationError("lovasz_shadow_bound: need 0 <= c <= b");
    if (m < 0) throw ValidationError("lovasz_shadow_bound: m must be >= 0");
    if (m == 0) return 0.0;
    // C(x, b) is increasing for x >= b-1 with C(b-1, b) = 0 and
    // C(b-1+m, b) = m(m+1)...(m+b-1)/b! >= m, so the root is bracketed.
    double lo = b - 1.0, hi = b - 1.0 + static_cast<double>(m);
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (falling_factorial_over_kfact(mid, b) < static_cast<double>(m))
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-13 * std::max(1.0, hi)) break;
    }
    const double x = 0.5 * (lo + hi);
    return falling_factorial_over_kfact(x, b - c);
}

SetFamily make_set_family(int arity, std::vector<Coord> flat) {
    if (arity < 1) throw ValidationError("set family arity must be >= 1");
    if (flat.size() % arity != 0)
        throw ValidationError("set family: flat array length not divisible by arity");
    for (std::size_t r = 0; r * arity < flat.size(); ++r) {
        for (int d = 0; d < arity; ++d) {
            Coord v = flat[r * arity + d];
            if (v < 1) throw ValidationError("set family elements must be positive integers");
            if (d > 0 && flat[r * arity + d - 1] >= v)
                throw ValidationError("set family members must be strictly increasing");
        }
    }
    return SetFamily{PointSet::from_flat(arity, std::move(flat))};
}

SetFamily parse_set_family(std::string_view text) {
    PointSet ps = parse_point_set(text);
    std::vector<Coord> flat = ps.flat();
    return make_set_family(ps.dim(), std::move(flat));
}

SetFamily read_set_family(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open set family file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_set_family(text);
}

void write_set_family(std::ostream& out, const SetFamily& family) {
    write_point_set(out, family.members);
}

void write_set_family(const std::filesystem::path& path, const SetFamily& family) {
    write_point_set(path, family.members);
}

SetFamily exact_shadow(const SetFamily& family, int c) {
    const int b = family.arity();
    if (c < 0 || c >= b)
        throw ValidationError("exact_shadow: need 0 <= c < arity");
    if (c == 0) return family;
    const int target = b - c;
    std::vector<Coord> flat;
    std::vector<int> keep(target);
    // For each member, emit every (b-c)-subset (choose `target` positions).
    for (std::size_t r = 0; r < family.size(); ++r) {
        auto row = family.members.row(r);
        for (int t = 0; t < target; ++t) keep[t] = t;
        while (true) {
            for (int t = 0; t < target; ++t) flat.push_back(row[keep[t]]);
            int t = target - 1;
            while (t >= 0 && keep[t] == b - target + t) --t;
            if (t < 0) break;
            ++keep[t];
            for (int s = t + 1; s < target; ++s) keep[s] = keep[s - 1] + 1;
        }
    }
    return SetFamily{PointSet::from_flat(target, std::move(flat))};
}

SetFamily colex_segment(Coord m, int b, std::int64_t cap) {
    if (m < 0) throw ValidationError("colex_segment: m must be >= 0");
    if (b < 1) throw ValidationError("colex_segment: b must be >= 1");
    if (m > cap) throw BudgetError("colex_segment: too many members", m, cap);
    std::vector<Coord> flat;
    flat.reserve(static_cast<std::size_t>(m) * b);
    std::vector<Coord> cur(b);
    for (int t = 0; t < b; ++t) cur[t] = t + 1;
    for (Coord produced = 0; produced < m; ++produced) {
        flat.insert(flat.end(), cur.begin(), cur.end());
        // Colex successor: bump the first position whose increment stays
        // below its successor, resetting everything before it to 1..t.
        int t = 0;
        while (t < b - 1 && cur[t] + 1 >= cur[t + 1]) ++t;
        ++cur[t];
        for (int s = 0; s < t; ++s) cur[s] = s + 1;
    }
    return make_set_family(b, std::move(flat));
}

}  // namespace skeletal
