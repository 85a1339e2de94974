#include "skeletal/digits.hpp"

#include <algorithm>

namespace skeletal {

bool DigitSet::contains(Coord v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

bool MultiScaleSet::contains(Coord v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

DigitSet build_digit_set(int i, int n, std::int64_t string_cap) {
    if (i < 1) throw ValidationError("build_digit_set: base must be >= 1");
    if (n < 1) throw ValidationError("build_digit_set: n must be >= 1");
    if (i == 1) return DigitSet{1, n, {0}};

    const int len = 2 * n;
    const Coord lo = -2 * (Coord{i} - 1), hi = 2 * (Coord{i} - 1);
    const Coord digits_per_slot = hi - lo + 1;  // 4i - 3
    Coord strings = 1;
    for (int t = 0; t < len; ++t) {
        strings = checked_mul(strings, digits_per_slot);
        if (strings > string_cap)
            throw BudgetError("build_digit_set: too many digit strings", strings, string_cap);
    }

    const Coord span_max = 2 * (ipow_checked(i, len) - 1);  // max |value|
    std::vector<bool> seen(static_cast<std::size_t>(2 * span_max + 1), false);

    std::vector<Coord> digit(len, lo);
    std::vector<Coord> place(len);
    place[0] = 1;
    for (int t = 1; t < len; ++t) place[t] = checked_mul(place[t - 1], i);

    Coord value = 0;
    for (int t = 0; t < len; ++t) value += lo * place[t];
    int zero_digits = lo == 0 ? len : 0;

    while (true) {
        if (zero_digits > 0) seen[static_cast<std::size_t>(value + span_max)] = true;
        // Odometer step with incremental value/zero-count updates.
        int t = 0;
        while (t < len && digit[t] == hi) {
            value -= (hi - lo) * place[t];
            if (hi == 0) --zero_digits;
            if (lo == 0) ++zero_digits;
            digit[t] = lo;
            ++t;
        }
        if (t == len) break;
        if (digit[t] == 0) --zero_digits;
        ++digit[t];
        if (digit[t] == 0) ++zero_digits;
        value += place[t];
    }

    DigitSet ds{i, n, {}};
    for (Coord v = -span_max; v <= span_max; ++v)
        if (seen[static_cast<std::size_t>(v + span_max)]) ds.members.push_back(v);
    return ds;
}

namespace {

Coord find_radius_impl(std::span<const Coord> xs, int i, bool allow_zero) {
    const int n = static_cast<int>(xs.size());
    if (n < 1) throw ValidationError("find_radius: need at least one input");
    if (i < 2) throw ValidationError("find_radius: base must be >= 2");
    const int len = 2 * n;
    const Coord limit = ipow_checked(i, len) - 1;
    for (Coord x : xs) {
        if (x < (allow_zero ? 0 : 1) || x > limit)
            throw ValidationError("find_radius: input outside [1, i^(2n)-1]");
    }

    // Base-i digit table: dig[j][t] for t = 0..2n-1.
    std::vector<std::vector<Coord>> dig(n, std::vector<Coord>(len));
    for (int j = 0; j < n; ++j) {
        Coord rem = xs[j];
        for (int t = 0; t < len; ++t) {
            dig[j][t] = rem % i;
            rem /= i;
        }
    }

    // Pin the first (slot m, input j) pair, scanning slots then inputs, whose
    // input has a nonzero digit at position 2m or 2m+1. One pinned nonzero
    // pair forces r != 0 (a base-i combination with digits in [-(i-1), i-1]
    // vanishes only if all digits vanish).
    int pin_m = -1, pin_j = -1;
    for (int m = 0; m < n && pin_m < 0; ++m)
        for (int j = 0; j < n; ++j)
            if (dig[j][2 * m] != 0 || dig[j][2 * m + 1] != 0) {
                pin_m = m;
                pin_j = j;
                break;
            }
    if (pin_m < 0) return 0;  // all inputs zero (allow_zero mode only)

    // Slot m -> input perm[m]: pinned pair fixed, remaining inputs fill the
    // remaining slots in ascending index order.
    std::vector<int> perm(n, -1);
    perm[pin_m] = pin_j;
    int next = 0;
    for (int m = 0; m < n; ++m) {
        if (m == pin_m) continue;
        while (next == pin_j) ++next;
        perm[m] = next++;
    }

    std::vector<Coord> place(len);
    place[0] = 1;
    for (int t = 1; t < len; ++t) place[t] = checked_mul(place[t - 1], i);

    Coord r = 0;
    for (int m = 0; m < n; ++m) {
        const int j = perm[m];
        r += dig[j][2 * m] * place[2 * m];
        r -= dig[j][2 * m + 1] * place[2 * m + 1];
    }
    return r < 0 ? -r : r;
}

}  // namespace

Coord find_radius(std::span<const Coord> xs, int i) { return find_radius_impl(xs, i, false); }

Coord find_radius_allow_zero(std::span<const Coord> xs, int i) {
    return find_radius_impl(xs, i, true);
}

Coord multiscale_modulus(int p, int n) {
    if (p < 2) throw ValidationError("multiscale_modulus: p must be >= 2");
    if (n < 1) throw ValidationError("multiscale_modulus: n must be >= 1");
    Coord factorial = 1;
    for (int t = 2; t <= p; ++t) factorial = checked_mul(factorial, t);
    return ipow_checked(factorial, 2 * n);
}

MultiScaleSet build_multiscale_set(int p, int n, std::int64_t cap) {
    MultiScaleSet ms;
    ms.p = p;
    ms.n = n;
    ms.modulus = multiscale_modulus(p, n);

    std::int64_t combos = 1;
    for (int i = 2; i <= p; ++i) {
        ms.stage_base.push_back(i);
        Coord ratio = 1;  // p!/i!
        for (int t = i + 1; t <= p; ++t) ratio = checked_mul(ratio, t);
        ms.stage_scale.push_back(ipow_checked(ratio, 2 * n));
        ms.stages.push_back(build_digit_set(i, n));
        combos = checked_mul(combos, static_cast<Coord>(ms.stages.back().members.size()));
        if (combos > cap)
            throw BudgetError("build_multiscale_set: too many stage combinations", combos, cap);
    }

    std::vector<Coord> values{0};
    for (std::size_t s = 0; s < ms.stages.size(); ++s) {
        std::vector<Coord> next;
        next.reserve(values.size() * ms.stages[s].members.size());
        const Coord scale = ms.stage_scale[s];
        for (Coord v : values)
            for (Coord d : ms.stages[s].members) next.push_back(v + checked_mul(scale, d));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        values = std::move(next);
    }
    ms.members = std::move(values);
    return ms;
}

Coord find_radius_multiscale(std::span<const Coord> xs, int p, int n) {
    const Coord N = multiscale_modulus(p, n);
    const int count = static_cast<int>(xs.size());
    // The per-stage certificates are elements of D_{i,n}, which pins exactly n
    // inputs at once; a different input count would certify the wrong set.
    if (count != n) throw ValidationError("find_radius_multiscale: expected n inputs");
    for (Coord x : xs)
        if (x < 1 || x > N - 1)
            throw ValidationError("find_radius_multiscale: input outside [1, N-1]");

    // Mixed-radix digits, least significant stage i = p (place value 1),
    // ratio between consecutive place values c_{i-1}/c_i = i^{2n}.
    std::vector<Coord> rem(xs.begin(), xs.end());
    std::vector<std::vector<Coord>> stage_digits;  // aligned with i = p..2
    for (int i = p; i >= 2; --i) {
        const Coord radix = ipow_checked(i, 2 * n);
        std::vector<Coord> col(count);
        for (int j = 0; j < count; ++j) {
            col[j] = rem[j] % radix;
            rem[j] /= radix;
        }
        stage_digits.push_back(std::move(col));
    }
    for (Coord left : rem)
        if (left != 0) throw ValidationError("find_radius_multiscale: decomposition overflow");

    Coord r = 0;
    Coord scale = 1;  // c_i, built up from c_p = 1
    for (int idx = 0; idx < p - 1; ++idx) {
        const int i = p - idx;
        const Coord rho = find_radius_allow_zero(stage_digits[idx], i);
        r = checked_add(r, checked_mul(scale, rho));
        scale = checked_mul(scale, ipow_checked(i, 2 * n));
    }
    return r;
}

std::int64_t interval_cover_count(std::span<const Coord> values, Coord R) {
    if (R <= 0) throw ValidationError("interval_cover_count: R must be positive");
    if (values.empty()) return 0;
    std::vector<Coord> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::int64_t count = 0;
    std::size_t idx = 0;
    while (idx < sorted.size()) {
        ++count;
        const Coord reach = checked_add(sorted[idx], R);  // interval [v, v+R]
        while (idx < sorted.size() && sorted[idx] <= reach) ++idx;
    }
    return count;
}

}  // namespace skeletal
