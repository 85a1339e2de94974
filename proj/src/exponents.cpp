#include "skeletal/exponents.hpp"

namespace skeletal {

namespace {

void check_nk(int n, int k, const char* who) {
    if (n < 1) throw ValidationError(std::string(who) + ": n must be >= 1");
    if (k < 0 || k >= n) throw ValidationError(std::string(who) + ": need 0 <= k < n");
}

}  // namespace

Rational beta_exponent(int n, int k) {
    check_nk(n, k, "beta_exponent");
    return Rational(1) - Rational(n - k, 2 * static_cast<long long>(n) * n);
}

Rational nl_exponent(int n, int l) {
    if (n < 1) throw ValidationError("nl_exponent: n must be >= 1");
    if (l < 1 || l > n) throw ValidationError("nl_exponent: need 1 <= l <= n");
    return Rational(static_cast<long long>(l) * (2 * n - 1),
                    2 * static_cast<long long>(n) * n);
}

Rational rate_R(int n, int k, const Rational& alpha) {
    check_nk(n, k, "rate_R");
    if (alpha < 0 || alpha > 1) throw ValidationError("rate_R: alpha must be in [0, 1]");
    const Rational denom_inner = Rational(k) + Rational(n) * (Rational(1) - alpha);
    if (denom_inner == 0)
        throw ValidationError("rate_R: k + n(1-alpha) vanishes (alpha = 1, k = 0)");
    const long long two_n_sq = 2 * static_cast<long long>(n) * n;
    const Rational numer = Rational(two_n_sq - static_cast<long long>(2 * n - 1) * (n - k));
    return numer / (Rational(two_n_sq) * denom_inner);
}

Rational f_alpha(int n, int k, const Rational& alpha) {
    const Rational R = rate_R(n, k, alpha);
    const long long two_n_sq = 2 * static_cast<long long>(n) * n;
    return R * k + Rational(static_cast<long long>(2 * n - 1) * (n - k), two_n_sq);
}

ExponentReport iterate_f(int n, int k, const Rational& tol, int max_steps) {
    check_nk(n, k, "iterate_f");
    if (tol <= 0) throw ValidationError("iterate_f: tolerance must be positive");
    if (max_steps < 1) throw ValidationError("iterate_f: max_steps must be >= 1");

    ExponentReport report;
    report.n = n;
    report.k = k;
    report.beta = beta_exponent(n, k);

    Rational a(0);
    report.trace.push_back(a);
    if (abs(a - report.beta) < tol) {
        report.converged = true;
        report.converged_at = 0;
        return report;
    }
    for (int m = 1; m <= max_steps; ++m) {
        a = f_alpha(n, k, a);
        report.trace.push_back(a);
        if (abs(a - report.beta) < tol) {
            report.converged = true;
            report.converged_at = m;
            break;
        }
    }
    return report;
}

}  // namespace skeletal
