#include "skeletal/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "skeletal/constructions.hpp"
#include "skeletal/digits.hpp"
#include "skeletal/exponents.hpp"
#include "skeletal/fit.hpp"

namespace skeletal {

std::vector<ScalingRow> skeleton_scaling_rows(int n, int k, int i_min, int i_max) {
    if (i_min < 2 || i_max < i_min)
        throw ValidationError("skeleton_scaling_rows: need 2 <= i_min <= i_max");
    std::vector<ScalingRow> rows;
    for (int i = i_min; i <= i_max; ++i) {
        const Coord m = grid_limit(n, i);
        ScalingRow row;
        row.i = i;
        row.size_s = ipow_checked(m, n);
        if (k == 0) {
            const DigitSet D = build_digit_set(i, n);
            row.size_b = ipow_checked(static_cast<Coord>(D.members.size()), n);
        } else {
            row.size_b = skeleton_union_size(n, k, i);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<ScalingRow> orthoplex_scaling_rows(int n, int i_min, int i_max) {
    if (i_min < 2 || i_max < i_min)
        throw ValidationError("orthoplex_scaling_rows: need 2 <= i_min <= i_max");
    std::vector<ScalingRow> rows;
    for (int i = i_min; i <= i_max; ++i) {
        const Coord m = grid_limit(n, i);
        const DigitSet D = build_digit_set(i, n);
        // The basis map is injective on Z^n, so image sizes equal preimage
        // sizes: |S| = m^n, |B| = |D|^n.
        rows.push_back(
            {i, ipow_checked(m, n), ipow_checked(static_cast<Coord>(D.members.size()), n)});
    }
    return rows;
}

double scaling_slope(std::span<const ScalingRow> rows) {
    std::vector<double> xs, ys;
    for (const ScalingRow& row : rows) {
        xs.push_back(static_cast<double>(row.size_s));
        ys.push_back(static_cast<double>(row.size_b));
    }
    return fit_loglog(xs, ys).slope;
}

std::string scaling_csv(std::span<const ScalingRow> rows) {
    std::ostringstream out;
    out << "i,size_s,size_b\n";
    for (const ScalingRow& row : rows)
        out << row.i << ',' << row.size_s << ',' << row.size_b << '\n';
    return out.str();
}

std::vector<MultiscaleRow> multiscale_cover_rows(int n, std::span<const int> ps,
                                                 double constant, double slack) {
    if (n < 1) throw ValidationError("multiscale_cover_rows: n must be >= 1");
    std::vector<MultiscaleRow> rows;
    for (int p : ps) {
        const MultiScaleSet A = build_multiscale_set(p, n);
        const Coord N = A.modulus;
        const Coord three_pow = ipow_checked(3, 2 * n + 1);
        for (int j = 1; j <= p; ++j) {
            // p!/j! = (j+1)(j+2)...p stays integral; R_j = 3^(2n+1)(p!/j!)^(2n).
            Coord quotient = 1;
            for (int v = j + 1; v <= p; ++v) quotient = checked_mul(quotient, v);
            const Coord R = checked_mul(three_pow, ipow_checked(quotient, 2 * n));
            MultiscaleRow row;
            row.p = p;
            row.j = j;
            row.modulus = N;
            row.R = R;
            row.count = interval_cover_count(A.members, R);
            const double ratio = static_cast<double>(N) / static_cast<double>(R);
            const double exponent = (2.0 * n - 1.0) / (2.0 * n);
            row.bound = constant * std::pow(ratio, exponent) *
                        std::pow(static_cast<double>(N), slack);
            row.within = static_cast<double>(row.count) <= row.bound;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string multiscale_csv(std::span<const MultiscaleRow> rows) {
    std::ostringstream out;
    out << "p,j,modulus,R,count,bound,within\n";
    char bound_text[64];
    for (const MultiscaleRow& row : rows) {
        std::snprintf(bound_text, sizeof bound_text, "%.6f", row.bound);
        out << row.p << ',' << row.j << ',' << row.modulus << ',' << row.R << ','
            << row.count << ',' << bound_text << ',' << (row.within ? 1 : 0) << '\n';
    }
    return out.str();
}

std::vector<ExponentRow> exponent_rows(int n_max, const Rational& tol) {
    if (n_max < 1) throw ValidationError("exponent_rows: n_max must be >= 1");
    std::vector<ExponentRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k < n; ++k) {
            const ExponentReport rep = iterate_f(n, k, tol);
            rows.push_back({n, k, rep.beta, rep.converged_at});
        }
    }
    return rows;
}

std::string exponent_csv(std::span<const ExponentRow> rows) {
    std::ostringstream out;
    out << "n,k,beta_num,beta_den,converged_at\n";
    for (const ExponentRow& row : rows) {
        out << row.n << ',' << row.k << ',' << numerator(row.beta).str() << ','
            << denominator(row.beta).str() << ',' << row.converged_at << '\n';
    }
    return out.str();
}

std::string box_count_csv(std::span<const ScaleRow> rows) {
    std::ostringstream out;
    out << "scale_num,scale_den,count\n";
    for (const ScaleRow& row : rows) {
        out << numerator(row.scale).str() << ',' << denominator(row.scale).str() << ','
            << row.count << '\n';
    }
    return out.str();
}

}  // namespace skeletal
