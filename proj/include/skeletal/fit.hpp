#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "skeletal/common.hpp"

namespace skeletal {

struct FitLine {
    double slope = 0.0;
    double intercept = 0.0;
};

// Ordinary least squares y = slope*x + intercept. Needs >= 2 samples and a
// nonconstant x column.
inline FitLine fit_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw ValidationError("fit_line: length mismatch");
    const std::size_t n = xs.size();
    if (n < 2) throw ValidationError("fit_line: need at least two samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) throw ValidationError("fit_line: degenerate x values");
    FitLine line;
    line.slope = (n * sxy - sx * sy) / den;
    line.intercept = (sy - line.slope * sx) / n;
    return line;
}

// Slope of log(y) against log(x); all samples must be positive.
inline FitLine fit_loglog(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw ValidationError("fit_loglog: length mismatch");
    std::vector<double> lx(xs.size()), ly(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0.0 || ys[i] <= 0.0)
            throw ValidationError("fit_loglog: samples must be positive");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    return fit_line(lx, ly);
}

}  // namespace skeletal
