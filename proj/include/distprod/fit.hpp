#pragma once

// Least-squares line fits for log-log exponent regressions, plus the
// tail-slope diagnostic used to judge finiteness of truncated norms.

#include <cmath>
#include <limits>
#include <vector>

#include "distprod/common.hpp"

namespace distprod {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;  // standard error of the slope
    double residual_rms = 0.0;
    int n = 0;
};

inline LineFit fit_line(const std::vector<double>& xs,
                        const std::vector<double>& ys) {
    LineFit f;
    f.n = static_cast<int>(xs.size());
    if (f.n < 2) return f;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < f.n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double det = f.n * sxx - sx * sx;
    f.slope = (f.n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / f.n;
    double ss = 0;
    for (int i = 0; i < f.n; ++i) {
        double r = ys[i] - (f.intercept + f.slope * xs[i]);
        ss += r * r;
    }
    f.residual_rms = std::sqrt(ss / f.n);
    if (f.n > 2)
        f.stderr_slope = std::sqrt((ss / (f.n - 2)) * (f.n / det));
    return f;
}

// Slope of log2(values) against index over the last `window` entries.
// Entries at or below `floor` are treated as vanished and skipped; if
// fewer than two usable entries remain the sequence is flat (slope 0
// for an all-zero tail counts as bounded).
inline double tail_slope_log2(const std::vector<double>& values,
                              int window = 4, double floor = 1e-300) {
    std::vector<double> xs, ys;
    int n = static_cast<int>(values.size());
    for (int i = std::max(0, n - window); i < n; ++i) {
        if (values[i] > floor) {
            xs.push_back(static_cast<double>(i));
            ys.push_back(std::log2(values[i]));
        }
    }
    if (xs.size() < 2) return 0.0;
    return fit_line(xs, ys).slope;
}

enum class Finiteness { Finite, Marginal, Divergent };

// Shared threshold: the truncated norms are limits, so we expose a tail
// slope and classify against a fixed epsilon rather than guess a boolean.
inline constexpr double kSlopeEps = 0.05;

inline Finiteness classify_tail(double slope, double eps = kSlopeEps) {
    if (slope <= -eps) return Finiteness::Finite;
    if (slope >= eps) return Finiteness::Divergent;
    return Finiteness::Marginal;
}

// A truncated-norm value together with its finiteness diagnostic.
struct TailDiagnostic {
    double value = 0.0;
    double tail_slope = 0.0;
    Finiteness cls = Finiteness::Marginal;
};

}  // namespace distprod
