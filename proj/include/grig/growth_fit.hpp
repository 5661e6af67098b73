#pragma once

#include <utility>
#include <vector>

#include "grig/ball.hpp"

namespace grig {

struct degenerate_fit_error : std::invalid_argument {
    explicit degenerate_fit_error(const std::string& what) : std::invalid_argument(what) {}
};

struct GrowthFit {
    ApproxReal exponent;  // least-squares slope of loglog gamma against log n
    double residual;      // RMS deviation of the fit
    std::size_t points_used;
};

// Least-squares slope of log log gamma(n) against log n, carried out in
// interval arithmetic so the returned enclosure is honest.  Samples with
// gamma < 2 are rejected (the double logarithm needs gamma >= 2).
inline GrowthFit fit_growth_exponent(const std::vector<std::pair<Rat, Int>>& samples,
                                     unsigned bits = 96) {
    std::vector<RatInterval> xs, ys;
    for (const auto& [n, gamma] : samples) {
        if (n <= 0 || gamma < 2) continue;
        xs.push_back(ln_enclosure(n, bits));
        RatInterval lg = ln_enclosure(Rat(gamma), bits);
        ys.push_back(ln_interval(lg, bits));
    }
    const std::size_t count = xs.size();
    if (count < 3)
        throw degenerate_fit_error("growth fit needs at least 3 sample points with gamma >= 2");

    {
        Int first = -1;
        bool all_equal = true;
        for (const auto& [n, gamma] : samples) {
            if (n <= 0 || gamma < 2) continue;
            if (first < 0)
                first = gamma;
            else if (gamma != first)
                all_equal = false;
        }
        if (all_equal) throw degenerate_fit_error("growth fit is degenerate: constant gamma");
    }

    const Rat cnt(count);
    RatInterval xbar{Rat(0), Rat(0)}, ybar{Rat(0), Rat(0)};
    for (const auto& x : xs) xbar = xbar + x;
    for (const auto& y : ys) ybar = ybar + y;
    xbar = Rat(1) / cnt * xbar;
    ybar = Rat(1) / cnt * ybar;

    RatInterval sxx{Rat(0), Rat(0)}, sxy{Rat(0), Rat(0)};
    for (std::size_t i = 0; i < count; ++i) {
        RatInterval dx = xs[i] - xbar;
        RatInterval dy = ys[i] - ybar;
        sxx = (sxx + dx * dx).round_out(bits + 16);
        sxy = (sxy + dx * dy).round_out(bits + 16);
    }
    if (sxx.contains_zero())
        throw degenerate_fit_error("growth fit is degenerate: sample points coincide");

    RatInterval slope = (sxy / sxx).round_out(bits + 8);

    RatInterval ss{Rat(0), Rat(0)};
    for (std::size_t i = 0; i < count; ++i) {
        RatInterval e = ys[i] - (ybar + slope * (xs[i] - xbar));
        ss = (ss + e * e).round_out(bits + 16);
    }
    double residual = std::sqrt(static_cast<double>(Rat(1) / cnt * ss.mid()));

    return GrowthFit{ApproxReal(slope), residual, count};
}

// Empirical probe of the growth exponent from an enumerated ball.
inline GrowthFit estimate_alpha(const BallTable& t, const std::vector<FieldElement>& points,
                                unsigned bits = 96) {
    std::vector<std::pair<Rat, Int>> samples;
    for (const FieldElement& n : points) {
        Int gamma(growth_function(t, n));
        // rational abscissa: rationals pass through exactly, irrational sample
        // points use a tight midpoint (the fit abscissa, not a certificate)
        Rat x = n.is_rational() ? n.c0() : n.to_approx(bits + 16).value();
        samples.emplace_back(x, gamma);
    }
    return fit_growth_exponent(samples, bits);
}

}  // namespace grig
