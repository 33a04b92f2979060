#include "adegree/growth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adegree {

std::string to_string(GrowthMethod m) {
    switch (m) {
        case GrowthMethod::Constant: return "constant";
        case GrowthMethod::Bounded: return "bounded";
        case GrowthMethod::Linear: return "linear";
        case GrowthMethod::Sublinear: return "sublinear";
        case GrowthMethod::Ratio: return "ratio";
        case GrowthMethod::LagTwo: return "lag2";
        case GrowthMethod::LogSlope: return "log-slope";
    }
    return "?";
}

namespace {

// Relative spread of the trailing `k` values.
double trailing_spread(const std::vector<double>& v, std::size_t k) {
    if (v.size() < k) return 1e100;
    double lo = v[v.size() - k], hi = lo;
    for (std::size_t i = v.size() - k; i < v.size(); ++i) {
        lo = std::min(lo, v[i]);
        hi = std::max(hi, v[i]);
    }
    double mid = (lo + hi) / 2;
    return mid > 0 ? (hi - lo) / mid : 1e100;
}

} // namespace

GrowthEstimate estimate_growth_rate(const std::vector<double>& seq, int window,
                                    double agree_tol) {
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    for (double s : seq) {
        if (!(s > 0)) throw std::invalid_argument("sequence entries must be positive");
    }

    GrowthEstimate est;
    const std::size_t n = seq.size();
    for (std::size_t i = 0; i < n; ++i)
        est.roots.push_back(std::pow(seq[i], 1.0 / static_cast<double>(i + 1)));
    for (std::size_t i = 0; i + 1 < n; ++i) est.ratios.push_back(seq[i + 1] / seq[i]);

    // Method selection runs on the running-maximum envelope: the limsup of
    // the n-th roots is unchanged by it, and it irons out the oscillations
    // that gcd cancellations put into height sequences.
    std::vector<double> env(seq);
    for (std::size_t i = 1; i < n; ++i) env[i] = std::max(env[i - 1], env[i]);

    std::size_t w = window > 0 ? static_cast<std::size_t>(window) : (n + 1) / 2;
    w = std::clamp<std::size_t>(w, 1, n);
    const std::size_t first = n - w;

    auto finish = [&](GrowthMethod m, double best, double lo, double hi) {
        est.method = m;
        est.best = std::max(1.0, best);
        est.lower = std::max(1.0, lo);
        est.upper = std::max(1.0, hi);
        return est;
    };

    // Eventually constant: rate 1.
    bool constant = true;
    for (std::size_t i = first; i + 1 < n; ++i) {
        if (env[i + 1] != env[i]) { constant = false; break; }
    }
    if (constant && w >= 2) return finish(GrowthMethod::Constant, 1.0, 1.0, 1.0);

    // A sequence that sets no new maximum across the trailing window is
    // treated as bounded (periodic gcd cancellation patterns land here).
    if (first >= 2) {
        double prefix_max = env[first - 1];
        double window_max = env[n - 1];
        if (window_max <= prefix_max * (1 + 1e-12))
            return finish(GrowthMethod::Bounded, 1.0, 1.0, 1.0);
    }

    // Increment analysis over the window.
    std::vector<double> diffs;
    for (std::size_t i = std::max<std::size_t>(first, 1); i < n; ++i)
        diffs.push_back(env[i] - env[i - 1]);
    if (diffs.size() >= 3) {
        bool positive = std::all_of(diffs.begin(), diffs.end(), [](double d) { return d > 0; });
        if (positive) {
            double spread = trailing_spread(diffs, 3);
            if (spread <= 0.05) {
                // Constant increments: linear growth, rate 1.
                return finish(GrowthMethod::Linear, 1.0, 1.0, 1.0);
            }
            bool decreasing = true;
            for (std::size_t i = 1; i < diffs.size(); ++i) {
                if (diffs[i] >= diffs[i - 1]) { decreasing = false; break; }
            }
            if (decreasing) return finish(GrowthMethod::Sublinear, 1.0, 1.0, 1.0);
        }
    }

    // Stabilized trailing ratios: geometric growth.
    std::vector<double> env_ratios;
    for (std::size_t i = 0; i + 1 < n; ++i) env_ratios.push_back(env[i + 1] / env[i]);
    if (env_ratios.size() >= 3 && trailing_spread(env_ratios, 3) <= agree_tol) {
        const auto& r = env_ratios;
        double a = r[r.size() - 3], b = r[r.size() - 2], c = r[r.size() - 1];
        return finish(GrowthMethod::Ratio, c, std::min({a, b, c}), std::max({a, b, c}));
    }

    // Lag-2 roots handle period-2 growth patterns exactly.
    std::vector<double> lag2;
    for (std::size_t i = 2; i < n; ++i) lag2.push_back(std::sqrt(env[i] / env[i - 2]));
    if (lag2.size() >= 3 && trailing_spread(lag2, 3) <= agree_tol) {
        double a = lag2[lag2.size() - 3], b = lag2[lag2.size() - 2], c = lag2[lag2.size() - 1];
        return finish(GrowthMethod::LagTwo, c, std::min({a, b, c}), std::max({a, b, c}));
    }

    // Fallback: least-squares slope of log(env) across the window, which is
    // the average of the log-ratios. Exact for geometric data and far less
    // biased than plain n-th roots for irregular slow growth.
    auto slope_exp = [&](std::size_t from) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (std::size_t i = from; i < n; ++i) {
            double x = static_cast<double>(i);
            double y = std::log(env[i]);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            ++m;
        }
        if (m < 2) return est.roots.back();
        double denom = m * sxx - sx * sx;
        if (denom <= 0) return est.roots.back();
        return std::exp((m * sxy - sx * sy) / denom);
    };
    double whole = slope_exp(first);
    double tail_start = first + (n - first) / 2;
    double tail = slope_exp(static_cast<std::size_t>(tail_start));
    return finish(GrowthMethod::LogSlope, whole, std::min(whole, tail), std::max(whole, tail));
}

} // namespace adegree
