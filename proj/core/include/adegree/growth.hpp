#pragma once

#include <string>
#include <vector>

namespace adegree {

/// How the headline growth-rate estimate of a positive sequence was selected.
enum class GrowthMethod {
    Constant,  // sequence is eventually constant: rate 1
    Bounded,   // no new maximum in the trailing window: rate 1
    Linear,    // increments settle to a constant: rate 1
    Sublinear, // increments positive but shrinking: rate 1
    Ratio,     // trailing ratios s_{n+1}/s_n stabilized
    LagTwo,    // trailing (s_n/s_{n-2})^{1/2} stabilized (period-2 patterns)
    LogSlope,  // fallback: least-squares slope of log s over the window
};

std::string to_string(GrowthMethod m);

/// Growth-rate estimate for a positive sequence s_1..s_N (index 1-based in
/// the exponent sense: roots are s_n^{1/n}).
///
/// Geometric growth c*a^n is detected through ratios, period-2 geometric
/// patterns through lag-2 roots, and polynomially growing sequences through
/// their increments; the n-th root is the fallback. `upper`/`lower` bracket
/// the trailing estimates of the selected method.
struct GrowthEstimate {
    std::vector<double> roots;
    std::vector<double> ratios;
    double best = 1.0;
    double upper = 1.0;
    double lower = 1.0;
    GrowthMethod method = GrowthMethod::LogSlope;
};

/// `window` trailing entries participate in method selection (0 means the
/// trailing half). `agree_tol` is the relative spread below which trailing
/// ratio (or lag-2) estimates count as stabilized.
GrowthEstimate estimate_growth_rate(const std::vector<double>& seq, int window = 0,
                                    double agree_tol = 1e-2);

} // namespace adegree
