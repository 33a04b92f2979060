#include "adegree/heights.hpp"

#include <algorithm>
#include <cmath>

#include "adegree/budget.hpp"

namespace adegree {

namespace {

double log_abs(const Int& x) {
    if (x == 0) return 0.0;
    signed long exp;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

} // namespace

double weil_height(const ProjPoint& P) {
    Int max_abs(0);
    for (const auto& c : P.coords()) {
        Int a = abs(c);
        if (a > max_abs) max_abs = a;
    }
    return log_abs(max_abs);
}

double height_bound_constant(const RationalMap& f) {
    std::size_t max_terms = 0;
    Int max_coeff(1);
    for (const auto& c : f.coords()) {
        max_terms = std::max(max_terms, c.term_count());
        for (const auto& t : c.terms()) {
            Int a = abs(t.coeff.get_num());
            if (a > max_coeff) max_coeff = a;
        }
    }
    return std::log(static_cast<double>(std::max<std::size_t>(max_terms, 1))) + log_abs(max_coeff);
}

OrbitProfile orbit_profile(const RationalMap& f, const ProjPoint& P, int max_n) {
    if (max_n < 1) throw std::invalid_argument("orbit length must be >= 1");
    OrbitProfile profile{f, P, {}, {}};
    profile.points.push_back(P);
    profile.heights.push_back(weil_height(P));
    const double cf = height_bound_constant(f);
    const double d = f.degree();
    for (int n = 1; n <= max_n; ++n) {
        const ProjPoint& cur = profile.points.back();
        if (is_indeterminate(f, cur)) {
            profile.truncated = true;
            profile.reason = OrbitProfile::Reason::Indeterminacy;
            profile.truncation_step = n - 1;
            break;
        }
        ProjPoint next = apply(f, cur);
        std::int64_t bits = 0;
        for (const auto& c : next.coords()) bits += bit_length(c);
        if (bits > coefficient_bit_budget()) {
            profile.truncated = true;
            profile.reason = OrbitProfile::Reason::Budget;
            profile.truncation_step = n;
            break;
        }
        double h_prev = profile.heights.back();
        double h_next = weil_height(next);
        if (h_next > d * h_prev + cf + 1e-9)
            throw std::logic_error("height machine bound violated along orbit");
        profile.points.push_back(std::move(next));
        profile.heights.push_back(h_next);
    }
    return profile;
}

AlphaEstimate alpha_estimate(const OrbitProfile& profile, int window) {
    int n_points = static_cast<int>(profile.points.size());
    if (window <= 0) window = std::max(1, (n_points - 1) / 2);
    if (n_points < window + 2)
        throw std::invalid_argument("orbit too short: need at least " +
                                    std::to_string(window + 2) + " points");

    std::vector<double> hplus;
    hplus.reserve(profile.heights.size());
    for (double h : profile.heights) hplus.push_back(std::max(1.0, h));

    AlphaEstimate est;
    est.window = window;
    for (std::size_t n = 1; n < hplus.size(); ++n)
        est.per_step_roots.push_back(std::pow(hplus[n], 1.0 / static_cast<double>(n)));
    for (std::size_t n = 0; n + 1 < hplus.size(); ++n)
        est.per_step_ratios.push_back(hplus[n + 1] / hplus[n]);

    // The growth cascade sees h+(f^1 P) ... h+(f^maxN P).
    std::vector<double> tail(hplus.begin() + 1, hplus.end());
    GrowthEstimate g = estimate_growth_rate(tail, window, 5e-2);
    est.best = g.best;
    est.upper = g.upper;
    est.lower = g.lower;
    est.method = g.method;
    return est;
}

CanonicalEstimate canonical_plus(const OrbitProfile& profile, int d) {
    if (d <= 1) throw std::invalid_argument("canonical height needs degree > 1");
    CanonicalEstimate est;
    est.kind = CanonicalKind::Plus;
    est.delta = d;
    double dn = 1.0;
    for (double h : profile.heights) {
        est.samples.push_back(h / dn);
        dn *= d;
    }
    est.value = est.samples.back();
    double c = 0.0;
    double scale = 1.0;
    for (std::size_t n = 0; n + 1 < est.samples.size(); ++n) {
        c = std::max(c, std::fabs(est.samples[n + 1] - est.samples[n]) * scale);
        scale *= d;
    }
    est.cauchy_constant = c;
    return est;
}

CanonicalEstimate weak_lower_canonical(const OrbitProfile& profile, double delta) {
    if (!(delta > 1.0))
        throw std::invalid_argument("weak lower canonical height requires delta > 1");
    CanonicalEstimate est;
    est.kind = CanonicalKind::WeakLower;
    est.delta = delta;
    double dn = 1.0;
    for (double h : profile.heights) {
        est.samples.push_back(h / dn);
        dn *= delta;
    }
    std::size_t first = est.samples.size() / 2;
    double lo = est.samples[first];
    for (std::size_t n = first; n < est.samples.size(); ++n) lo = std::min(lo, est.samples[n]);
    est.value = lo;
    return est;
}

InequalityVerdict check_fundamental_inequality(const AlphaEstimate& alpha,
                                               const DeltaEstimate& delta, double tol) {
    InequalityVerdict v;
    v.alpha_upper = alpha.best;
    v.delta_value = delta.value();
    v.tolerance = tol;
    v.margin = v.delta_value + tol - v.alpha_upper;
    v.pass = v.margin >= 0.0;
    return v;
}

double default_inequality_tolerance(const DeltaEstimate& delta) {
    return delta.exact ? 1e-9 : 0.05;
}

IterateIdentityReport hcirc_iterate_identity(const RationalMap& f, const ProjPoint& P,
                                             int m, int max_n, double delta) {
    if (m < 2) throw std::invalid_argument("iterate identity needs m >= 2");
    if (!(delta > 1.0)) throw std::invalid_argument("iterate identity needs delta > 1");

    IterateIdentityReport report;
    OrbitProfile full = orbit_profile(f, P, m * max_n);
    report.truncated = full.truncated;
    report.lhs = weak_lower_canonical(full, delta).value;

    RationalMap fm = map_iterate(f, m);
    double delta_m = std::pow(delta, m);
    double rhs = 0.0;
    bool first = true;
    ProjPoint start = P;
    double scale = 1.0;
    for (int i = 0; i < m; ++i) {
        OrbitProfile sub = orbit_profile(fm, start, max_n);
        report.truncated = report.truncated || sub.truncated;
        double term = weak_lower_canonical(sub, delta_m).value / scale;
        report.rhs_terms.push_back(term);
        rhs = first ? term : std::min(rhs, term);
        first = false;
        if (i + 1 < m) {
            if (is_indeterminate(f, start)) {
                report.truncated = true;
                break;
            }
            start = apply(f, start);
            scale *= delta;
        }
    }
    report.rhs = rhs;
    double denom = std::max({std::fabs(report.lhs), std::fabs(report.rhs), 1e-12});
    report.relative_discrepancy = std::fabs(report.lhs - report.rhs) / denom;
    return report;
}

} // namespace adegree
