#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adegree/growth.hpp"
#include "adegree/projmap.hpp"

namespace adegree {

/// Weil height of a rational projective point: log of the largest coordinate
/// in absolute value on the coprime integer representative.
double weil_height(const ProjPoint& P);

/// Additive height-machine constant: h(f(P)) <= deg(f) h(P) + C_f.
double height_bound_constant(const RationalMap& f);

struct OrbitProfile {
    RationalMap map;
    ProjPoint start;
    std::vector<ProjPoint> points; // points[0] == start
    std::vector<double> heights;
    bool truncated = false;
    enum class Reason { None, Indeterminacy, Budget } reason = Reason::None;
    int truncation_step = -1;

    int steps() const { return static_cast<int>(points.size()) - 1; }
};

/// Exact forward orbit with heights, stopping at the first indeterminacy hit
/// or coordinate budget overflow. The height machine bound is asserted at
/// every step.
OrbitProfile orbit_profile(const RationalMap& f, const ProjPoint& P, int max_n);

struct AlphaEstimate {
    double upper = 1.0;
    double lower = 1.0;
    double best = 1.0;
    GrowthMethod method = GrowthMethod::LogSlope;
    int window = 0;
    std::vector<double> per_step_roots;  // h+(f^n P)^{1/n}
    std::vector<double> per_step_ratios; // h+(f^{n+1} P)/h+(f^n P)
};

/// Arithmetic degree estimate from the h+ sequence of an orbit. The raw
/// n-th roots converge too slowly to be usable at desk scale, so the
/// headline numbers come from the growth-rate cascade; the roots are kept
/// for inspection.
AlphaEstimate alpha_estimate(const OrbitProfile& profile, int window = 0);

enum class CanonicalKind { Plus, WeakLower };

struct CanonicalEstimate {
    CanonicalKind kind;
    double value = 0.0;
    double delta = 0.0;
    std::vector<double> samples; // h(f^n P)/delta^n
    double cauchy_constant = 0.0; // fitted C with |s_{n+1}-s_n| <= C/delta^n
    bool is_estimate = true;
};

/// hat-h-plus surrogate: h(f^n P)/d^n for an algebraically stable map of
/// degree d; the value is the final sample.
CanonicalEstimate canonical_plus(const OrbitProfile& profile, int d);

/// Weak lower canonical height surrogate: liminf h(f^n P)/delta^n reported
/// as the minimum over the trailing window. Requires delta > 1.
CanonicalEstimate weak_lower_canonical(const OrbitProfile& profile, double delta);

struct InequalityVerdict {
    bool pass = false;
    double margin = 0.0; // delta + tol - alpha estimate
    double alpha_upper = 0.0;
    double delta_value = 0.0;
    double tolerance = 0.0;
};

/// Checks the fundamental inequality alpha-bar <= delta at the estimate
/// level, comparing the headline alpha estimate against delta + tol.
InequalityVerdict check_fundamental_inequality(const AlphaEstimate& alpha,
                                               const DeltaEstimate& delta, double tol);

double default_inequality_tolerance(const DeltaEstimate& delta);

struct IterateIdentityReport {
    double lhs = 0.0;            // weak lower canonical height of f at P
    double rhs = 0.0;            // min_i delta^-i hcirc_{f^m}(f^i P)
    std::vector<double> rhs_terms;
    double relative_discrepancy = 0.0;
    bool truncated = false;
};

/// Compares both sides of the liminf iterate identity
/// hcirc_f(P) = min_{0<=i<m} delta^-i hcirc_{f^m}(f^i P)
/// using finite-orbit surrogates. delta is the dynamical degree of f.
IterateIdentityReport hcirc_iterate_identity(const RationalMap& f, const ProjPoint& P,
                                             int m, int max_n, double delta);

} // namespace adegree
