#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adegree/growth.hpp"
#include "adegree/hompoly.hpp"

namespace adegree {

/// Point of P^N(Q) with coprime integer coordinates, first nonzero positive.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Int> coords);
    static ProjPoint from_rationals(const std::vector<Rat>& coords);
    /// Affine point (a_1, ..., a_N) placed as [a_1 : ... : a_N : 1].
    static ProjPoint from_affine(const std::vector<Rat>& affine);

    const std::vector<Int>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }

    std::string to_string() const;

private:
    std::vector<Int> coords_;
};

/// Dominantable rational self-map of P^N: N+1 coprime primitive homogeneous
/// coordinates of a common degree.
class RationalMap {
public:
    RationalMap(std::vector<HomPoly> coords);

    int num_vars() const { return static_cast<int>(coords_.size()); }
    int dimension() const { return num_vars() - 1; }
    int degree() const {
        for (const auto& c : coords_) {
            if (!c.is_zero()) return c.degree();
        }
        return -1;
    }
    const std::vector<HomPoly>& coords() const { return coords_; }
    const HomPoly& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    bool operator==(const RationalMap& o) const { return coords_ == o.coords_; }

    static RationalMap identity(int num_vars);
    bool is_identity() const;

    /// True when the last coordinate is Z^d (extension of an affine map).
    bool extends_affine() const;

    /// Empty-base-locus test. Exact for affine extensions on P^2 (the base
    /// locus lives on the boundary line, where it reduces to a bivariate
    /// gcd); false for anything else.
    bool is_morphism_candidate() const;

    /// Jacobian determinant of the coordinate polynomials; the map is
    /// dominant iff this is not identically zero.
    HomPoly jacobian_determinant() const;
    bool is_dominant() const { return !jacobian_determinant().is_zero(); }

    std::string to_string() const;

private:
    std::vector<HomPoly> coords_;
};

/// Homogenize N affine components (variables x1..xN) to a self-map of P^N
/// with last coordinate Z^d. Throws when all components are constant.
RationalMap map_from_affine(const std::vector<std::string>& components);
RationalMap map_from_affine_polys(const std::vector<HomPoly>& homogenized, int degree);

/// Parses "A2: (y^2, x)" or "P2: [Y^2, X*Z, Z^2]".
RationalMap parse_map(const std::string& dsl);
std::string map_to_string(const RationalMap& f);

/// Normalized composition f after g: coordinates composed, common polynomial
/// factor cancelled, integer-primitive. Throws on identically zero result.
RationalMap map_compose(const RationalMap& f, const RationalMap& g);

RationalMap map_iterate(const RationalMap& f, int n);

bool is_indeterminate(const RationalMap& f, const ProjPoint& P);

/// Image point with exact normalization. Throws std::domain_error when P is
/// in the indeterminacy locus.
ProjPoint apply(const RationalMap& f, const ProjPoint& P);

struct DegreeSequence {
    std::vector<Int> degs; // degs[n-1] = deg(f^n)
    bool truncated = false;
    std::string truncation_reason;

    int max_n() const { return static_cast<int>(degs.size()); }
};

/// Degrees of the normalized iterates f^1..f^maxN. On budget exhaustion the
/// partial sequence is returned with the truncation flag set.
DegreeSequence degree_sequence(const RationalMap& f, int max_n);

// --- Boundary orbit analysis on P^2 (algebraic stability) -----------------

enum class BoundaryKind { Line, Curve, Point, Empty };

struct BoundaryStep {
    BoundaryKind kind;
    std::optional<ProjPoint> point; // set for Point steps
    std::string description;
};

struct BoundaryOrbit {
    std::vector<BoundaryStep> varieties;
    enum class Verdict { Stable, Unstable } verdict = Verdict::Stable;
    int unstable_step = -1;    // first n with V_n empty
    int cycle_period = -1;     // set when a revisited state proves stability
    bool heuristic = false;    // stable by deep prefix only, not a cycle
    std::string note;

    bool stable() const { return verdict == Verdict::Stable; }
};

/// Tracks the forward images of the line at infinity under an affine
/// extension of A^2 -> A^2. Stability follows when the images stay nonempty
/// forever, which a revisited state certifies.
BoundaryOrbit stability_analysis(const RationalMap& f, int max_steps = 16);

// --- Dynamical degree estimation -------------------------------------------

enum class ExactDeltaSource { StableDegree, MonomialSpectral, Catalog };

struct DeltaEstimate {
    std::vector<double> root_estimates;
    std::vector<double> ratio_estimates;
    double best = 1.0;
    GrowthMethod method = GrowthMethod::LogSlope;
    std::optional<double> exact;
    std::optional<ExactDeltaSource> exact_source;

    double value() const { return exact ? *exact : best; }
};

struct ExactDeltaHint {
    double value;
    ExactDeltaSource source;
};

DeltaEstimate delta_estimate(const DegreeSequence& seq,
                             std::optional<ExactDeltaHint> hint = std::nullopt);

} // namespace adegree
