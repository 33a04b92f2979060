#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adegree/projmap.hpp"
#include "adegree/rational.hpp"

namespace adegree {

/// Normal form of an affine extension around the fixed point [1,0,...,0] at
/// infinity: first coordinate a*X0^d + G1 with every monomial of G1..GN
/// divisible by one of X1..X_{N-1},W, and last coordinate W^d.
struct FixedPointForm {
    RationalMap map;
    Rat leading_coefficient;
    std::vector<HomPoly> tail_polys; // G_1..G_N
    int degree = 0;
    std::vector<int> permutation; // variable relabeling applied, identity if none

    bool permuted() const;
};

/// Syntactic check in the given coordinate order. On failure returns nullopt
/// and, if requested, names the first violating monomial.
std::optional<FixedPointForm> fixed_point_form(const RationalMap& f,
                                               std::string* violation = nullptr);

/// Tries all permutations of the first N variables (N <= 3) before giving up.
std::optional<FixedPointForm> find_fixed_point_form(const RationalMap& f,
                                                    std::string* violation = nullptr);

/// Conjugate of f by the coordinate permutation perm (W must stay last).
RationalMap permute_map(const RationalMap& f, const std::vector<int>& perm);

/// Smallest prime p at which every nonzero coefficient of every coordinate
/// is a p-adic unit.
Int choose_prime(const RationalMap& f);

enum class NeighborhoodKind {
    FixedPointU, // x1 a unit, the rest in the maximal ideal
    Case3U,      // |x| > |y| > |z| and |y|^d > |x|^{d-1} |z|
    Case11Set,   // |x0| = |y0| > 1
    Case32Set,   // 1 < |x0| < |y0|
};

std::string to_string(NeighborhoodKind k);

struct NeighborhoodSpec {
    Int prime;
    NeighborhoodKind kind;
    int degree = 2; // used by Case3U
};

bool in_neighborhood(const ProjPoint& P, const NeighborhoodSpec& spec);
bool in_neighborhood(const std::vector<Rat>& affine, const NeighborhoodSpec& spec);

enum class GrowthLaw {
    DegreePower, // h(f^n P) >= d^n * c
    Fibonacci,   // valuations follow the Fibonacci recursion
};

std::string to_string(GrowthLaw law);

struct GrowthCertificate {
    NeighborhoodSpec spec;
    ProjPoint point;
    double lower_bound = 0.0;
    GrowthLaw growth_law = GrowthLaw::DegreePower;
    int verified_steps = 0;
    bool pass = false;
    int failed_step = -1;
    std::string message;
};

/// Verifies the growth law of the given neighborhood kind along the exact
/// orbit for n <= max_n and returns the resulting certificate. Membership
/// failures throw; a law violation comes back as a failed certificate.
GrowthCertificate certify(const RationalMap& f, const std::vector<Rat>& affine_point,
                          const NeighborhoodSpec& spec, int max_n);

/// Exact Fibonacci numbers, F(0) = 0, F(1) = 1.
Int fibonacci(int n);

// --- Catalog case 3.1 closed form -----------------------------------------

struct Case31Report {
    RationalMap f;
    RationalMap f_squared;
    bool matches_closed_form = false;
    bool boundary_base_locus_empty = false;
    std::vector<Rat> fixed_xi; // rational roots of xi^2 - xi + a
    bool no_rational_fixed_point = false;
    bool fixed_point_verified = false; // f^2 fixes [1, xi, 0]
};

/// Checks the quadratic family (y, x^2 + a y + c): its second iterate has an
/// explicit degree-2 closed form extending to a morphism, with boundary fixed
/// points [1, xi, 0] for xi^2 - xi + a = 0.
Case31Report case31_normal_form(const Rat& a, const Rat& c);

struct Case31Certificate {
    Case31Report report;
    GrowthCertificate certificate; // for the conjugated second iterate
    Rat xi;
    Int prime;
    std::vector<Rat> base_point; // affine point fed to the certificate
    bool pass = false;
};

/// Issues a fixed-point growth certificate for the second iterate of a case
/// 3.1 map with a rational boundary fixed point, after moving [1, xi, 0] to
/// [1, 0, 0] by the linear change Y -> Y - xi*X.
Case31Certificate case31_fixed_point_certificate(const Rat& a, const Rat& c, int max_n);

} // namespace adegree
