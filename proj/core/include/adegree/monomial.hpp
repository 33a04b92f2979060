#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "adegree/projmap.hpp"
#include "adegree/rational.hpp"

namespace adegree {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix matrix_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_pow(const IntMatrix& a, int k);
Int matrix_det(const IntMatrix& a);

/// Exact characteristic polynomial, coefficients of lambda^N .. lambda^0.
/// Throws when the matrix is singular (det(A) != 0 is required throughout).
std::vector<Int> monomial_char_poly(const IntMatrix& a);

struct SpectralEnclosure {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<std::complex<double>> roots; // of the square-free part
    int iterations = 0;

    double mid() const { return (lo + hi) / 2; }
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Spectral radius of an integer matrix as a certified-width enclosure: the
/// maximum root modulus of the characteristic polynomial, polished by Newton
/// iteration on the square-free part and sandwiched against the Cauchy bound.
SpectralEnclosure monomial_delta(const IntMatrix& a);

struct MonomialMap {
    IntMatrix matrix;
    std::vector<Int> char_poly;
    SpectralEnclosure spectral_radius;

    int size() const { return static_cast<int>(matrix.size()); }
};

MonomialMap make_monomial_map(const IntMatrix& a);

/// Orbit of a torus point under a monomial map, tracked as exact valuation
/// vectors over the prime support of the start coordinates. Heights never
/// require reconstructing the (astronomically large) coordinates.
struct ExponentOrbit {
    std::vector<Int> base_primes;
    // valuations[n][i][k]: v_{p_k} of coordinate t_i at step n.
    std::vector<std::vector<std::vector<Int>>> valuations;
    std::vector<std::vector<bool>> negative; // sign bit per coordinate per step
    std::vector<double> heights;

    int steps() const { return static_cast<int>(valuations.size()) - 1; }
    /// Exact coordinates at one step; throws budget_error when too large.
    std::vector<Rat> coordinates(int n) const;
    ProjPoint point(int n) const;
};

ExponentOrbit monomial_orbit(const IntMatrix& a, const std::vector<Rat>& start, int max_n);

struct MonomialAlphaReport {
    double alpha = 1.0;
    double delta = 1.0;
    double nearest_eigenvalue_modulus = 1.0;
    double distance = 0.0;
    bool pass = false;
    bool torsion = false;
};

/// Estimates the arithmetic degree along a monomial orbit and matches it
/// against the eigenvalue moduli of the exponent matrix.
MonomialAlphaReport monomial_alpha_check(const ExponentOrbit& orbit, const IntMatrix& a,
                                         double tol = 0.05);

} // namespace adegree
