#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adegree/rational.hpp"

namespace adegree {

/// Exponent vector of a monomial; entries indexed by variable.
using Expo = std::vector<std::uint32_t>;

int expo_degree(const Expo& e);

/// Graded lexicographic order with X0 > X1 > ... Returns <0, 0, >0.
int grlex_cmp(const Expo& a, const Expo& b);

/// Homogeneous multivariate polynomial with exact rational coefficients.
/// Terms are stored sorted descending in graded-lex; no zero coefficients.
/// The zero polynomial has no terms and degree() == -1.
class HomPoly {
public:
    struct Term {
        Expo expo;
        Rat coeff;
    };

    explicit HomPoly(int num_vars = 1) : num_vars_(num_vars) {
        if (num_vars < 1) throw std::invalid_argument("need at least one variable");
    }

    /// Builds from unsorted terms; merges duplicates, drops zeros, checks
    /// homogeneity.
    static HomPoly from_terms(int num_vars, std::vector<Term> terms);
    static HomPoly zero(int num_vars) { return HomPoly(num_vars); }
    static HomPoly constant(int num_vars, const Rat& c);
    static HomPoly monomial(int num_vars, Expo e, const Rat& c);
    /// The i-th coordinate variable as a degree-1 polynomial.
    static HomPoly variable(int num_vars, int i);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : expo_degree(terms_.front().expo); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    bool is_constant() const { return terms_.empty() || degree() == 0; }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Total coefficient bits, used for budget enforcement.
    std::int64_t coefficient_bits() const;

    HomPoly operator-() const;
    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly operator*(const Rat& c) const;
    bool operator==(const HomPoly& o) const;

    Rat eval(std::span<const Rat> point) const;
    HomPoly derivative(int var) const;

    /// True when every monomial has positive exponent on some variable in
    /// `vars`.
    bool in_variable_ideal(const std::vector<int>& vars) const;

    /// Coefficient of the pure power X_i^degree (zero if absent).
    Rat coefficient_of_power(int var) const;

    /// Degree in a single variable (max exponent), -1 for zero.
    int degree_in(int var) const;

    /// Substitute 0 for variable `var`, keeping the same variable count.
    HomPoly substitute_zero(int var) const;

    /// Rename variables: result variable perm[i] gets old variable i.
    HomPoly permute_variables(const std::vector<int>& perm) const;

    /// Content (gcd of coefficients as a positive rational) and the integer
    /// primitive part. For a polynomial with rational coefficients,
    /// primitive_part() has coprime integer coefficients with positive
    /// leading coefficient, and *this == signed_content * primitive_part.
    Rat content() const;
    HomPoly primitive_part() const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    void check_budget(const char* op) const;

    int num_vars_;
    std::vector<Term> terms_;
};

HomPoly operator*(const Rat& c, const HomPoly& p);

HomPoly poly_mul(const HomPoly& a, const HomPoly& b);

/// f(g0, ..., g_{n-1}) where every g_i is homogeneous of one common degree.
HomPoly poly_compose(const HomPoly& f, const std::vector<HomPoly>& g);

/// Primitive gcd with positive leading coefficient (graded-lex). Subresultant
/// PRS on the last variable with recursive content splitting; every result is
/// verified by exact trial division.
HomPoly poly_gcd(const HomPoly& a, const HomPoly& b);

Rat poly_eval(const HomPoly& f, std::span<const Rat> point);

/// Exact quotient a / g; throws std::domain_error when g does not divide a.
HomPoly poly_divexact(const HomPoly& a, const HomPoly& g);
bool poly_divides(const HomPoly& g, const HomPoly& a);

} // namespace adegree
