#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace adegree {

using Int = mpz_class;
using Rat = mpq_class;

/// n/d in lowest terms with positive denominator. Throws on d == 0.
Rat rat_reduce(const Int& n, const Int& d);
inline Rat rat_reduce(long n, long d) { return rat_reduce(Int(n), Int(d)); }

bool is_prime(const Int& p);

/// p-adic valuation of a rational. `infinite` is the conventional value for 0.
struct PadicValuation {
    Int prime;
    bool infinite = false;
    long value = 0;

    bool operator==(const PadicValuation&) const = default;
};

/// v_p(x). Throws std::invalid_argument unless p is prime.
PadicValuation padic_valuation(const Rat& x, const Int& p);
long padic_valuation_int(const Int& x, const Int& p);

/// Finite valuation as long, throwing if x == 0.
long finite_valuation(const Rat& x, const Int& p);

int bit_length(const Int& x);
int bit_length(const Rat& x);

Int pow_int(const Int& base, unsigned long exp);

std::string to_string(const Rat& x);
Rat parse_rational(const std::string& text);

/// Smallest prime p such that every entry of `values` is a p-adic unit
/// (valuation zero). All entries must be nonzero.
Int smallest_unit_prime(const std::vector<Rat>& values);

} // namespace adegree
