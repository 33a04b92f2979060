#include "adegree/rational.hpp"

#include <atomic>
#include <vector>

#include "adegree/budget.hpp"

namespace adegree {

namespace {
std::atomic<std::int64_t> g_budget_bits{std::int64_t(1) << 20};
}

std::int64_t coefficient_bit_budget() { return g_budget_bits.load(); }

void set_coefficient_bit_budget(std::int64_t bits) {
    if (bits <= 0) throw std::invalid_argument("bit budget must be positive");
    g_budget_bits.store(bits);
}

Rat rat_reduce(const Int& n, const Int& d) {
    if (d == 0) throw std::invalid_argument("division by zero");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

long padic_valuation_int(const Int& x, const Int& p) {
    if (x == 0) throw std::invalid_argument("valuation of zero is infinite");
    Int reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

PadicValuation padic_valuation(const Rat& x, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("invalid prime");
    if (x == 0) return PadicValuation{p, true, 0};
    long v = padic_valuation_int(x.get_num(), p) - padic_valuation_int(x.get_den(), p);
    return PadicValuation{p, false, v};
}

long finite_valuation(const Rat& x, const Int& p) {
    PadicValuation v = padic_valuation(x, p);
    if (v.infinite) throw std::invalid_argument("valuation of zero is infinite");
    return v.value;
}

int bit_length(const Int& x) {
    if (x == 0) return 1;
    return static_cast<int>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

int bit_length(const Rat& x) {
    return bit_length(Int(x.get_num())) + bit_length(Int(x.get_den()));
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rat q{Int(text)};
            return q;
        }
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        return rat_reduce(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

Int smallest_unit_prime(const std::vector<Rat>& values) {
    Int p = 2;
    for (;;) {
        bool ok = true;
        for (const auto& v : values) {
            if (v == 0) throw std::invalid_argument("zero has no unit prime");
            if (finite_valuation(v, p) != 0) { ok = false; break; }
        }
        if (ok) return p;
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
}

} // namespace adegree
