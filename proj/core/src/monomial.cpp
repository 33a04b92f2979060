#include "adegree/monomial.hpp"

#include <algorithm>
#include <cmath>

#include "adegree/budget.hpp"
#include "adegree/growth.hpp"

namespace adegree {

namespace {

void require_square(const IntMatrix& a) {
    if (a.empty()) throw std::invalid_argument("empty matrix");
    for (const auto& row : a) {
        if (row.size() != a.size()) throw std::invalid_argument("matrix must be square");
    }
}

} // namespace

IntMatrix matrix_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size();
    IntMatrix c(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

IntMatrix matrix_pow(const IntMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("matrix power must be >= 1");
    IntMatrix r = a;
    for (int i = 1; i < k; ++i) r = matrix_mul(r, a);
    return r;
}

Int matrix_det(const IntMatrix& a) {
    auto cp = monomial_char_poly(a);
    Int det = cp.back();
    if (a.size() % 2 == 1) det = -det;
    return det;
}

std::vector<Int> monomial_char_poly(const IntMatrix& a) {
    require_square(a);
    const std::size_t n = a.size();
    // Faddeev-LeVerrier; every division is exact over the integers.
    IntMatrix m(n, std::vector<Int>(n, Int(0)));
    std::vector<Int> c(n + 1, Int(0));
    c[0] = 1;
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1; // M_0 = I
    IntMatrix am = a;
    for (std::size_t k = 1; k <= n; ++k) {
        am = matrix_mul(a, m);
        Int tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
        Int ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[k] = -ck;
        m = am;
        for (std::size_t i = 0; i < n; ++i) m[i][i] += c[k];
    }
    Int det = c[n];
    if (n % 2 == 1) det = -det;
    if (det == 0) throw std::invalid_argument("matrix is singular (det(A) != 0 required)");
    return c;
}

namespace {

// Univariate integer polynomials, dense, index = power.
using UPoly = std::vector<Int>;

int updeg(const UPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

void uptrim(UPoly& p) { p.resize(static_cast<std::size_t>(updeg(p) + 1)); }

UPoly upmul_scalar(UPoly p, const Int& c) {
    for (auto& x : p) x *= c;
    return p;
}

UPoly upsub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    uptrim(a);
    return a;
}

UPoly upshift(const UPoly& p, int k) {
    UPoly r(p.size() + static_cast<std::size_t>(k), Int(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i + static_cast<std::size_t>(k)] = p[i];
    return r;
}

Int upcontent(const UPoly& p) {
    Int g(0);
    for (const auto& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g == 0 ? Int(1) : g;
}

UPoly upprim(UPoly p) {
    Int g = upcontent(p);
    if (updeg(p) >= 0 && p[static_cast<std::size_t>(updeg(p))] < 0) g = -g;
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return p;
}

UPoly upderiv(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(static_cast<long>(i)));
    uptrim(d);
    return d;
}

// Primitive gcd over Z[x] by a plain primitive PRS; inputs are small here.
UPoly upgcd(UPoly a, UPoly b) {
    a = upprim(std::move(a));
    b = upprim(std::move(b));
    if (updeg(a) < updeg(b)) std::swap(a, b);
    while (updeg(b) >= 0) {
        // Pseudo-remainder of a by b.
        UPoly r = a;
        const Int lb = b[static_cast<std::size_t>(updeg(b))];
        while (updeg(r) >= updeg(b) && updeg(r) >= 0) {
            int shift = updeg(r) - updeg(b);
            Int lr = r[static_cast<std::size_t>(updeg(r))];
            r = upsub(upmul_scalar(r, lb), upmul_scalar(upshift(b, shift), lr));
        }
        a = std::move(b);
        b = upprim(std::move(r));
    }
    return upprim(std::move(a));
}

// Exact division in Z[x] (quotient known to be integral).
UPoly updivexact(const UPoly& a, const UPoly& b) {
    UPoly r = a, q(a.size(), Int(0));
    int db = updeg(b);
    const Int lb = b[static_cast<std::size_t>(db)];
    while (updeg(r) >= db) {
        int shift = updeg(r) - db;
        Int lr = r[static_cast<std::size_t>(updeg(r))];
        Int qc;
        mpz_divexact(qc.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
        q[static_cast<std::size_t>(shift)] = qc;
        UPoly sub = upshift(b, shift);
        for (auto& x : sub) x *= qc;
        r = upsub(std::move(r), sub);
    }
    if (updeg(r) >= 0) throw std::logic_error("inexact univariate division");
    uptrim(q);
    return q;
}

std::complex<double> upeval(const UPoly& p, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = updeg(p); i >= 0; --i)
        acc = acc * z + std::complex<double>(p[static_cast<std::size_t>(i)].get_d(), 0.0);
    return acc;
}

} // namespace

SpectralEnclosure monomial_delta(const IntMatrix& a) {
    std::vector<Int> cp = monomial_char_poly(a);
    const std::size_t n = a.size();

    // Dense low-to-high copy for root finding; make it square-free so that
    // Newton polishing is quadratic even for repeated eigenvalues.
    UPoly p(n + 1);
    for (std::size_t k = 0; k <= n; ++k) p[k] = cp[n - k];
    UPoly g = upgcd(p, upderiv(p));
    UPoly sf = updeg(g) > 0 ? updivexact(p, g) : p;
    sf = upprim(std::move(sf));
    const int deg = updeg(sf);

    double cauchy = 1.0;
    {
        double lead = std::fabs(sf[static_cast<std::size_t>(deg)].get_d());
        double sum = 0.0;
        for (int i = 0; i < deg; ++i) sum += std::fabs(sf[static_cast<std::size_t>(i)].get_d());
        cauchy = std::max(1.0, 1.0 + sum / lead);
    }

    // Durand-Kerner with staggered initial guesses on a circle.
    std::vector<std::complex<double>> z(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        double theta = 2.0 * M_PI * i / deg + 0.4;
        z[static_cast<std::size_t>(i)] = std::polar(0.5 + 0.7 * cauchy, theta);
    }
    const Int lead = sf[static_cast<std::size_t>(deg)];
    const int max_iters = 500;
    int iters = 0;
    for (; iters < max_iters; ++iters) {
        double moved = 0.0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> num = upeval(sf, z[static_cast<std::size_t>(i)]) /
                                       std::complex<double>(lead.get_d(), 0.0);
            std::complex<double> den(1.0, 0.0);
            for (int j = 0; j < deg; ++j) {
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            }
            std::complex<double> delta = num / den;
            z[static_cast<std::size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    if (iters == max_iters)
        throw std::runtime_error("root finder did not converge after " +
                                 std::to_string(max_iters) + " iterations");

    UPoly dsf = upderiv(sf);
    double rho = 0.0;
    double err = 0.0;
    for (int i = 0; i < deg; ++i) {
        // Newton polish.
        for (int k = 0; k < 4; ++k) {
            std::complex<double> val = upeval(sf, z[static_cast<std::size_t>(i)]);
            std::complex<double> der = upeval(dsf, z[static_cast<std::size_t>(i)]);
            if (std::abs(der) == 0.0) break;
            z[static_cast<std::size_t>(i)] -= val / der;
        }
        double mod = std::abs(z[static_cast<std::size_t>(i)]);
        std::complex<double> val = upeval(sf, z[static_cast<std::size_t>(i)]);
        std::complex<double> der = upeval(dsf, z[static_cast<std::size_t>(i)]);
        double bound = std::abs(der) > 0 ? deg * std::abs(val) / std::abs(der) : 1e-9;
        if (mod > rho) {
            rho = mod;
            err = bound;
        } else if (mod > rho - 1e-12) {
            err = std::max(err, bound);
        }
    }

    SpectralEnclosure enc;
    enc.roots = z;
    enc.iterations = iters;
    double half = std::max(4.0 * err + 16.0 * 1e-16 * rho, 2e-10);
    enc.lo = rho - half;
    enc.hi = rho + half;
    // |det| >= 1 forces the spectral radius to be at least 1, and the Cauchy
    // bound caps it from above.
    enc.lo = std::max(enc.lo, 1.0);
    enc.hi = std::min(enc.hi, cauchy + 1e-12);
    if (enc.lo > enc.hi) std::swap(enc.lo, enc.hi);
    return enc;
}

MonomialMap make_monomial_map(const IntMatrix& a) {
    MonomialMap m;
    m.matrix = a;
    m.char_poly = monomial_char_poly(a);
    m.spectral_radius = monomial_delta(a);
    return m;
}

// ---------------------------------------------------------------------------
// Exponent orbits
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<Int, long>> factor_small(Int x) {
    std::vector<std::pair<Int, long>> factors;
    x = abs(x);
    if (x == 0) throw std::invalid_argument("cannot factor zero");
    for (Int p(2); p * p <= x; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (x % p == 0) {
            long e = padic_valuation_int(x, p);
            factors.emplace_back(p, e);
            for (long i = 0; i < e; ++i) x /= p;
        }
        if (p > 1000000) break;
    }
    if (x > 1) {
        if (!is_prime(x)) throw std::invalid_argument("start coordinate has a large composite factor");
        factors.emplace_back(x, 1);
    }
    return factors;
}

} // namespace

std::vector<Rat> ExponentOrbit::coordinates(int n) const {
    const auto& vals = valuations.at(static_cast<std::size_t>(n));
    std::vector<Rat> coords;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        Int num(1), den(1);
        for (std::size_t k = 0; k < base_primes.size(); ++k) {
            const Int& v = vals[i][k];
            if (v > 1000000 || v < -1000000) throw budget_error("coordinate too large to reconstruct");
            if (v >= 0) num *= pow_int(base_primes[k], v.get_ui());
            else den *= pow_int(base_primes[k], Int(-v).get_ui());
        }
        if (negative[static_cast<std::size_t>(n)][i]) num = -num;
        coords.push_back(rat_reduce(num, den));
    }
    return coords;
}

ProjPoint ExponentOrbit::point(int n) const {
    return ProjPoint::from_affine(coordinates(n));
}

ExponentOrbit monomial_orbit(const IntMatrix& a, const std::vector<Rat>& start, int max_n) {
    require_square(a);
    const std::size_t n = a.size();
    if (start.size() != n) throw std::invalid_argument("start point arity mismatch");
    for (const auto& t : start) {
        if (t == 0) throw std::invalid_argument("start coordinates must be nonzero");
    }

    ExponentOrbit orbit;
    // Prime support of all coordinates.
    for (const auto& t : start) {
        for (const Int& part : {Int(t.get_num()), Int(t.get_den())}) {
            if (part == 1 || part == -1) continue;
            for (const auto& [p, e] : factor_small(part)) {
                if (std::find(orbit.base_primes.begin(), orbit.base_primes.end(), p) ==
                    orbit.base_primes.end())
                    orbit.base_primes.push_back(p);
            }
        }
    }
    std::sort(orbit.base_primes.begin(), orbit.base_primes.end());

    const std::size_t np = orbit.base_primes.size();
    std::vector<std::vector<Int>> vals(n, std::vector<Int>(np, Int(0)));
    std::vector<bool> neg(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        neg[i] = start[i] < 0;
        for (std::size_t k = 0; k < np; ++k) {
            vals[i][k] = Int(padic_valuation_int(start[i].get_num(), orbit.base_primes[k]) -
                             padic_valuation_int(start[i].get_den(), orbit.base_primes[k]));
        }
    }

    std::vector<double> logp;
    for (const auto& p : orbit.base_primes) logp.push_back(std::log(p.get_d()));

    auto height_of = [&](const std::vector<std::vector<Int>>& v) {
        double h = 0.0;
        // Nonarchimedean places: only denominators contribute.
        for (std::size_t k = 0; k < np; ++k) {
            Int worst(0);
            for (std::size_t i = 0; i < n; ++i) worst = std::min(worst, v[i][k]);
            if (worst < 0) h += -worst.get_d() * logp[k];
        }
        // Archimedean place: log max(|t_i|, 1) from exact exponent data.
        double arch = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double logt = 0.0;
            for (std::size_t k = 0; k < np; ++k) logt += v[i][k].get_d() * logp[k];
            arch = std::max(arch, logt);
        }
        return h + std::max(0.0, arch);
    };

    orbit.valuations.push_back(vals);
    orbit.negative.push_back(neg);
    orbit.heights.push_back(height_of(vals));

    for (int step = 1; step <= max_n; ++step) {
        std::vector<std::vector<Int>> next(n, std::vector<Int>(np, Int(0)));
        std::vector<bool> nneg(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            bool s = false;
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < np; ++k) next[i][k] += a[i][j] * vals[j][k];
                if (neg[j] && mpz_odd_p(Int(a[i][j]).get_mpz_t())) s = !s;
            }
            nneg[i] = s;
        }
        vals = std::move(next);
        neg = std::move(nneg);
        orbit.valuations.push_back(vals);
        orbit.negative.push_back(neg);
        orbit.heights.push_back(height_of(vals));
    }
    return orbit;
}

MonomialAlphaReport monomial_alpha_check(const ExponentOrbit& orbit, const IntMatrix& a,
                                         double tol) {
    if (orbit.steps() < 8) throw std::invalid_argument("orbit too short: need >= 8 steps");
    MonomialAlphaReport report;
    SpectralEnclosure enc = monomial_delta(a);
    report.delta = enc.mid();

    bool all_zero = std::all_of(orbit.heights.begin(), orbit.heights.end(),
                                [](double h) { return h < 1e-12; });
    if (all_zero) {
        report.alpha = 1.0;
        report.torsion = true;
    } else {
        std::vector<double> hplus(orbit.heights.begin() + 1, orbit.heights.end());
        for (auto& h : hplus) h = std::max(1.0, h);
        report.alpha = estimate_growth_rate(hplus).best;
    }

    report.distance = 1e300;
    for (const auto& z : enc.roots) {
        double mod = std::abs(z);
        double dist = std::fabs(report.alpha - mod);
        if (dist < report.distance) {
            report.distance = dist;
            report.nearest_eigenvalue_modulus = mod;
        }
    }
    report.pass = report.distance <= tol;
    return report;
}

} // namespace adegree
