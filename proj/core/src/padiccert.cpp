#include "adegree/padiccert.hpp"

#include <algorithm>
#include <cmath>

#include "adegree/heights.hpp"
#include "adegree/parse.hpp"

namespace adegree {

bool FixedPointForm::permuted() const {
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        if (permutation[i] != static_cast<int>(i)) return true;
    }
    return false;
}

std::optional<FixedPointForm> fixed_point_form(const RationalMap& f, std::string* violation) {
    const int nv = f.num_vars();
    const int d = f.degree();
    if (!f.extends_affine()) {
        if (violation) *violation = "last coordinate is not W^d";
        return std::nullopt;
    }
    // Ideal generated by X1..X_{N-1} and W (indices 1..nv-1).
    std::vector<int> ideal_vars;
    for (int v = 1; v < nv; ++v) ideal_vars.push_back(v);

    Rat a = f.coord(0).coefficient_of_power(0);
    if (a == 0) {
        if (violation) *violation = "first coordinate has no X0^" + std::to_string(d) + " term";
        return std::nullopt;
    }
    std::vector<HomPoly> tails;
    Expo pure(nv, 0);
    pure[0] = static_cast<std::uint32_t>(d);
    HomPoly g1 = f.coord(0) - HomPoly::monomial(nv, pure, a);
    for (int i = 0; i < nv - 1; ++i) {
        const HomPoly& gi = i == 0 ? g1 : f.coord(i);
        if (!gi.in_variable_ideal(ideal_vars)) {
            if (violation) {
                for (const auto& t : gi.terms()) {
                    bool ok = false;
                    for (int v : ideal_vars) {
                        if (t.expo[v] > 0) { ok = true; break; }
                    }
                    if (!ok) {
                        *violation = "coordinate " + std::to_string(i) + " has monomial " +
                                     poly_to_string(HomPoly::monomial(nv, t.expo, t.coeff)) +
                                     " outside (X1..W)";
                        break;
                    }
                }
            }
            return std::nullopt;
        }
        tails.push_back(gi);
    }
    std::vector<int> identity(nv);
    for (int i = 0; i < nv; ++i) identity[i] = i;
    return FixedPointForm{f, a, std::move(tails), d, std::move(identity)};
}

RationalMap permute_map(const RationalMap& f, const std::vector<int>& perm) {
    const int nv = f.num_vars();
    if (static_cast<int>(perm.size()) != nv || perm[nv - 1] != nv - 1)
        throw std::invalid_argument("permutation must fix the last coordinate");
    std::vector<HomPoly> coords(static_cast<std::size_t>(nv), HomPoly::zero(nv));
    for (int i = 0; i < nv; ++i)
        coords[static_cast<std::size_t>(perm[i])] = f.coord(i).permute_variables(perm);
    return RationalMap(std::move(coords));
}

std::optional<FixedPointForm> find_fixed_point_form(const RationalMap& f,
                                                    std::string* violation) {
    const int nv = f.num_vars();
    std::vector<int> perm(nv);
    for (int i = 0; i < nv; ++i) perm[i] = i;
    if (auto form = fixed_point_form(f, violation)) return form;
    if (nv - 1 > 3) return std::nullopt; // caller supplies the ordering beyond N = 3
    std::vector<int> head(perm.begin(), perm.end() - 1);
    std::sort(head.begin(), head.end());
    while (std::next_permutation(head.begin(), head.end())) {
        std::vector<int> full = head;
        full.push_back(nv - 1);
        RationalMap g = permute_map(f, full);
        std::string ignored;
        if (auto form = fixed_point_form(g, violation ? violation : &ignored)) {
            form->permutation = full;
            return form;
        }
    }
    return std::nullopt;
}

Int choose_prime(const RationalMap& f) {
    std::vector<Rat> coeffs;
    for (const auto& c : f.coords()) {
        for (const auto& t : c.terms()) coeffs.push_back(t.coeff);
    }
    return smallest_unit_prime(coeffs);
}

std::string to_string(NeighborhoodKind k) {
    switch (k) {
        case NeighborhoodKind::FixedPointU: return "fixed-point";
        case NeighborhoodKind::Case3U: return "case3";
        case NeighborhoodKind::Case11Set: return "case11";
        case NeighborhoodKind::Case32Set: return "case32";
    }
    return "?";
}

std::string to_string(GrowthLaw law) {
    switch (law) {
        case GrowthLaw::DegreePower: return "degree-power";
        case GrowthLaw::Fibonacci: return "fibonacci";
    }
    return "?";
}

namespace {

long vp(const Rat& x, const Int& p) { return finite_valuation(x, p); }

} // namespace

bool in_neighborhood(const ProjPoint& P, const NeighborhoodSpec& spec) {
    const Int& p = spec.prime;
    switch (spec.kind) {
        case NeighborhoodKind::FixedPointU: {
            // Coprime integer coordinates: the first must be the p-unit.
            if (P[0] == 0 || padic_valuation_int(P[0], p) != 0) return false;
            for (std::size_t i = 1; i < P.size(); ++i) {
                if (P[i] != 0 && padic_valuation_int(P[i], p) < 1) return false;
            }
            return true;
        }
        case NeighborhoodKind::Case3U: {
            if (P.size() != 3) return false;
            if (P[0] == 0 || P[1] == 0 || P[2] == 0) return false;
            long vx = padic_valuation_int(P[0], p);
            long vy = padic_valuation_int(P[1], p);
            long vz = padic_valuation_int(P[2], p);
            long d = spec.degree;
            // |x| > |y| > |z| and |y|^d > |x|^{d-1}|z| in p-adic absolute value.
            return vx < vy && vy < vz && d * vy < (d - 1) * vx + vz;
        }
        case NeighborhoodKind::Case11Set:
        case NeighborhoodKind::Case32Set: {
            if (P.size() != 3 || P[2] == 0) return false;
            std::vector<Rat> affine = {rat_reduce(P[0], P[2]), rat_reduce(P[1], P[2])};
            return in_neighborhood(affine, spec);
        }
    }
    return false;
}

bool in_neighborhood(const std::vector<Rat>& affine, const NeighborhoodSpec& spec) {
    const Int& p = spec.prime;
    switch (spec.kind) {
        case NeighborhoodKind::Case11Set: {
            if (affine.size() != 2 || affine[0] == 0 || affine[1] == 0) return false;
            long u = vp(affine[0], p), w = vp(affine[1], p);
            return u == w && w <= -1;
        }
        case NeighborhoodKind::Case32Set: {
            if (affine.size() != 2 || affine[0] == 0 || affine[1] == 0) return false;
            long u = vp(affine[0], p), w = vp(affine[1], p);
            return u <= -1 && w < u;
        }
        case NeighborhoodKind::Case3U: {
            if (affine.size() != 2 || affine[0] == 0 || affine[1] == 0) return false;
            long u = vp(affine[0], p), w = vp(affine[1], p);
            long d = spec.degree;
            return u < w && w < 0 && d * w < (d - 1) * u;
        }
        case NeighborhoodKind::FixedPointU: {
            return in_neighborhood(ProjPoint::from_affine(affine), spec);
        }
    }
    return false;
}

Int fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("negative Fibonacci index");
    Int r;
    mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {

void require_unit_coefficients(const RationalMap& f, const Int& p) {
    for (const auto& c : f.coords()) {
        for (const auto& t : c.terms()) {
            if (finite_valuation(t.coeff, p) != 0)
                throw std::invalid_argument(
                    "prime " + p.get_str() + " is not admissible: coefficient " +
                    to_string(t.coeff) + " is not a unit");
        }
    }
}

void require_integral_coefficients(const RationalMap& f, const Int& p) {
    for (const auto& c : f.coords()) {
        for (const auto& t : c.terms()) {
            if (finite_valuation(t.coeff, p) < 0)
                throw std::invalid_argument("prime " + p.get_str() +
                                            " is not admissible: coefficients not p-integral");
        }
    }
}

// One affine step for a map extending an affine morphism: the last coordinate
// evaluates to 1 at [x.., 1].
std::vector<Rat> affine_apply(const RationalMap& f, const std::vector<Rat>& pt) {
    std::vector<Rat> hom = pt;
    hom.emplace_back(1);
    std::vector<Rat> image;
    for (int i = 0; i + 1 < f.num_vars(); ++i) image.push_back(f.coord(i).eval(hom));
    Rat wcoord = f.coords().back().eval(hom);
    if (wcoord != 1) {
        for (auto& c : image) c /= wcoord;
    }
    return image;
}

GrowthCertificate certify_fixed_point(const RationalMap& f_in, const std::vector<Rat>& affine,
                                      const NeighborhoodSpec& spec, int max_n) {
    std::string violation;
    auto form = find_fixed_point_form(f_in, &violation);
    if (!form)
        throw std::invalid_argument("map has no fixed-point normal form: " + violation);
    RationalMap f = form->permuted() ? permute_map(f_in, form->permutation) : f_in;

    const Int& p = spec.prime;
    if (finite_valuation(form->leading_coefficient, p) != 0)
        throw std::invalid_argument("prime is not admissible: leading coefficient not a unit");
    require_integral_coefficients(f, p);

    std::vector<Rat> pt = affine;
    if (form->permuted()) {
        std::vector<Rat> permuted(pt.size());
        for (std::size_t i = 0; i < pt.size(); ++i)
            permuted[static_cast<std::size_t>(form->permutation[i])] = pt[i];
        pt = permuted;
    }
    ProjPoint P = ProjPoint::from_affine(pt);
    if (!in_neighborhood(P, spec))
        throw std::invalid_argument("point is not in the fixed-point neighborhood");

    const int d = f.degree();
    const long v0 = padic_valuation_int(P.coords().back(), p);
    GrowthCertificate cert{spec, P};
    cert.growth_law = GrowthLaw::DegreePower;
    cert.lower_bound = static_cast<double>(v0) * std::log(p.get_d());
    cert.verified_steps = max_n;
    cert.pass = true;

    ProjPoint cur = P;
    Int dn(1);
    for (int n = 1; n <= max_n; ++n) {
        if (is_indeterminate(f, cur)) {
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "orbit hits indeterminacy";
            return cert;
        }
        cur = apply(f, cur);
        dn *= d;
        if (!in_neighborhood(cur, spec)) {
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "neighborhood invariance failed";
            return cert;
        }
        // Last coordinate is beta^(d^n) up to a unit, so p^(d^n v0) divides it
        // exactly; that alone forces h(f^n P) >= d^n v0 log p.
        const Int& w = cur.coords().back();
        Int needed = dn * v0;
        if (w == 0 || Int(padic_valuation_int(w, p)) < needed) {
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "valuation growth law failed";
            return cert;
        }
        double h = weil_height(cur);
        if (h + 1e-6 < dn.get_d() * cert.lower_bound) {
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "height lower bound failed";
            return cert;
        }
    }
    cert.message = "h(f^n P) >= d^n * " + std::to_string(cert.lower_bound) + " for n <= " +
                   std::to_string(max_n);
    return cert;
}

GrowthCertificate certify_fibonacci(const RationalMap& f, const std::vector<Rat>& affine,
                                    const NeighborhoodSpec& spec, int max_n) {
    const Int& p = spec.prime;
    require_unit_coefficients(f, p);
    if (!in_neighborhood(affine, spec))
        throw std::invalid_argument("point is not in the required p-adic set");
    if (affine.size() != 2) throw std::invalid_argument("Fibonacci laws are planar");

    const long u0 = vp(affine[0], p);
    const long w0 = vp(affine[1], p);
    GrowthCertificate cert{spec, ProjPoint::from_affine(affine)};
    cert.growth_law = GrowthLaw::Fibonacci;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    cert.lower_bound =
        (static_cast<double>(-u0) + phi * static_cast<double>(-w0)) / std::sqrt(5.0) *
        std::log(p.get_d());
    cert.verified_steps = max_n;
    cert.pass = true;

    std::vector<Rat> pt = affine;
    long vx = u0, vy = w0;
    for (int n = 1; n <= max_n; ++n) {
        pt = affine_apply(f, pt);
        if (pt[0] == 0 || pt[1] == 0) {
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "orbit left the torus";
            return cert;
        }
        long nvx = vp(pt[0], p), nvy = vp(pt[1], p);
        // Step recursion |x_{n+1}| = |y_n|, |y_{n+1}| = |x_n y_n|.
        if (nvx != vy || nvy != vx + vy) {
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "Fibonacci valuation recursion failed";
            return cert;
        }
        // Closed form v(x_n) = F_{n-1} u0 + F_n w0, v(y_n) = F_n u0 + F_{n+1} w0.
        Int ex = fibonacci(n - 1) * u0 + fibonacci(n) * w0;
        Int ey = fibonacci(n) * u0 + fibonacci(n + 1) * w0;
        if (Int(nvx) != ex || Int(nvy) != ey) {
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "Fibonacci closed form failed";
            return cert;
        }
        vx = nvx;
        vy = nvy;
    }
    cert.message = "v_p(y_n) = F_n v_p(x_0) + F_{n+1} v_p(y_0) for n <= " + std::to_string(max_n);
    return cert;
}

GrowthCertificate certify_case3(const RationalMap& f, const std::vector<Rat>& affine,
                                const NeighborhoodSpec& spec_in, int max_n) {
    NeighborhoodSpec spec = spec_in;
    spec.degree = f.degree();
    const Int& p = spec.prime;
    require_unit_coefficients(f, p);
    if (!in_neighborhood(affine, spec))
        throw std::invalid_argument("point is not in the required p-adic set");

    const long w0 = vp(affine[1], p);
    const long d = f.degree();
    GrowthCertificate cert{spec, ProjPoint::from_affine(affine)};
    cert.growth_law = GrowthLaw::DegreePower;
    cert.lower_bound = static_cast<double>(-w0) * std::log(p.get_d());
    cert.verified_steps = max_n;
    cert.pass = true;

    std::vector<Rat> pt = affine;
    long vy = w0;
    Int dn(1);
    for (int n = 1; n <= max_n; ++n) {
        pt = affine_apply(f, pt);
        dn *= d;
        if (pt[0] == 0 || pt[1] == 0 || !in_neighborhood(pt, spec)) {
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "neighborhood invariance failed";
            return cert;
        }
        long nvy = vp(pt[1], p);
        if (nvy > d * vy) { // |y_{n+1}| >= |y_n|^d
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "y-coordinate growth law failed";
            return cert;
        }
        if (Int(nvy) > dn * w0) { // |y_n| >= |y_0|^{d^n}
            cert.pass = false;
            cert.failed_step = n;
            cert.message = "height lower bound failed";
            return cert;
        }
        vy = nvy;
    }
    cert.message = "|y_n|_p >= |y_0|_p^{d^n} for n <= " + std::to_string(max_n);
    return cert;
}

} // namespace

GrowthCertificate certify(const RationalMap& f, const std::vector<Rat>& affine_point,
                          const NeighborhoodSpec& spec, int max_n) {
    if (max_n < 1) throw std::invalid_argument("need at least one verification step");
    switch (spec.kind) {
        case NeighborhoodKind::FixedPointU:
            return certify_fixed_point(f, affine_point, spec, max_n);
        case NeighborhoodKind::Case11Set:
        case NeighborhoodKind::Case32Set:
            return certify_fibonacci(f, affine_point, spec, max_n);
        case NeighborhoodKind::Case3U:
            return certify_case3(f, affine_point, spec, max_n);
    }
    throw std::invalid_argument("unknown neighborhood kind");
}

// ---------------------------------------------------------------------------
// Catalog case 3.1 closed form and certificate
// ---------------------------------------------------------------------------

namespace {

HomPoly p3(std::vector<HomPoly::Term> terms) { return HomPoly::from_terms(3, std::move(terms)); }

Expo e3(std::uint32_t a, std::uint32_t b, std::uint32_t c) { return Expo{a, b, c}; }

} // namespace

Case31Report case31_normal_form(const Rat& a, const Rat& c) {
    Case31Report report{
        RationalMap({p3({{e3(0, 1, 1), Rat(1)}}),
                     p3({{e3(2, 0, 0), Rat(1)}, {e3(0, 1, 1), a}, {e3(0, 0, 2), c}}),
                     p3({{e3(0, 0, 2), Rat(1)}})}),
        RationalMap::identity(3)};

    report.f_squared = map_iterate(report.f, 2);

    RationalMap expected({
        p3({{e3(2, 0, 0), Rat(1)}, {e3(0, 1, 1), a}, {e3(0, 0, 2), c}}),
        p3({{e3(2, 0, 0), a}, {e3(0, 2, 0), Rat(1)}, {e3(0, 1, 1), a * a},
            {e3(0, 0, 2), (a + 1) * c}}),
        p3({{e3(0, 0, 2), Rat(1)}}),
    });
    report.matches_closed_form = report.f_squared == expected;
    report.boundary_base_locus_empty = report.f_squared.is_morphism_candidate();

    // xi^2 - xi + a = 0 has rational roots iff 1 - 4a is a rational square.
    Rat disc = Rat(1) - Rat(4) * a;
    if (disc >= 0) {
        Int num = disc.get_num(), den = disc.get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
            Int sn, sd;
            mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
            Rat s = rat_reduce(sn, sd);
            report.fixed_xi.push_back((Rat(1) + s) / 2);
            if (s != 0) report.fixed_xi.push_back((Rat(1) - s) / 2);
        }
    }
    report.no_rational_fixed_point = report.fixed_xi.empty();

    if (!report.fixed_xi.empty()) {
        report.fixed_point_verified = true;
        for (const auto& xi : report.fixed_xi) {
            ProjPoint q = ProjPoint::from_rationals({Rat(1), xi, Rat(0)});
            if (is_indeterminate(report.f_squared, q) || !(apply(report.f_squared, q) == q))
                report.fixed_point_verified = false;
        }
    }
    return report;
}

Case31Certificate case31_fixed_point_certificate(const Rat& a, const Rat& c, int max_n) {
    Case31Report report = case31_normal_form(a, c);
    if (report.no_rational_fixed_point)
        throw std::domain_error("no rational boundary fixed point: xi^2 - xi + a irreducible");
    Rat xi = report.fixed_xi.front();

    // Move [1, xi, 0] to [1, 0, 0] by Y -> Y - xi X and conjugate f^2.
    RationalMap sigma({p3({{e3(1, 0, 0), Rat(1)}}),
                       p3({{e3(0, 1, 0), Rat(1)}, {e3(1, 0, 0), -xi}}),
                       p3({{e3(0, 0, 1), Rat(1)}})});
    RationalMap sigma_inv({p3({{e3(1, 0, 0), Rat(1)}}),
                           p3({{e3(0, 1, 0), Rat(1)}, {e3(1, 0, 0), xi}}),
                           p3({{e3(0, 0, 1), Rat(1)}})});
    RationalMap conj = map_compose(map_compose(sigma, report.f_squared), sigma_inv);

    Int prime = choose_prime(conj);
    // sigma^{-1}([1, p, p]) = [1, p + xi, p] lands the base point inside U.
    Rat p(prime);
    std::vector<Rat> base_point = {Rat(1) / p, (p + xi) / p};
    NeighborhoodSpec spec{prime, NeighborhoodKind::FixedPointU};
    // Certify the conjugated system at the transformed point.
    std::vector<Rat> transformed = {Rat(1) / p, Rat(1)};
    GrowthCertificate cert = certify(conj, transformed, spec, max_n);
    bool pass = cert.pass;
    return Case31Certificate{std::move(report), std::move(cert), std::move(xi),
                             std::move(prime), std::move(base_point), pass};
}

} // namespace adegree
