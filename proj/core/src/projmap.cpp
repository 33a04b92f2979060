#include "adegree/projmap.hpp"

#include <algorithm>
#include <sstream>

#include "adegree/budget.hpp"
#include "adegree/parse.hpp"

namespace adegree {

// ---------------------------------------------------------------------------
// ProjPoint
// ---------------------------------------------------------------------------

ProjPoint::ProjPoint(std::vector<Int> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw std::invalid_argument("projective point needs >= 2 coordinates");
    Int g(0);
    for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw std::invalid_argument("projective point cannot be all zero");
    for (auto& c : coords_) c /= g;
    for (const auto& c : coords_) {
        if (c != 0) {
            if (c < 0) {
                for (auto& x : coords_) x = -x;
            }
            break;
        }
    }
}

ProjPoint ProjPoint::from_rationals(const std::vector<Rat>& coords) {
    Int lcm(1);
    for (const auto& q : coords) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> ints;
    ints.reserve(coords.size());
    for (const auto& q : coords) ints.push_back(Int(q * Rat(lcm)));
    return ProjPoint(std::move(ints));
}

ProjPoint ProjPoint::from_affine(const std::vector<Rat>& affine) {
    std::vector<Rat> coords = affine;
    coords.push_back(Rat(1));
    return from_rationals(coords);
}

std::string ProjPoint::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out << (i ? " : " : "") << coords_[i].get_str();
    out << "]";
    return out.str();
}

// ---------------------------------------------------------------------------
// RationalMap
// ---------------------------------------------------------------------------

namespace {

// Divide the coordinate list by its full polynomial gcd and scale to overall
// integer content 1 with the first nonzero leading coefficient positive.
std::vector<HomPoly> normalize_coords(std::vector<HomPoly> coords) {
    bool all_zero = std::all_of(coords.begin(), coords.end(),
                                [](const HomPoly& p) { return p.is_zero(); });
    if (all_zero) throw std::domain_error("degenerate composition");

    // Run the gcd chain from the sparsest coordinate up: for affine
    // extensions the last coordinate is a pure power of Z, which keeps the
    // whole chain on the cheap monomial path.
    std::vector<const HomPoly*> order;
    for (const auto& c : coords) {
        if (!c.is_zero()) order.push_back(&c);
    }
    std::sort(order.begin(), order.end(), [](const HomPoly* x, const HomPoly* y) {
        return x->term_count() < y->term_count();
    });
    HomPoly g = HomPoly::zero(coords.front().num_vars());
    for (const HomPoly* c : order) {
        g = g.is_zero() ? *c : poly_gcd(g, *c);
        if (g.is_constant()) break;
    }
    if (!g.is_constant()) {
        for (auto& c : coords) {
            if (!c.is_zero()) c = poly_divexact(c, g);
        }
    }

    // Common rational scale: overall content across every coordinate.
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : coords) {
        for (const auto& t : c.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        }
    }
    Rat scale = rat_reduce(den_lcm, num_gcd); // multiply by this
    for (const auto& c : coords) {
        if (!c.is_zero()) {
            if (c.leading_term().coeff * scale < 0) scale = -scale;
            break;
        }
    }
    for (auto& c : coords) c = c * scale;
    return coords;
}

} // namespace

RationalMap::RationalMap(std::vector<HomPoly> coords) {
    if (coords.size() < 2) throw std::invalid_argument("map needs at least two coordinates");
    int nv = coords.front().num_vars();
    if (static_cast<int>(coords.size()) != nv)
        throw std::invalid_argument("self-map of P^N needs N+1 coordinates in N+1 variables");
    int deg = -1;
    for (const auto& c : coords) {
        if (c.num_vars() != nv) throw std::invalid_argument("coordinate variable mismatch");
        if (c.is_zero()) continue;
        if (deg == -1) deg = c.degree();
        else if (c.degree() != deg) throw std::invalid_argument("coordinates have mixed degrees");
    }
    coords_ = normalize_coords(std::move(coords));
    // A full cancellation down to constants means the composition collapsed.
    if (degree() < 1) throw std::domain_error("degenerate composition");
}

RationalMap RationalMap::identity(int num_vars) {
    std::vector<HomPoly> coords;
    for (int i = 0; i < num_vars; ++i) coords.push_back(HomPoly::variable(num_vars, i));
    return RationalMap(std::move(coords));
}

bool RationalMap::is_identity() const {
    return *this == identity(num_vars());
}

bool RationalMap::extends_affine() const {
    int nv = num_vars();
    Expo e(nv, 0);
    e[nv - 1] = static_cast<std::uint32_t>(degree());
    return coords_.back() == HomPoly::monomial(nv, e, Rat(1));
}

bool RationalMap::is_morphism_candidate() const {
    // Exact only for maps extending affine ones: the base locus must avoid
    // {Z != 0} because an affine morphism is everywhere defined, so emptiness
    // reduces to the boundary slice.
    if (!extends_affine()) return false;
    int nv = num_vars();
    std::vector<HomPoly> boundary;
    for (int i = 0; i + 1 < nv; ++i) boundary.push_back(coords_[i].substitute_zero(nv - 1));
    if (nv == 3) {
        HomPoly g = HomPoly::zero(nv);
        for (const auto& b : boundary) {
            if (b.is_zero()) return false;
            g = g.is_zero() ? b : poly_gcd(g, b);
        }
        return g.is_constant();
    }
    return false;
}

HomPoly RationalMap::jacobian_determinant() const {
    int nv = num_vars();
    std::vector<std::vector<HomPoly>> j(nv, std::vector<HomPoly>());
    for (int i = 0; i < nv; ++i) {
        for (int v = 0; v < nv; ++v) j[i].push_back(coords_[i].derivative(v));
    }
    // Cofactor expansion; nv is 3 or 4 in practice.
    std::function<HomPoly(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> HomPoly {
        if (rows.size() == 1) return j[rows[0]][cols[0]];
        HomPoly acc = HomPoly::zero(nv);
        bool first = true;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::vector<int> sub_rows(rows.begin() + 1, rows.end());
            std::vector<int> sub_cols;
            for (std::size_t m = 0; m < cols.size(); ++m)
                if (m != k) sub_cols.push_back(cols[m]);
            HomPoly term = poly_mul(j[rows[0]][cols[k]], det(sub_rows, sub_cols));
            if (k % 2 == 1) term = -term;
            if (term.is_zero()) continue;
            if (first) { acc = term; first = false; }
            else acc = acc + term;
        }
        return acc;
    };
    std::vector<int> idx(nv);
    for (int i = 0; i < nv; ++i) idx[i] = i;
    return det(idx, idx);
}

std::string RationalMap::to_string() const { return map_to_string(*this); }

RationalMap map_from_affine(const std::vector<std::string>& components) {
    int n = static_cast<int>(components.size());
    int d = 0;
    for (const auto& c : components) d = std::max(d, affine_expression_degree(c, n));
    if (d < 1) throw std::invalid_argument("map not dominant-capable");
    std::vector<HomPoly> coords;
    for (const auto& c : components) coords.push_back(parse_affine_homogenized(c, n, d));
    Expo e(n + 1, 0);
    e[n] = static_cast<std::uint32_t>(d);
    coords.push_back(HomPoly::monomial(n + 1, e, Rat(1)));
    return RationalMap(std::move(coords));
}

RationalMap map_from_affine_polys(const std::vector<HomPoly>& homogenized, int degree) {
    std::vector<HomPoly> coords = homogenized;
    int nv = static_cast<int>(homogenized.size()) + 1;
    Expo e(nv, 0);
    e[nv - 1] = static_cast<std::uint32_t>(degree);
    coords.push_back(HomPoly::monomial(nv, e, Rat(1)));
    return RationalMap(std::move(coords));
}

RationalMap parse_map(const std::string& dsl) {
    std::size_t colon = dsl.find(':');
    if (colon == std::string::npos || colon < 2)
        throw parse_error("expected 'A<n>:' or 'P<n>:' prefix", 0);
    char kind = dsl[0];
    int n = 0;
    for (std::size_t i = 1; i < colon; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(dsl[i])))
            throw parse_error("malformed dimension in map prefix", i);
        n = n * 10 + (dsl[i] - '0');
    }
    if (n < 1 || n > 8) throw parse_error("unsupported dimension", 1);
    std::string body = dsl.substr(colon + 1);
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    body = trim(body);

    auto split_top_level = [&](const std::string& s) {
        std::vector<std::string> parts;
        int depth = 0;
        std::string cur;
        for (char c : s) {
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            if (c == ',' && depth == 0) {
                parts.push_back(trim(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        parts.push_back(trim(cur));
        return parts;
    };

    if (kind == 'A') {
        if (body.size() < 2 || body.front() != '(' || body.back() != ')')
            throw parse_error("affine map body must be parenthesized", colon + 1);
        auto parts = split_top_level(body.substr(1, body.size() - 2));
        if (static_cast<int>(parts.size()) != n)
            throw parse_error("component count does not match dimension", colon + 1);
        return map_from_affine(parts);
    }
    if (kind == 'P') {
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw parse_error("projective map body must be bracketed", colon + 1);
        auto parts = split_top_level(body.substr(1, body.size() - 2));
        if (static_cast<int>(parts.size()) != n + 1)
            throw parse_error("projective map needs n+1 coordinates", colon + 1);
        std::vector<HomPoly> coords;
        for (const auto& p : parts) coords.push_back(parse_homogeneous(p, n + 1));
        return RationalMap(std::move(coords));
    }
    throw parse_error("map prefix must start with 'A' or 'P'", 0);
}

std::string map_to_string(const RationalMap& f) {
    std::ostringstream out;
    out << "P" << f.dimension() << ": [";
    for (int i = 0; i < f.num_vars(); ++i) {
        out << (i ? ", " : "") << poly_to_string(f.coord(i));
    }
    out << "]";
    return out.str();
}

RationalMap map_compose(const RationalMap& f, const RationalMap& g) {
    if (f.num_vars() != g.num_vars()) throw std::invalid_argument("variable count mismatch");
    std::vector<HomPoly> coords;
    coords.reserve(f.coords().size());
    for (const auto& c : f.coords()) coords.push_back(poly_compose(c, g.coords()));
    return RationalMap(std::move(coords));
}

RationalMap map_iterate(const RationalMap& f, int n) {
    if (n < 1) throw std::invalid_argument("iterate count must be >= 1");
    RationalMap acc = f;
    for (int i = 2; i <= n; ++i) {
        try {
            acc = map_compose(f, acc);
        } catch (const budget_error&) {
            throw budget_error("coefficient bit budget exceeded at iterate " + std::to_string(i));
        }
    }
    return acc;
}

bool is_indeterminate(const RationalMap& f, const ProjPoint& P) {
    std::vector<Rat> pt;
    pt.reserve(P.size());
    for (const auto& c : P.coords()) pt.emplace_back(c);
    for (const auto& coord : f.coords()) {
        if (coord.eval(pt) != 0) return false;
    }
    return true;
}

ProjPoint apply(const RationalMap& f, const ProjPoint& P) {
    std::vector<Rat> pt;
    pt.reserve(P.size());
    for (const auto& c : P.coords()) pt.emplace_back(c);
    std::vector<Rat> image;
    image.reserve(f.coords().size());
    bool all_zero = true;
    for (const auto& coord : f.coords()) {
        image.push_back(coord.eval(pt));
        if (image.back() != 0) all_zero = false;
    }
    if (all_zero) throw std::domain_error("orbit hits indeterminacy at step 0");
    return ProjPoint::from_rationals(image);
}

DegreeSequence degree_sequence(const RationalMap& f, int max_n) {
    if (max_n < 1) throw std::invalid_argument("need at least one iterate");
    DegreeSequence seq;
    RationalMap acc = f;
    seq.degs.emplace_back(acc.degree());
    for (int n = 2; n <= max_n; ++n) {
        try {
            acc = map_compose(f, acc);
        } catch (const budget_error& e) {
            seq.truncated = true;
            seq.truncation_reason = e.what();
            break;
        }
        seq.degs.emplace_back(acc.degree());
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Boundary orbit of the line at infinity (N = 2)
// ---------------------------------------------------------------------------

BoundaryOrbit stability_analysis(const RationalMap& f, int max_steps) {
    if (f.num_vars() != 3)
        throw std::invalid_argument("boundary analysis implemented for P^2 only");
    if (!f.extends_affine())
        throw std::invalid_argument("boundary analysis requires affine extension");

    BoundaryOrbit orbit;
    orbit.varieties.push_back({BoundaryKind::Line, std::nullopt, "Z = 0"});

    // Restriction of f to the line Z = 0, written [F(X,Y) : G(X,Y) : 0].
    HomPoly F = f.coord(0).substitute_zero(2);
    HomPoly G = f.coord(1).substitute_zero(2);
    if (F.is_zero() && G.is_zero()) {
        // The whole line is indeterminate; V_1 is empty.
        orbit.varieties.push_back({BoundaryKind::Empty, std::nullopt, "empty"});
        orbit.verdict = BoundaryOrbit::Verdict::Unstable;
        orbit.unstable_step = 1;
        orbit.note = "line at infinity is contained in the indeterminacy locus";
        return orbit;
    }

    HomPoly H = F.is_zero() ? G.primitive_part()
              : G.is_zero() ? F.primitive_part()
                            : poly_gcd(F, G);
    HomPoly F0 = F.is_zero() ? F : poly_divexact(F, H);
    HomPoly G0 = G.is_zero() ? G : poly_divexact(G, H);
    int phi_degree = std::max(F0.degree(), G0.degree());

    if (phi_degree >= 1) {
        // phi = [F0 : G0] maps the line onto itself, so every V_n is the
        // line: a cycle of period 1.
        orbit.varieties.push_back({BoundaryKind::Line, std::nullopt, "Z = 0"});
        orbit.verdict = BoundaryOrbit::Verdict::Stable;
        orbit.cycle_period = 1;
        orbit.note = "line at infinity maps onto itself (deg phi = " +
                     std::to_string(phi_degree) + ")";
        return orbit;
    }

    // phi is constant: the image collapses to one point [F0 : G0 : 0].
    Rat a = F0.is_zero() ? Rat(0) : F0.leading_term().coeff;
    Rat b = G0.is_zero() ? Rat(0) : G0.leading_term().coeff;
    ProjPoint current = ProjPoint::from_rationals({a, b, Rat(0)});

    std::vector<ProjPoint> seen;
    for (int step = 1; step <= max_steps; ++step) {
        orbit.varieties.push_back({BoundaryKind::Point, current, current.to_string()});
        if (is_indeterminate(f, current)) {
            orbit.varieties.push_back({BoundaryKind::Empty, std::nullopt, "empty"});
            orbit.verdict = BoundaryOrbit::Verdict::Unstable;
            orbit.unstable_step = step + 1;
            orbit.note = "boundary image " + current.to_string() + " lies in the indeterminacy locus";
            return orbit;
        }
        auto revisit = std::find(seen.begin(), seen.end(), current);
        if (revisit != seen.end()) {
            orbit.verdict = BoundaryOrbit::Verdict::Stable;
            orbit.cycle_period = static_cast<int>(seen.end() - revisit);
            orbit.note = "boundary point cycle of period " + std::to_string(orbit.cycle_period);
            return orbit;
        }
        seen.push_back(current);
        current = apply(f, current);
    }
    orbit.verdict = BoundaryOrbit::Verdict::Stable;
    orbit.heuristic = true;
    orbit.note = "no empty image within " + std::to_string(max_steps) + " steps";
    return orbit;
}

// ---------------------------------------------------------------------------
// Dynamical degree estimation
// ---------------------------------------------------------------------------

DeltaEstimate delta_estimate(const DegreeSequence& seq, std::optional<ExactDeltaHint> hint) {
    if (seq.degs.empty()) throw std::invalid_argument("empty degree sequence");
    std::vector<double> s;
    s.reserve(seq.degs.size());
    for (const auto& d : seq.degs) s.push_back(d.get_d());

    DeltaEstimate est;
    GrowthEstimate g = estimate_growth_rate(s);
    est.root_estimates = g.roots;
    est.ratio_estimates = g.ratios;
    est.best = g.best;
    est.method = g.method;
    if (hint) {
        est.exact = hint->value;
        est.exact_source = hint->source;
    }
    return est;
}

} // namespace adegree
