#include <doctest.h>

#include <random>

#include "adegree/budget.hpp"
#include "adegree/hompoly.hpp"
#include "adegree/parse.hpp"

using namespace adegree;

namespace {

HomPoly P(const std::string& text, int nv = 3) { return parse_homogeneous(text, nv); }

// Random homogeneous polynomial built from a shared factor pool so gcds are
// often nontrivial.
HomPoly random_factor(std::mt19937& rng, int nv) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick(0, nv - 1);
    std::uniform_int_distribution<int> deg(1, 2);
    int d = deg(rng);
    std::vector<HomPoly::Term> terms;
    for (int t = 0; t < 3; ++t) {
        Expo e(nv, 0);
        for (int k = 0; k < d; ++k) e[static_cast<std::size_t>(pick(rng))] += 1;
        int c = coeff(rng);
        if (c != 0) terms.push_back({e, Rat(c)});
    }
    HomPoly p = HomPoly::from_terms(nv, std::move(terms));
    if (p.is_zero()) return HomPoly::variable(nv, 0);
    return p;
}

HomPoly random_product(std::mt19937& rng, const std::vector<HomPoly>& pool) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    HomPoly p = HomPoly::constant(pool.front().num_vars(), Rat(1));
    int n = count(rng);
    for (int i = 0; i < n; ++i) p = poly_mul(p, pool[pick(rng)]);
    return p;
}

} // namespace

TEST_CASE("poly_mul hand expansions") {
    CHECK(poly_mul(P("X*Z"), P("Z^2")) == P("X*Z^3"));
    CHECK(poly_mul(P("Y + Z"), P("Y + 2*Z")) == P("Y^2 + 3*Y*Z + 2*Z^2"));
    CHECK(poly_mul(HomPoly::zero(3), P("X^2")).is_zero());
    CHECK_THROWS_AS(poly_mul(P("X"), HomPoly::variable(2, 0)), std::invalid_argument);
}

TEST_CASE("poly_compose against the squared map coordinates") {
    std::vector<HomPoly> g = {P("Y^2"), P("X*Z"), P("Z^2")};
    CHECK(poly_compose(P("Y^2"), g) == P("X^2*Z^2"));
    CHECK(poly_compose(P("X*Z"), g) == P("Y^2*Z^2"));
    std::vector<HomPoly> id = {P("X"), P("Y"), P("Z")};
    CHECK(poly_compose(P("X^2"), id) == P("X^2"));

    // Degree bookkeeping: deg(f o g) = deg f * e.
    HomPoly f = P("X^2 + Y*Z");
    CHECK(poly_compose(f, g).degree() == f.degree() * 2);

    std::vector<HomPoly> bad = {P("Y^2"), P("X"), P("Z")};
    CHECK_THROWS_AS(poly_compose(P("X"), bad), std::invalid_argument);
}

TEST_CASE("poly_gcd hand cases") {
    CHECK(poly_gcd(P("X^2*Z^2"), P("Z^4")) == P("Z^2"));
    CHECK(poly_gcd(P("X^2"), P("Y^2")) == P("1"));
    CHECK(poly_gcd(P("X*Y"), P("X^2")) == P("X"));
    CHECK_THROWS_AS(poly_gcd(HomPoly::zero(3), HomPoly::zero(3)), std::invalid_argument);

    // Nontrivial dense common factor.
    HomPoly g = P("X + Y + Z");
    HomPoly a = poly_mul(g, P("X^2 + Y*Z"));
    HomPoly b = poly_mul(g, P("Y^2 - X*Z"));
    CHECK(poly_gcd(a, b) == g);

    // Normalization: positive leading coefficient, primitive integers.
    HomPoly c = poly_mul(g * Rat(-6, 5), P("X"));
    HomPoly d = poly_mul(g * Rat(4), P("Y"));
    HomPoly got = poly_gcd(c, d);
    CHECK(got == g);
    CHECK(got.leading_term().coeff > 0);
}

TEST_CASE("gcd soundness on random products") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> coord(-9, 9);
    int nontrivial = 0;
    for (int round = 0; round < 500; ++round) {
        int nv = round % 2 == 0 ? 2 : 3;
        std::vector<HomPoly> pool;
        for (int i = 0; i < 4; ++i) pool.push_back(random_factor(rng, nv));
        HomPoly a = random_product(rng, pool);
        HomPoly b = random_product(rng, pool);
        HomPoly g = poly_gcd(a, b);
        if (!g.is_constant()) ++nontrivial;

        // Trial division both ways, then coprimality of the quotients.
        HomPoly qa = poly_divexact(a, g);
        HomPoly qb = poly_divexact(b, g);
        CHECK(poly_mul(qa, g).primitive_part() == a.primitive_part());
        CHECK(poly_gcd(qa, qb).is_constant());

        // Evaluation consistency (a/g)(q) * g(q) = a(q) at a random point.
        std::vector<Rat> pt;
        for (int i = 0; i < nv; ++i) pt.emplace_back(coord(rng));
        CHECK(qa.eval(pt) * g.eval(pt) == a.eval(pt));
    }
    CHECK(nontrivial > 100); // the pool construction must actually share factors
}

TEST_CASE("gcd with repeated and dense factors") {
    HomPoly l = P("X + Y");
    HomPoly q = P("X^2 + Y*Z + Z^2");
    HomPoly a = poly_mul(poly_mul(l, l), poly_mul(q, P("Z")));
    HomPoly b = poly_mul(l, poly_mul(q, poly_mul(q, P("X"))));
    HomPoly g = poly_gcd(a, b);
    CHECK(g == poly_mul(l, q));

    // Repeated factor on both sides.
    HomPoly c = poly_mul(poly_mul(q, q), P("X^2"));
    HomPoly d = poly_mul(poly_mul(q, q), P("Y^2 - X*Z"));
    CHECK(poly_gcd(c, d) == poly_mul(q, q));

    // Four variables exercise the recursive content splitting.
    HomPoly s = parse_homogeneous("X*W + Y*Z", 4);
    HomPoly e = poly_mul(s, parse_homogeneous("X^2 - W^2", 4));
    HomPoly f = poly_mul(s, parse_homogeneous("Y*W + Z^2", 4));
    CHECK(poly_gcd(e, f) == s);
}

TEST_CASE("poly_eval exact arithmetic") {
    std::vector<Rat> e1 = {Rat(1), Rat(0), Rat(0)};
    CHECK(poly_eval(P("X*Z"), e1) == 0);
    std::vector<Rat> e2 = {Rat(0), Rat(1), Rat(1)};
    CHECK(poly_eval(P("Y^2 + 3*Y*Z + 2*Z^2"), e2) == 6);
    std::vector<Rat> e3 = {Rat(1, 2), Rat(0), Rat(0)};
    CHECK(poly_eval(P("X^2"), e3) == Rat(1, 4));
    CHECK_THROWS_AS(poly_eval(P("X"), std::vector<Rat>{Rat(1)}), std::invalid_argument);
}

TEST_CASE("homogeneity is enforced") {
    CHECK_THROWS_AS(HomPoly::from_terms(2, {{Expo{1, 0}, Rat(1)}, {Expo{2, 0}, Rat(1)}}),
                    std::invalid_argument);
    CHECK(HomPoly::from_terms(2, {{Expo{1, 0}, Rat(1)}, {Expo{1, 0}, Rat(-1)}}).is_zero());
}

TEST_CASE("derivative and primitive part") {
    CHECK(P("X^2 + Y*Z").derivative(0) == parse_homogeneous("2*X", 3));
    HomPoly p = P("4*X^2 + 6*Y*Z");
    CHECK(p.content() == Rat(2));
    CHECK(p.primitive_part() == P("2*X^2 + 3*Y*Z"));
    CHECK((-p).primitive_part() == P("2*X^2 + 3*Y*Z"));
}

TEST_CASE("coefficient budget aborts oversized products") {
    std::int64_t saved = coefficient_bit_budget();
    set_coefficient_bit_budget(64);
    HomPoly big = P("1000000007*X^2 + 998244353*Y^2");
    CHECK_THROWS_AS(poly_mul(big, big), budget_error);
    set_coefficient_bit_budget(saved);
    CHECK_NOTHROW(poly_mul(big, big));
}
