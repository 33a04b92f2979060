#include <doctest.h>

#include <cmath>

#include "adegree/heights.hpp"
#include "adegree/padiccert.hpp"
#include "adegree/parse.hpp"

using namespace adegree;

namespace {

const double kLog2 = std::log(2.0);

ProjPoint pt(std::vector<long> coords) {
    std::vector<Int> v;
    for (long c : coords) v.emplace_back(c);
    return ProjPoint(std::move(v));
}

} // namespace

TEST_CASE("fixed point normal form recognition") {
    auto form = fixed_point_form(parse_map("A2: (x^2 + y, y^2)"));
    REQUIRE(form.has_value());
    CHECK(form->leading_coefficient == 1);
    REQUIRE(form->tail_polys.size() == 2);
    CHECK(form->tail_polys[0] == parse_homogeneous("Y*Z", 3));
    CHECK(form->tail_polys[1] == parse_homogeneous("Y^2", 3));
    CHECK_FALSE(form->permuted());

    std::string why;
    CHECK_FALSE(fixed_point_form(parse_map("A2: (y^2, x)"), &why).has_value());
    CHECK(why.find("X0^2") != std::string::npos);

    auto scaled = fixed_point_form(parse_map("P2: [2*X^2 + X*Y, X*Y, Z^2]"));
    REQUIRE(scaled.has_value());
    CHECK(scaled->leading_coefficient == 2);
    CHECK(scaled->tail_polys[0] == parse_homogeneous("X*Y", 3));
    CHECK(scaled->tail_polys[1] == parse_homogeneous("X*Y", 3));
}

TEST_CASE("permutation search finds swapped forms") {
    // (x*y, y^2 + x) has its boundary fixed point at [0:1:0]; the swapped
    // ordering brings it to normal form.
    RationalMap f = parse_map("A2: (x*y, y^2 + x)");
    CHECK_FALSE(fixed_point_form(f).has_value());
    auto form = find_fixed_point_form(f);
    REQUIRE(form.has_value());
    CHECK(form->permuted());
    CHECK(form->leading_coefficient == 1);

    // (y^2, x) has no normal form in either ordering: its boundary fixed
    // point analysis needs the second iterate.
    CHECK_FALSE(find_fixed_point_form(parse_map("A2: (y^2, x)")).has_value());
}

TEST_CASE("smallest admissible prime for a map") {
    CHECK(choose_prime(parse_map("P2: [2*X^2, Y^2, Z^2]")) == 3);
    CHECK(choose_prime(parse_map("P2: [X^2, Y^2, Z^2]")) == 2);
    CHECK(choose_prime(parse_map("P2: [3*X^2, 5*Y^2, Z^2]")) == 2);
}

TEST_CASE("neighborhood membership by valuations") {
    NeighborhoodSpec fixed{Int(2), NeighborhoodKind::FixedPointU};
    CHECK(in_neighborhood(pt({1, 2, 2}), fixed));
    CHECK(in_neighborhood(std::vector<Rat>{Rat(1, 2), Rat(1)}, fixed));
    CHECK_FALSE(in_neighborhood(pt({1, 1, 2}), fixed));
    CHECK_FALSE(in_neighborhood(pt({2, 2, 1}), fixed));

    NeighborhoodSpec c11{Int(2), NeighborhoodKind::Case11Set};
    CHECK(in_neighborhood(std::vector<Rat>{Rat(1, 2), Rat(1, 2)}, c11));
    CHECK_FALSE(in_neighborhood(std::vector<Rat>{Rat(1, 2), Rat(1, 3)}, c11));
    CHECK_FALSE(in_neighborhood(std::vector<Rat>{Rat(2), Rat(2)}, c11));

    NeighborhoodSpec c32{Int(2), NeighborhoodKind::Case32Set};
    CHECK(in_neighborhood(std::vector<Rat>{Rat(1, 2), Rat(1, 4)}, c32));
    CHECK_FALSE(in_neighborhood(std::vector<Rat>{Rat(1, 4), Rat(1, 2)}, c32));

    NeighborhoodSpec c3{Int(3), NeighborhoodKind::Case3U, 3};
    CHECK(in_neighborhood(std::vector<Rat>{Rat(1, 81), Rat(1, 27)}, c3));
    CHECK_FALSE(in_neighborhood(std::vector<Rat>{Rat(1, 27), Rat(1, 27)}, c3));
    // |y|^d > |x|^{d-1} fails at (1/27, 1/9): 9^3 = 729 = 27^2 is not strict.
    CHECK_FALSE(in_neighborhood(std::vector<Rat>{Rat(1, 27), Rat(1, 9)}, c3));
}

TEST_CASE("fixed-point growth certificate") {
    RationalMap f = parse_map("A2: (x^2 + y, y^2)");
    NeighborhoodSpec spec{Int(2), NeighborhoodKind::FixedPointU};
    GrowthCertificate cert = certify(f, {Rat(1, 2), Rat(1)}, spec, 10);
    CHECK(cert.pass);
    CHECK(cert.growth_law == GrowthLaw::DegreePower);
    CHECK(cert.lower_bound == doctest::Approx(kLog2));
    CHECK(cert.verified_steps == 10);

    // Independent check of the height bound along the exact orbit.
    ProjPoint p = pt({1, 2, 2});
    for (int n = 1; n <= 10; ++n) {
        p = apply(f, p);
        CHECK(weil_height(p) >= std::pow(2.0, n) * kLog2 - 1e-9);
        CHECK(in_neighborhood(p, spec)); // f(U) stays inside U
    }

    // Soundness link: the certified bound is below the independent estimate.
    OrbitProfile profile = orbit_profile(f, pt({1, 2, 2}), 10);
    CHECK(weak_lower_canonical(profile, 2.0).value >= cert.lower_bound - 1e-9);

    CHECK_THROWS_AS(certify(f, {Rat(2), Rat(1)}, spec, 10), std::invalid_argument);
    CHECK_THROWS_AS(certify(parse_map("A2: (y^2, x)"), {Rat(1, 2), Rat(1)}, spec, 10),
                    std::invalid_argument);
}

TEST_CASE("Fibonacci valuation certificates") {
    RationalMap f11 = parse_map("A2: (y, x*y)");
    NeighborhoodSpec s11{Int(2), NeighborhoodKind::Case11Set};
    GrowthCertificate c11 = certify(f11, {Rat(1, 2), Rat(1, 2)}, s11, 10);
    CHECK(c11.pass);
    CHECK(c11.growth_law == GrowthLaw::Fibonacci);
    // Expected liminf constant phi^2 log 2 / sqrt 5.
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(c11.lower_bound == doctest::Approx(phi * phi * kLog2 / std::sqrt(5.0)));

    // |y_n|_2 = 2^{F_{n+2}} along the exact orbit.
    std::vector<Rat> p = {Rat(1, 2), Rat(1, 2)};
    for (int n = 1; n <= 10; ++n) {
        p = {p[1], p[0] * p[1]};
        CHECK(finite_valuation(p[1], 2) == -fibonacci(n + 2));
    }

    RationalMap f32 = parse_map("A2: (y, x*(x - y))");
    NeighborhoodSpec s32{Int(2), NeighborhoodKind::Case32Set};
    GrowthCertificate c32 = certify(f32, {Rat(1, 2), Rat(1, 4)}, s32, 10);
    CHECK(c32.pass);
    // Here v(x0) = -1, v(y0) = -2, so |y_n|_2 = 2^{F_{n+3}}.
    std::vector<Rat> q = {Rat(1, 2), Rat(1, 4)};
    for (int n = 1; n <= 10; ++n) {
        q = {q[1], q[0] * (q[0] - q[1])};
        CHECK(finite_valuation(q[1], 2) == -fibonacci(n + 3));
    }

    // Wrong-law request comes back as an honest failed certificate.
    GrowthCertificate wrong = certify(parse_map("A2: (x^2 + y, y^2)"),
                                      {Rat(1, 2), Rat(1, 2)}, s11, 10);
    CHECK_FALSE(wrong.pass);
    CHECK(wrong.failed_step == 1);
}

TEST_CASE("linear-boundary growth certificate") {
    RationalMap f = parse_map("P2: [2*X^2*Y, X*Y^2, Z^3]");
    NeighborhoodSpec spec{Int(3), NeighborhoodKind::Case3U, 3};
    GrowthCertificate cert = certify(f, {Rat(1, 81), Rat(1, 27)}, spec, 6);
    CHECK(cert.pass);
    CHECK(cert.growth_law == GrowthLaw::DegreePower);
    CHECK(cert.lower_bound == doctest::Approx(3.0 * std::log(3.0)));

    // Invariance across a grid of admissible valuations, including starts
    // whose coordinates are not pure prime powers.
    struct Start { Rat x, y; };
    for (const Start& s : {Start{Rat(1, 81), Rat(1, 27)},
                           Start{Rat(2, 2187), Rat(5, 243)},
                           Start{Rat(1, 243), Rat(1, 81)},
                           Start{Rat(7, 19683), Rat(2, 2187)}}) {
        REQUIRE(in_neighborhood(std::vector<Rat>{s.x, s.y}, spec));
        GrowthCertificate c = certify(f, {s.x, s.y}, spec, 5);
        CHECK(c.pass);
    }

    CHECK_THROWS_AS(certify(f, {Rat(1, 2), Rat(1, 2)}, spec, 6), std::invalid_argument);
}

TEST_CASE("quadratic shift-square family closed form") {
    Case31Report good = case31_normal_form(Rat(-2), Rat(0));
    CHECK(good.matches_closed_form);
    CHECK(good.boundary_base_locus_empty);
    REQUIRE(good.fixed_xi.size() == 2);
    CHECK(good.fixed_xi[0] == Rat(2));
    CHECK(good.fixed_xi[1] == Rat(-1));
    CHECK(good.fixed_point_verified);
    CHECK(apply(good.f_squared, pt({1, 2, 0})) == pt({1, 2, 0}));

    Case31Report irrational = case31_normal_form(Rat(1), Rat(0));
    CHECK(irrational.matches_closed_form);
    CHECK(irrational.no_rational_fixed_point);

    Case31Report degenerate = case31_normal_form(Rat(0), Rat(0));
    CHECK(degenerate.matches_closed_form);
    REQUIRE(degenerate.fixed_xi.size() == 2);
    CHECK(degenerate.fixed_point_verified);
}

TEST_CASE("fixed-point certificate through the linear change") {
    Case31Certificate cert = case31_fixed_point_certificate(Rat(-2), Rat(0), 10);
    CHECK(cert.pass);
    CHECK(cert.xi == Rat(2));
    CHECK(cert.prime == 3); // the conjugated map has coefficients divisible by 2
    CHECK(cert.certificate.verified_steps == 10);

    CHECK_THROWS_AS(case31_fixed_point_certificate(Rat(1), Rat(0), 5), std::domain_error);
}

TEST_CASE("certificates work through the automatic permutation") {
    // (x*y, y^2 + x) keeps its boundary fixed point at [0:1:0]; the
    // certificate machinery permutes coordinates internally.
    RationalMap f = parse_map("A2: (x*y, y^2 + x)");
    ProjPoint q({Int(0), Int(1), Int(0)});
    CHECK(apply(f, q) == q);
    NeighborhoodSpec spec{Int(2), NeighborhoodKind::FixedPointU};
    GrowthCertificate cert = certify(f, {Rat(2), Rat(1, 2)}, spec, 8);
    CHECK(cert.pass);
    CHECK(cert.lower_bound == doctest::Approx(kLog2));
    // The exact orbit heights dominate 2^n log 2.
    ProjPoint p = ProjPoint::from_affine({Rat(2), Rat(1, 2)});
    for (int n = 1; n <= 8; ++n) {
        p = apply(f, p);
        CHECK(weil_height(p) >= std::pow(2.0, n) * kLog2 - 1e-9);
    }
}

TEST_CASE("certificates for iterates distribute via the liminf identity") {
    // (y^2, x) has no normal form, but its second iterate is the squaring
    // morphism: certify f^2 and split the orbit into residues.
    RationalMap f = parse_map("A2: (y^2, x)");
    RationalMap f2 = map_iterate(f, 2);
    NeighborhoodSpec spec{Int(2), NeighborhoodKind::FixedPointU};
    GrowthCertificate cert = certify(f2, {Rat(1, 2), Rat(1)}, spec, 8);
    CHECK(cert.pass);
    CHECK(cert.lower_bound == doctest::Approx(kLog2));
}
