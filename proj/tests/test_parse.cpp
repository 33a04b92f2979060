#include <doctest.h>

#include <random>

#include "adegree/parse.hpp"
#include "adegree/projmap.hpp"

using namespace adegree;

TEST_CASE("polynomial text format round-trips") {
    for (const char* s : {"Y^2 + 3*Y*Z + 2*Z^2", "X^2 - Y*Z", "2*X0^2*X1 - X2^3",
                          "X*Y*Z", "7*W^4 - X^2*Y*W", "- X^2 + Y^2"}) {
        int nv = std::string(s).find('W') != std::string::npos ? 4 : 3;
        HomPoly p = parse_homogeneous(s, nv);
        CHECK(parse_homogeneous(poly_to_string(p), nv) == p);
    }
}

TEST_CASE("parser accepts parentheses and rational coefficients") {
    CHECK(parse_homogeneous("(X + Y)*(X - Y)", 3) == parse_homogeneous("X^2 - Y^2", 3));
    CHECK(parse_homogeneous("1/2*X^2 + 1/2*X^2", 3) == parse_homogeneous("X^2", 3));
    CHECK(parse_homogeneous("-(X - Y)^2", 3) ==
          parse_homogeneous("-X^2 + 2*X*Y - Y^2", 3));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_homogeneous("X^2 + ", 3), parse_error);
    CHECK_THROWS_AS(parse_homogeneous("X^2 + Q", 3), parse_error);
    CHECK_THROWS_AS(parse_homogeneous("X^2 + Y", 3), parse_error); // not homogeneous
    try {
        parse_homogeneous("X^2 + @", 3);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("fuzzed print/parse round-trip") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> nvd(2, 4);
    std::uniform_int_distribution<int> degd(1, 6);
    std::uniform_int_distribution<int> termsd(1, 8);
    std::uniform_int_distribution<long> coeff(-50, 50);
    int done = 0;
    while (done < 1000) {
        int nv = nvd(rng);
        int deg = degd(rng);
        std::vector<HomPoly::Term> terms;
        int t = termsd(rng);
        for (int i = 0; i < t; ++i) {
            Expo e(nv, 0);
            std::uniform_int_distribution<int> var(0, nv - 1);
            for (int k = 0; k < deg; ++k) e[static_cast<std::size_t>(var(rng))] += 1;
            long c = coeff(rng);
            if (c != 0) terms.push_back({e, Rat(c)});
        }
        HomPoly p = HomPoly::from_terms(nv, std::move(terms));
        if (p.is_zero()) continue;
        CHECK(parse_homogeneous(poly_to_string(p), nv) == p);
        ++done;
    }
}

TEST_CASE("adversarial inputs throw parse errors, never crash") {
    std::mt19937 rng(13);
    const std::string alphabet = "XYZW xyzw0123456789+-*/^(),[]@#";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        int L = len(rng);
        for (int k = 0; k < L; ++k) s.push_back(alphabet[pick(rng)]);
        try {
            parse_homogeneous(s, 3);
        } catch (const parse_error&) {
        } catch (const std::invalid_argument&) {
        }
        try {
            parse_map(s);
        } catch (const parse_error&) {
        } catch (const std::invalid_argument&) {
        } catch (const std::domain_error&) {
        }
    }
    CHECK(true); // reaching here means no crash and no foreign exception
}

TEST_CASE("map DSL affine and projective forms") {
    RationalMap f = parse_map("A2: (y^2, x)");
    RationalMap g = parse_map("P2: [Y^2, X*Z, Z^2]");
    CHECK(f == g);
    CHECK(parse_map(map_to_string(f)) == f);

    RationalMap shift = parse_map("A2: (x*y, y+1)");
    CHECK(shift == parse_map("P2: [X*Y, Y*Z + Z^2, Z^2]"));

    CHECK_THROWS_AS(parse_map("B2: (x, y)"), parse_error);
    CHECK_THROWS_AS(parse_map("A2: (x)"), parse_error);
    CHECK_THROWS_AS(parse_map("P2: [X, Y]"), parse_error);
    CHECK_THROWS_AS(parse_map("A2 (x, y)"), parse_error);
}

TEST_CASE("matrix syntax") {
    auto m = parse_int_matrix("[[0,2],[1,0]]");
    CHECK(m.size() == 2);
    CHECK(m[0][1] == 2);
    CHECK(matrix_to_string(m) == "[[0,2],[1,0]]");
    CHECK(parse_int_matrix(" [ [ -3 , 0 ] , [ 0 , 2 ] ] ")[0][0] == -3);
    CHECK_THROWS_AS(parse_int_matrix("[[1,2],[3]]"), parse_error);
    CHECK_THROWS_AS(parse_int_matrix("[1,2]"), parse_error);
}

TEST_CASE("point syntax") {
    auto p = parse_point("2,3");
    CHECK(p == std::vector<Rat>{Rat(2), Rat(3)});
    CHECK(parse_point("1/2, 1, -3")[2] == Rat(-3));
    CHECK(parse_point("-1/2,4")[0] == Rat(-1, 2));
    CHECK_THROWS_AS(parse_point("2,,3"), parse_error);
}
