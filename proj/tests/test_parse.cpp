#include "skein/parse.hpp"

#include <catch2/catch.hpp>

#include <random>

using namespace skein;

TEST_CASE("laurent grammar", "[parse]") {
    const LaurentPoly p = parse_laurent("A^3 + 2A + 2A^-1 + A^-3");
    CHECK(p == LaurentPoly::from_terms({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
    CHECK(parse_laurent("2*A") == parse_laurent("2A"));
    CHECK(parse_laurent(" A ^ 3 +2 A") == parse_laurent("A^3 + 2A"));
    CHECK(parse_laurent("-(A + 1) * (A - 1)") == parse_laurent("1 - A^2"));
    CHECK(parse_laurent("0") == LaurentPoly());
    CHECK(parse_laurent("A^+2") == parse_laurent("A^2"));
}

TEST_CASE("t and S tokens", "[parse]") {
    CHECK(parse_tpoly("t^2 - 1") == chebyshev_S(2));
    CHECK(parse_tpoly("(A^3+A^-3)*(t^2-2) - 2A - 2A^-1").basis() == Basis::Monomial);
    CHECK(parse_tpoly("S_2 + S_0").basis() == Basis::Chebyshev);
    CHECK(to_monomial(parse_tpoly("S_2 + S_0")) == parse_tpoly("t^2"));
    // S-linear scaling keeps the Chebyshev basis; genuine products drop to monomial
    CHECK(parse_tpoly("(A + A^-1) * S_2").basis() == Basis::Chebyshev);
    CHECK(parse_tpoly("S_1 * S_1").basis() == Basis::Monomial);
    CHECK(parse_tpoly("S_1 * S_1") == parse_tpoly("t^2"));
    CHECK(parse_tpoly("t S_2").basis() == Basis::Monomial);
}

TEST_CASE("syntax errors carry positions", "[parse]") {
    CHECK_THROWS_MATCHES(parse_tpoly("t^"), parse_error,
                         Catch::Matchers::Message("syntax error at column 3: expected exponent"));
    CHECK_THROWS_AS(parse_tpoly("A^"), parse_error);
    CHECK_THROWS_AS(parse_tpoly("2 +"), parse_error);
    CHECK_THROWS_AS(parse_tpoly("(A"), parse_error);
    CHECK_THROWS_AS(parse_tpoly("A ) "), parse_error);
    CHECK_THROWS_AS(parse_tpoly("q"), parse_error);
    CHECK_THROWS_AS(parse_tpoly("S2"), parse_error);
    CHECK_THROWS_AS(parse_tpoly("t^-1"), parse_error);
    CHECK_THROWS_AS(parse_laurent("t + 1"), parse_error);
    try {
        parse_tpoly("t^");
    } catch (const parse_error& e) {
        CHECK(e.column() == 3);
    }
}

namespace {

LaurentPoly random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(0, 5);
    std::uniform_int_distribution<int> exp(-9, 9);
    std::uniform_int_distribution<int> coef(-99, 99);
    LaurentPoly p;
    for (int i = 0, n = n_terms(rng); i < n; ++i) p += LaurentPoly::monomial(coef(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("print/parse round-trip", "[parse][property]") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<unsigned> deg(0, 12);
    std::uniform_int_distribution<int> n_terms(1, 4);
    std::uniform_int_distribution<int> basis_pick(0, 1);

    for (int i = 0; i < 200; ++i) {
        const LaurentPoly p = random_laurent(rng);
        CHECK(parse_laurent(p.str()) == p);
    }
    for (int i = 0; i < 200; ++i) {
        const Basis basis = basis_pick(rng) ? Basis::Chebyshev : Basis::Monomial;
        TPoly p(basis);
        for (int j = 0, n = n_terms(rng); j < n; ++j) p.add_term(deg(rng), random_laurent(rng));
        CHECK(parse_tpoly(p.str()) == p);
    }
}
