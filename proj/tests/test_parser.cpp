#include <catch2/catch_amalgamated.hpp>

#include <semialg/parser.hpp>

#include "testutil.hpp"

using namespace semialg;
using testutil::P;

TEST_CASE("grammar basics") {
    auto ring = testutil::ring_abc();
    CHECK(P("b^2 - 4*a*c", ring) ==
          P("b*b", ring) - Rational(4) * P("a*c", ring));
    CHECK(P("27*(a+b+c)^4 - 1024", ring) ==
          Rational(27) * P("a+b+c", ring).pow(4) - Polynomial::constant(ring, Rational(1024)));
    CHECK(P("a - -b", ring) == P("a + b", ring));
    CHECK(P("-a*b^2", ring) == -(P("a", ring) * P("b", ring).pow(2)));
    CHECK(P("2/3", ring) == Polynomial::constant(ring, Rational(2, 3)));
    CHECK(P("  a \t+\n b ", ring) == P("a+b", ring));
}

TEST_CASE("multiplication must be explicit") {
    auto ring = testutil::ring_abc();
    CHECK_THROWS_AS(P("2a", ring), error);
    CHECK_THROWS_AS(P("a b", ring), error);
    CHECK_THROWS_AS(P("(a)(b)", ring), error);
}

TEST_CASE("parse errors carry their kind") {
    auto ring = testutil::ring_abc();
    try {
        P("a^-2", ring);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::negative_exponent);
    }
    try {
        P("a + x", ring);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::unknown_variable);
    }
    try {
        P("a + ", ring);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::syntax_error);
    }
    CHECK_THROWS_AS(P("(a + b", ring), error);
    CHECK_THROWS_AS(P("", ring), error);
    CHECK_THROWS_AS(P("a^(2)", ring), error);
}

TEST_CASE("printing and reparsing is the identity") {
    std::mt19937 rng(20240817);
    auto ring = testutil::ring_abc();
    for (int i = 0; i < 60; ++i) {
        Polynomial f = testutil::random_poly(rng, ring, 4, 7);
        CHECK(P(f.to_string(), ring) == f);
    }
}

TEST_CASE("rational coefficients round-trip") {
    auto ring = testutil::ring_x();
    Polynomial f = P("1/2*x^2 - 2/3*x + 5", ring);
    CHECK(P(f.to_string(), ring) == f);
    CHECK(f.to_string() == "1/2*x^2 - 2/3*x + 5");
}
