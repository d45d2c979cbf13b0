#include <catch2/catch_amalgamated.hpp>

#include <semialg/polynomial.hpp>

#include "testutil.hpp"

using namespace semialg;
using testutil::P;

TEST_CASE("graded-lex term order") {
    Exponents b2{0, 2, 0}, ac{1, 0, 1}, abc{1, 1, 1};
    CHECK(grlex_cmp(abc, b2) > 0);
    CHECK(grlex_cmp(ac, b2) > 0); // same degree, earlier variable wins
    CHECK(grlex_cmp(b2, b2) == 0);
}

TEST_CASE("canonical text form") {
    auto ring = testutil::ring_abc();
    CHECK(P("b^2 - 4*a*c", ring).to_string() == "-4*a*c + b^2");
    CHECK(P("a - a", ring).to_string() == "0");
    CHECK(P("1/2*a + 3", ring).to_string() == "1/2*a + 3");
    CHECK(P("-a^2", ring).to_string() == "-a^2");
    CHECK(P("a*a*a", ring).to_string() == "a^3");
    CHECK(P("(a+b)^2", ring).to_string() == "a^2 + 2*a*b + b^2");
}

TEST_CASE("ring arithmetic axioms hold on random samples") {
    std::mt19937 rng(20240811);
    auto ring = testutil::ring_abc();
    for (int i = 0; i < 40; ++i) {
        Polynomial f = testutil::random_poly(rng, ring, 3, 5);
        Polynomial g = testutil::random_poly(rng, ring, 3, 5);
        Polynomial h = testutil::random_poly(rng, ring, 3, 5);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == Polynomial(ring));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(20240812);
    auto ring = testutil::ring_abc();
    for (int i = 0; i < 40; ++i) {
        Polynomial f = testutil::random_poly(rng, ring, 3, 5);
        Polynomial g = testutil::random_poly(rng, ring, 3, 5);
        auto pt = testutil::random_point(rng, 3);
        CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
        CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    }
}

TEST_CASE("degree of a product adds") {
    std::mt19937 rng(20240813);
    auto ring = testutil::ring_xy();
    for (int i = 0; i < 40; ++i) {
        Polynomial f = testutil::random_nonzero_poly(rng, ring, 4, 4);
        Polynomial g = testutil::random_nonzero_poly(rng, ring, 4, 4);
        CHECK((f * g).total_degree() == f.total_degree() + g.total_degree());
    }
}

TEST_CASE("partial substitution") {
    auto ring = testutil::ring_abc();
    Polynomial f = P("a*b*c - 1", ring);
    Polynomial g = f.substitute({{1, Rational(2)}, {2, Rational(3)}});
    CHECK(g == P("6*a - 1", ring));
    CHECK(g.substitute({{0, Rational(1, 6)}}).is_zero());
}

TEST_CASE("derivative satisfies the product rule") {
    std::mt19937 rng(20240814);
    auto ring = testutil::ring_xy();
    for (int i = 0; i < 30; ++i) {
        Polynomial f = testutil::random_poly(rng, ring, 4, 4);
        Polynomial g = testutil::random_poly(rng, ring, 4, 4);
        for (std::size_t v = 0; v < 2; ++v)
            CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    }
}

TEST_CASE("coefficients_in reassembles the polynomial") {
    std::mt19937 rng(20240815);
    auto ring = testutil::ring_abc();
    for (int i = 0; i < 30; ++i) {
        Polynomial f = testutil::random_poly(rng, ring, 3, 6);
        for (std::size_t v = 0; v < 3; ++v) {
            auto cs = f.coefficients_in(v);
            Polynomial back(ring);
            for (std::size_t k = 0; k < cs.size(); ++k)
                back += cs[k] * Polynomial::variable(ring, v).pow(static_cast<unsigned>(k));
            CHECK(back == f);
        }
    }
}

TEST_CASE("content and primitive part") {
    auto ring = testutil::ring_xy();
    Polynomial f = P("4*x^2 - 6*y", ring);
    CHECK(f.content() == Rational(2));
    CHECK(f.primitive() == P("2*x^2 - 3*y", ring));
    Polynomial g = P("1/2*x + 1/3", ring);
    CHECK(g.content() == Rational(1, 6));
    CHECK(g.primitive() == P("3*x + 2", ring));
    CHECK(P("-2*x", ring).normalized() == P("x", ring));
}

TEST_CASE("exact division") {
    std::mt19937 rng(20240816);
    auto ring = testutil::ring_xy();
    for (int i = 0; i < 30; ++i) {
        Polynomial f = testutil::random_poly(rng, ring, 3, 4);
        Polynomial g = testutil::random_nonzero_poly(rng, ring, 3, 4);
        CHECK(exact_div(f * g, g) == f);
    }
    CHECK_FALSE(try_exact_div(P("x^2 + 1", ring), P("x", ring)).has_value());
    CHECK_THROWS_AS(exact_div(P("x", ring), Polynomial(ring)), error);
}

TEST_CASE("ring mismatch is rejected") {
    auto r1 = testutil::ring_abc();
    auto r2 = testutil::ring_xy();
    CHECK_THROWS_AS(P("a", r1) + P("x", r2), error);
    try {
        P("a", r1) * P("x", r2);
        FAIL("expected a ring mismatch");
    } catch (const error& e) {
        CHECK(e.code() == errc::ring_mismatch);
    }
}

TEST_CASE("map_to_ring permutes and extends") {
    auto small = semialg::make_ring({"a", "b"});
    auto big = semialg::make_ring({"T", "b", "a"});
    Polynomial f = P("a^2 - b", small);
    Polynomial g = map_to_ring(f, big);
    CHECK(g.to_string() == "a^2 - b");
    CHECK_THROWS_AS(map_to_ring(P("a - b", small), semialg::make_ring({"a"})), error);
}

TEST_CASE("evaluation requires a full point") {
    auto ring = testutil::ring_abc();
    CHECK_THROWS_AS(P("a", ring).evaluate({Rational(1)}), error);
}
