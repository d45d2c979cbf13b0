#include <catch2/catch_amalgamated.hpp>

#include <semialg/gcd.hpp>

#include "testutil.hpp"

using namespace semialg;
using testutil::P;

TEST_CASE("pseudo-remainder of the generic quadratic") {
    auto ring = semialg::make_ring({"x", "a", "b", "c"});
    Polynomial f = P("a*x^2 + b*x + c", ring);
    Polynomial g = P("2*a*x + b", ring);
    CHECK(prem(f, g, 0) == P("4*a^2*c - a*b^2", ring));
}

TEST_CASE("pseudo-remainder basics") {
    auto ring = testutil::ring_xy();
    CHECK(prem(P("y", ring), P("x^2", ring), 0) == P("y", ring)); // deg f < deg g
    CHECK(prem(P("x^2 - 1", ring), P("x - 1", ring), 0).is_zero());
    CHECK_THROWS_AS(prem(P("x", ring), Polynomial(ring), 0), error);
    CHECK_THROWS_AS(prem(P("x", ring), P("y", ring), 0), error);
}

TEST_CASE("pseudo-remainder identity") {
    // lc(g)^k * f - r is divisible by g.
    std::mt19937 rng(20240818);
    auto ring = testutil::ring_xy();
    for (int i = 0; i < 30; ++i) {
        Polynomial f = testutil::random_poly(rng, ring, 4, 4);
        Polynomial g = testutil::random_nonzero_poly(rng, ring, 3, 3);
        if (g.degree_in(0) < 1) continue;
        long k = std::max(f.degree_in(0) - g.degree_in(0) + 1, 0l);
        Polynomial lhs = g.leading_coefficient_in(0).pow(static_cast<unsigned>(k)) * f -
                         prem(f, g, 0);
        CHECK(divides(g, lhs));
    }
}

TEST_CASE("gcd recovers planted common factors") {
    std::mt19937 rng(20240819);
    auto ring = testutil::ring_xy();
    for (int i = 0; i < 25; ++i) {
        Polynomial h = testutil::random_nonzero_poly(rng, ring, 2, 3);
        Polynomial f = testutil::random_nonzero_poly(rng, ring, 2, 3);
        Polynomial g = testutil::random_nonzero_poly(rng, ring, 2, 3);
        Polynomial d = poly_gcd(f * h, g * h);
        CHECK(divides(h.normalized(), d));
        CHECK(divides(d, f * h));
        CHECK(divides(d, g * h));
    }
}

TEST_CASE("gcd fixed values") {
    auto ring = testutil::ring_xy();
    CHECK(poly_gcd(P("x^2 - y^2", ring), P("x^2 + 2*x*y + y^2", ring)) == P("x + y", ring));
    CHECK(poly_gcd(P("x^2 + 1", ring), P("x - 1", ring)) ==
          Polynomial::constant(ring, Rational(1)));
    CHECK(poly_gcd(Polynomial(ring), P("-2*x", ring)) == P("x", ring));
    CHECK(poly_gcd(P("6*x", ring), P("4*x", ring)) == P("x", ring));
}

TEST_CASE("squarefree part") {
    auto ring = testutil::ring_xy();
    CHECK(squarefree_part(P("(x+y)^2*(x-y)", ring)) == P("x^2 - y^2", ring));
    CHECK(squarefree_part(P("x^3", ring)) == P("x", ring));
    CHECK(squarefree_part(P("x^2 + 1", ring)) == P("x^2 + 1", ring));
    CHECK(squarefree_part(P("4*x^2", ring)) == P("x", ring));
    CHECK_THROWS_AS(squarefree_part(Polynomial(ring)), error);
}

TEST_CASE("squarefree basis splits shared factors") {
    auto ring = testutil::ring_xy();
    auto b1 = squarefree_basis({P("x^2*y", ring), P("x*y^2", ring)});
    REQUIRE(b1.size() == 2);
    CHECK(std::find(b1.begin(), b1.end(), P("x", ring)) != b1.end());
    CHECK(std::find(b1.begin(), b1.end(), P("y", ring)) != b1.end());

    auto b2 = squarefree_basis({P("(x+y)^2*(x-y)", ring), P("x^2 - y^2", ring)});
    REQUIRE(b2.size() == 2);
    CHECK(std::find(b2.begin(), b2.end(), P("x + y", ring)) != b2.end());
    CHECK(std::find(b2.begin(), b2.end(), P("x - y", ring)) != b2.end());
}

TEST_CASE("squarefree basis properties") {
    std::mt19937 rng(20240820);
    auto ring = testutil::ring_xy();
    for (int i = 0; i < 15; ++i) {
        std::vector<Polynomial> in;
        Polynomial prod = Polynomial::constant(ring, Rational(1));
        for (int k = 0; k < 3; ++k) {
            Polynomial p = testutil::random_nonzero_poly(rng, ring, 2, 3);
            if (p.is_constant()) continue;
            in.push_back(p);
            prod *= p;
        }
        if (in.empty()) continue;
        auto basis = squarefree_basis(in);
        Polynomial bprod = Polynomial::constant(ring, Rational(1));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            CHECK(basis[j] == squarefree_part(basis[j])); // squarefree, normalized
            for (std::size_t k = j + 1; k < basis.size(); ++k)
                CHECK(poly_gcd(basis[j], basis[k]).is_constant()); // pairwise coprime
            bprod *= basis[j];
        }
        // Same radical: the squarefree part of the input product equals the
        // product of the basis.
        CHECK(squarefree_part(prod) == bprod.normalized());
    }
}

TEST_CASE("zero inputs are rejected in the basis") {
    auto ring = testutil::ring_xy();
    CHECK_THROWS_AS(squarefree_basis({Polynomial(ring)}), error);
    CHECK(squarefree_basis({}).empty());
    CHECK(squarefree_basis({Polynomial::constant(ring, Rational(7))}).empty());
}
