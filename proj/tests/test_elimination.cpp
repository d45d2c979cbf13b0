#include <catch2/catch_amalgamated.hpp>

#include <semialg/elimination.hpp>

#include "oracles.hpp"
#include "testutil.hpp"

using namespace semialg;
using testutil::P;

TEST_CASE("resultant fixed values") {
    auto rx = testutil::ring_x();
    CHECK(resultant(P("x^2 - 1", rx), P("x - 2", rx), 0) ==
          Polynomial::constant(rx, Rational(3)));

    auto rxy = testutil::ring_xy();
    CHECK(resultant(P("x*y - 1", rxy), P("y + x", rxy), 1) == P("x^2 + 1", rxy));

    CHECK(resultant(P("x - 1", rxy), P("x + 1", rxy), 1) ==
          Polynomial::constant(rxy, Rational(1))); // both free of y
    CHECK(resultant(P("y", rxy), P("x", rxy), 1) == P("x", rxy));
    CHECK_THROWS_AS(resultant(Polynomial(rxy), P("x", rxy), 0), error);
}

TEST_CASE("resultant detects common roots") {
    auto ring = testutil::ring_xy();
    CHECK(resultant(P("(x - y)*(x + 1)", ring), P("(x - y)*(x - 2)", ring), 0).is_zero());
    CHECK_FALSE(resultant(P("x - y", ring), P("x - y - 1", ring), 0).is_zero());
}

TEST_CASE("resultant matches the sylvester determinant") {
    std::mt19937 rng(20240825);
    auto ring = testutil::ring_xy();
    int done = 0;
    while (done < 120) {
        Polynomial f = testutil::random_nonzero_poly(rng, ring, 3, 3);
        Polynomial g = testutil::random_nonzero_poly(rng, ring, 3, 3);
        if (f.degree_in(0) < 1 || g.degree_in(0) < 1) continue;
        CHECK(resultant(f, g, 0) == oracles::resultant_sylvester(f, g, 0));
        ++done;
    }
}

TEST_CASE("resultant is multiplicative on the left") {
    std::mt19937 rng(20240826);
    auto ring = testutil::ring_xy();
    int done = 0;
    while (done < 25) {
        Polynomial f = testutil::random_nonzero_poly(rng, ring, 2, 3);
        Polynomial g = testutil::random_nonzero_poly(rng, ring, 2, 3);
        Polynomial h = testutil::random_nonzero_poly(rng, ring, 2, 3);
        if (h.degree_in(0) < 1) continue;
        CHECK(resultant(f * g, h, 0) == resultant(f, h, 0) * resultant(g, h, 0));
        ++done;
    }
}

TEST_CASE("discriminant fixed values") {
    auto ring = semialg::make_ring({"x", "a", "b", "c", "p", "q"});
    CHECK(discriminant(P("a*x^2 + b*x + c", ring), 0) == P("b^2 - 4*a*c", ring));
    CHECK(discriminant(P("x^3 + p*x + q", ring), 0) == P("-4*p^3 - 27*q^2", ring));
    CHECK(discriminant(P("x^2 - 3*x + 2", ring), 0) == Polynomial::constant(ring, Rational(1)));
    CHECK(discriminant(P("a*x + b", ring), 0) == Polynomial::constant(ring, Rational(1)));
    CHECK(discriminant(P("(x - 1)^2", ring), 0).is_zero());
    CHECK_THROWS_AS(discriminant(P("a", ring), 0), error);
}

TEST_CASE("projection drops the eliminated variable") {
    auto ring = testutil::ring_abc();
    // Quadratic discriminant polynomial, eliminating c: only the leading
    // coefficient survives.
    auto proj_c = projection_set({P("b^2 - 4*a*c", ring)}, 2);
    REQUIRE(proj_c.size() == 1);
    CHECK(proj_c[0] == P("a", ring));
    // Eliminating b instead keeps the discriminant in (a, c).
    auto proj_b = projection_set({P("b^2 - 4*a*c", ring)}, 1);
    REQUIRE(proj_b.size() == 1);
    CHECK(proj_b[0] == P("a*c", ring));
}

TEST_CASE("projection includes pairwise resultants") {
    auto ring = testutil::ring_xy();
    auto proj = projection_set({P("x - y", ring), P("x + y", ring)}, 0);
    REQUIRE(proj.size() == 1);
    CHECK(proj[0] == P("y", ring));
}

TEST_CASE("projection passes through polynomials free of the variable") {
    auto ring = testutil::ring_xy();
    auto proj = projection_set({P("y^2 - 1", ring), P("x", ring)}, 0);
    REQUIRE(proj.size() == 1);
    CHECK(proj[0] == P("y^2 - 1", ring));
}

TEST_CASE("triangularization of a coupled pair") {
    auto ring = testutil::ring_xy();
    auto branches = triangularize({P("x*y - 1", ring), P("x + y", ring)}, {0, 1},
                                  TriMode::split);
    REQUIRE(branches.size() == 1);
    const auto& br = branches.front();
    REQUIRE(br.chain.size() == 2);
    CHECK(br.main_vars == std::vector<std::size_t>{0, 1});
    CHECK(br.chain[0] == P("x^2 + 1", ring));
    CHECK(br.chain[1] == P("x + y", ring));
}

TEST_CASE("triangularization splits on a vanishing initial") {
    auto ring = testutil::ring_xy();
    // x*y = 1 and y^2 = 2: reduction by x*y - 1 needs x != 0; the x = 0
    // branch dies because it forces -1 = 0.
    auto branches = triangularize({P("x*y - 1", ring), P("y^2 - 2", ring)}, {0, 1},
                                  TriMode::split);
    REQUIRE(branches.size() == 1);
    const auto& br = branches.front();
    REQUIRE(br.chain.size() == 2);
    CHECK(br.chain[0] == P("2*x^2 - 1", ring));
    CHECK(br.chain[1] == P("x*y - 1", ring));
    REQUIRE(br.assumed_nonzero.size() == 1);
    CHECK(br.assumed_nonzero[0] == P("x", ring));
}

TEST_CASE("generic mode records initials instead of splitting") {
    auto ring = testutil::ring_abc(); // unknowns a; parameters b, c
    auto br = generic_chain({P("a*b*c - 1", ring)}, {0});
    REQUIRE(br.chain.size() == 1);
    CHECK(br.chain[0] == P("a*b*c - 1", ring));
    REQUIRE(br.assumed_nonzero.size() == 1);
    CHECK(br.assumed_nonzero[0] == P("b*c", ring));
}

TEST_CASE("inconsistent specializations are dropped") {
    auto ring = testutil::ring_x();
    auto branches = triangularize({Polynomial::constant(ring, Rational(-1))}, {0},
                                  TriMode::split);
    CHECK(branches.empty());
    auto all = triangularize({}, {0}, TriMode::split);
    REQUIRE(all.size() == 1);
    CHECK(all.front().chain.empty());
}

TEST_CASE("coefficient relations are collected as forced zeros") {
    auto ring = testutil::ring_abc(); // unknown a; b, c free
    auto branches = triangularize({P("a*b - 1", ring), P("a*c - 1", ring)}, {0},
                                  TriMode::split);
    REQUIRE(branches.size() == 1);
    REQUIRE(branches[0].forced_zero.size() == 1);
    CHECK(branches[0].forced_zero[0] == P("b - c", ring).normalized());
}

TEST_CASE("reduction preserves specialized solutions") {
    // The triangular chain of {xy - 1, x + y} has the same solutions as the
    // input on random specializations of neither-zero denominators.
    auto ring = testutil::ring_xy();
    auto branches = triangularize({P("x*y - 1", ring), P("x + y", ring)}, {0, 1},
                                  TriMode::split);
    REQUIRE(branches.size() == 1);
    std::mt19937 rng(20240827);
    for (int i = 0; i < 20; ++i) {
        auto pt = testutil::random_point(rng, 2);
        bool in_system = P("x*y - 1", ring).evaluate(pt) == 0 &&
                         P("x + y", ring).evaluate(pt) == 0;
        bool in_chain = branches[0].chain[0].evaluate(pt) == 0 &&
                        branches[0].chain[1].evaluate(pt) == 0;
        CHECK(in_system == in_chain);
    }
}
