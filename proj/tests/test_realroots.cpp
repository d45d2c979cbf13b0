#include <catch2/catch_amalgamated.hpp>

#include <semialg/univariate.hpp>

#include "testutil.hpp"

#include <algorithm>
#include <set>

using namespace semialg;

namespace {

UPoly U(const std::string& text) {
    auto ring = testutil::ring_x();
    return upoly_from(testutil::P(text, ring), 0);
}

// Product of (den*x - num) over the given rational roots, times an optional
// rootless factor.
UPoly planted(const std::vector<Rational>& roots, bool with_rootless = false) {
    UPoly f{{Integer(1)}};
    for (const auto& r : roots) {
        UPoly lin{{-r.get_num(), r.get_den()}};
        f = upoly_mul(f, lin);
    }
    if (with_rootless) f = upoly_mul(f, U("x^2 + 1"));
    return f;
}

} // namespace

TEST_CASE("sturm chain of x^2 - 2") {
    auto chain = sturm_chain(U("x^2 - 2"));
    REQUIRE(chain.size() == 3);
    CHECK(chain[2].degree() == 0);
    CHECK(sturm_count_all(U("x^2 - 2")) == 2);
    CHECK(sturm_count(U("x^2 - 2"), Rational(0), Rational(2)) == 1);
    CHECK(sturm_count(U("x^2 - 2"), Rational(-2), Rational(2)) == 2);
    CHECK(sturm_count(U("x^2 + 1"), Rational(-10), Rational(10)) == 0);
}

TEST_CASE("isolation finds simple roots") {
    UPoly f = U("x^3 - x"); // roots -1, 0, 1; first bisection lands on 0
    auto ivs = isolate_roots(f);
    REQUIRE(ivs.size() == 3);
    std::vector<Rational> roots{Rational(-1), Rational(0), Rational(1)};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(ivs[i].lo < roots[i]);
        CHECK(roots[i] < ivs[i].hi);
        CHECK(upoly_sign_at(f, ivs[i].lo) != 0);
        CHECK(upoly_sign_at(f, ivs[i].hi) != 0);
    }
    // Intervals are pairwise disjoint and sorted.
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi <= ivs[i + 1].lo);
}

TEST_CASE("isolation handles multiplicities and no-root inputs") {
    CHECK(isolate_roots(U("x^2 + 1")).empty());
    CHECK(isolate_roots(U("7")).empty());
    CHECK(isolate_roots(U("x^2")).size() == 1);
    CHECK(isolate_roots(U("(2*x - 1)^3")).size() == 1);
    CHECK_THROWS_AS(isolate_roots(UPoly{}), error);
}

TEST_CASE("planted rational roots are isolated one-to-one") {
    std::mt19937 rng(20240821);
    for (int trial = 0; trial < 25; ++trial) {
        std::set<Rational> uniq;
        int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) uniq.insert(testutil::random_rational(rng, 6, 3));
        std::vector<Rational> roots(uniq.begin(), uniq.end());
        std::vector<Rational> with_mult = roots;
        if (!roots.empty()) with_mult.push_back(roots.front()); // a double root
        UPoly f = planted(with_mult, trial % 2 == 0);
        auto ivs = isolate_roots(f);
        REQUIRE(ivs.size() == roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(ivs[i].lo < roots[i]);
            CHECK(roots[i] < ivs[i].hi);
        }
    }
}

TEST_CASE("refinement keeps the root and shrinks") {
    UPoly f = upoly_squarefree(U("x^2 - 2"));
    auto ivs = isolate_roots(f);
    REQUIRE(ivs.size() == 2);
    RootInterval iv = ivs[1]; // sqrt(2)
    for (int i = 0; i < 30; ++i) iv = refine_step(f, iv);
    CHECK(iv.hi - iv.lo < Rational(1, 1000));
    CHECK(upoly_sign_at(f, iv.lo) * upoly_sign_at(f, iv.hi) < 0);
    CHECK(Rational(2) * iv.lo * iv.lo < Rational(4));
    CHECK(Rational(4) < Rational(2) * iv.hi * iv.hi);
}

TEST_CASE("counting in open intervals excludes root endpoints") {
    UPoly f = U("x*(x - 1)*(x - 2)");
    CHECK(count_roots_in(f, Rational(0), Rational(2)) == 1);
    CHECK(count_roots_in(f, Rational(-1), Rational(3)) == 3);
    CHECK(count_roots_in(f, Rational(0), Rational(3)) == 2);
    CHECK(count_roots_in(f, Rational(1, 2), Rational(3, 2)) == 1);
    CHECK(count_roots_in(U("x^2*(x - 1)"), Rational(-1), Rational(2)) == 2);
}

TEST_CASE("sturm and isolation counts agree") {
    std::mt19937 rng(20240822);
    auto ring = testutil::ring_x();
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = testutil::random_nonzero_poly(rng, ring, 6, 5);
        UPoly f = upoly_from(p, 0);
        if (f.is_constant()) continue;
        CHECK(isolate_roots(f).size() == sturm_count_all(f));
        Rational lo(-3), hi(2);
        if (upoly_sign_at(f, lo) != 0 && upoly_sign_at(f, hi) != 0) {
            UPoly fs = upoly_squarefree(f);
            CHECK(count_roots_in(f, lo, hi) == sturm_count(fs, lo, hi));
        }
    }
}

TEST_CASE("tarski queries") {
    UPoly f = U("x^2 - 2");
    CHECK(tarski_query_all(f, U("x")) == 0);
    CHECK(tarski_query_all(f, U("x - 2")) == -2);
    CHECK(tarski_query_all(f, U("1")) == 2);
    CHECK(tarski_query(f, U("x"), Rational(0), Rational(2)) == 1);
    CHECK_THROWS_AS(tarski_query(f, U("x"), Rational(2), Rational(0)), error);
}

TEST_CASE("sign of a polynomial at an algebraic root") {
    UPoly f = upoly_squarefree(U("x^2 - 2"));
    auto ivs = isolate_roots(f);
    REQUIRE(ivs.size() == 2);
    RootInterval pos = ivs[1];
    CHECK(sign_at_root(U("x - 1"), f, pos) == 1);      // sqrt(2) > 1
    CHECK(sign_at_root(U("2*x - 3"), f, pos) == -1);   // sqrt(2) < 3/2
    CHECK(sign_at_root(U("x^2 - 2"), f, pos) == 0);    // exactly zero
    CHECK(sign_at_root(U("x^4 - 4"), f, pos) == 0);    // shares the root
    CHECK(sign_at_root(U("0"), f, pos) == 0);
}

TEST_CASE("root signs tally") {
    RootSigns s = count_roots_with_signs(U("x*(x - 1)*(x + 1)"), U("x"));
    CHECK(s.negative == 1);
    CHECK(s.zero == 1);
    CHECK(s.positive == 1);
}

TEST_CASE("root signs agree with tarski queries") {
    std::mt19937 rng(20240823);
    auto ring = testutil::ring_x();
    for (int trial = 0; trial < 40; ++trial) {
        UPoly f = upoly_from(testutil::random_nonzero_poly(rng, ring, 5, 4), 0);
        if (f.is_constant()) continue;
        UPoly g = upoly_from(testutil::random_poly(rng, ring, 3, 3), 0);
        RootSigns s = count_roots_with_signs(f, g);
        UPoly fs = upoly_squarefree(f);
        long q1 = tarski_query_all(fs, g);
        long q2 = tarski_query_all(fs, upoly_mul(g, g));
        CHECK(q1 == static_cast<long>(s.positive) - static_cast<long>(s.negative));
        CHECK(q2 == static_cast<long>(s.positive) + static_cast<long>(s.negative));
        CHECK(s.positive + s.negative + s.zero == isolate_roots(f).size());
    }
}

TEST_CASE("cauchy bound encloses every root") {
    std::mt19937 rng(20240824);
    for (int trial = 0; trial < 30; ++trial) {
        std::set<Rational> uniq;
        int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) uniq.insert(testutil::random_rational(rng, 20, 5));
        std::vector<Rational> roots(uniq.begin(), uniq.end());
        UPoly f = planted(roots, true);
        Rational b = upoly_cauchy_bound(f);
        for (const auto& r : roots) CHECK(rational_abs(r) < b);
    }
}
