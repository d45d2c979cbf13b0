#pragma once

#include <random>
#include <vector>

#include <semialg/parser.hpp>
#include <semialg/polynomial.hpp>

namespace testutil {

using semialg::Polynomial;
using semialg::Rational;
using semialg::VarOrderPtr;

inline VarOrderPtr ring_abc() { return semialg::make_ring({"a", "b", "c"}); }
inline VarOrderPtr ring_xy() { return semialg::make_ring({"x", "y"}); }
inline VarOrderPtr ring_x() { return semialg::make_ring({"x"}); }

inline Polynomial P(const std::string& text, const VarOrderPtr& ring) {
    return semialg::parse_polynomial(text, ring);
}

inline Rational random_rational(std::mt19937& rng, long span = 9, unsigned max_den = 4) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<unsigned> den(1, max_den);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Polynomial random_poly(std::mt19937& rng, const VarOrderPtr& ring, unsigned max_deg,
                              unsigned max_terms, long coef_span = 9) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> expd(0, max_deg);
    std::uniform_int_distribution<long> coef(-coef_span, coef_span);
    Polynomial p(ring);
    unsigned n = nterms(rng);
    for (unsigned t = 0; t < n; ++t) {
        semialg::Exponents e(ring->size());
        for (auto& x : e) x = expd(rng);
        p += Polynomial::monomial(ring, std::move(e), Rational(coef(rng)));
    }
    return p;
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, const VarOrderPtr& ring,
                                      unsigned max_deg, unsigned max_terms) {
    for (;;) {
        Polynomial p = random_poly(rng, ring, max_deg, max_terms);
        if (!p.is_zero()) return p;
    }
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t n) {
    std::vector<Rational> pt;
    pt.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pt.push_back(random_rational(rng));
    return pt;
}

} // namespace testutil
