#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace semialg {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw error(errc::bad_input, "not a rational: '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0)
        throw error(errc::bad_input, "zero denominator: '" + s + "'");
    return q;
}

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational rational_pow(const Rational& base, unsigned e) {
    Rational r(1);
    Rational b = base;
    unsigned n = e;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline Integer integer_pow(const Integer& base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rational_abs(const Rational& q) { return abs(q); }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer rational_floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
inline Integer rational_ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

// Dyadic of least height (then least |numerator|) inside the closed interval
// [lo, hi].  Used to pick deterministic sample coordinates.
inline Rational simplest_dyadic_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw error(errc::bad_interval, "empty interval");
    for (unsigned k = 0;; ++k) {
        Integer scale = integer_pow(2, k);
        Integer m_lo = rational_ceil(Rational(lo * scale));
        Integer m_hi = rational_floor(Rational(hi * scale));
        if (m_lo > m_hi) continue;
        Integer pick;
        if (m_lo <= 0 && 0 <= m_hi) pick = 0;
        else if (m_lo > 0) pick = m_lo;
        else pick = m_hi;
        Rational r(pick, scale);
        r.canonicalize();
        return r;
    }
}

} // namespace semialg
