#pragma once

#include <algorithm>
#include <vector>

#include "polynomial.hpp"

namespace semialg {

// Closed interval with rational endpoints.
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw error(errc::bad_interval, "inverted interval");
    }
    static RatInterval point(const Rational& v) { return RatInterval(v, v); }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    // +1 / -1 when the sign is definite over the whole interval, 0 otherwise.
    int definite_sign() const {
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        return 0;
    }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

inline RatInterval operator-(const RatInterval& a) { return RatInterval(-a.hi, -a.lo); }

inline RatInterval operator-(const RatInterval& a, const RatInterval& b) { return a + (-b); }

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline RatInterval interval_pow(const RatInterval& a, unsigned e) {
    if (e == 0) return RatInterval::point(Rational(1));
    if (e % 2 == 0) {
        // Even powers are nonnegative; tighten around zero-straddling input.
        Rational alo = rational_abs(a.lo), ahi = rational_abs(a.hi);
        Rational m = std::max(alo, ahi);
        Rational lo = a.contains_zero() ? Rational(0) : std::min(alo, ahi);
        return RatInterval(rational_pow(lo, e), rational_pow(m, e));
    }
    return RatInterval(rational_pow(a.lo, e), rational_pow(a.hi, e));
}

// Enclosure of p over the box; the box must assign every variable p uses.
inline RatInterval interval_eval(const Polynomial& p, const std::vector<RatInterval>& box) {
    if (!p.ring() || box.size() != p.ring()->size())
        throw error(errc::missing_assignment, "box arity does not match ring");
    RatInterval acc = RatInterval::point(Rational(0));
    for (const auto& t : p.terms()) {
        RatInterval term = RatInterval::point(t.coef);
        for (std::size_t v = 0; v < t.exp.size(); ++v)
            if (t.exp[v]) term = term * interval_pow(box[v], t.exp[v]);
        acc = acc + term;
    }
    return acc;
}

} // namespace semialg
