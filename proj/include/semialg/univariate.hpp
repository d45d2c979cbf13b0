#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace semialg {

// Dense integer univariate polynomial, c[i] the coefficient of x^i.
// Invariant: c is empty (the zero polynomial) or c.back() != 0.
struct UPoly {
    std::vector<Integer> c;

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_constant() const { return c.size() <= 1; }
};

inline UPoly upoly_trim(std::vector<Integer> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return UPoly{std::move(c)};
}

inline UPoly upoly_from_rationals(const std::vector<Rational>& q) {
    Integer den(1);
    for (const auto& x : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Integer> c(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        Rational scaled = q[i] * den;
        c[i] = scaled.get_num();
    }
    return upoly_trim(std::move(c));
}

// Requires p to involve no variable other than var.
inline UPoly upoly_from(const Polynomial& p, std::size_t var) {
    std::vector<Rational> q(static_cast<std::size_t>(std::max(p.degree_in(var), 0l)) + 1,
                            Rational(0));
    for (const auto& t : p.terms()) {
        for (std::size_t v = 0; v < t.exp.size(); ++v)
            if (v != var && t.exp[v] != 0)
                throw error(errc::bad_input, "polynomial is not univariate in the given variable");
        q[t.exp[var]] += t.coef;
    }
    return upoly_from_rationals(q);
}

inline Polynomial upoly_to_polynomial(const UPoly& f, const VarOrderPtr& ring, std::size_t var) {
    Polynomial p(ring);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        Exponents e(ring->size(), 0);
        e[var] = static_cast<unsigned>(i);
        p += Polynomial::monomial(ring, std::move(e), Rational(f.c[i]));
    }
    return p;
}

inline Rational upoly_eval(const UPoly& f, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = f.c.size(); i-- > 0;) acc = acc * x + Rational(f.c[i]);
    return acc;
}

inline int upoly_sign_at(const UPoly& f, const Rational& x) { return sign(upoly_eval(f, x)); }

inline UPoly upoly_derivative(const UPoly& f) {
    if (f.c.size() <= 1) return UPoly{};
    std::vector<Integer> c(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i) c[i - 1] = f.c[i] * static_cast<long>(i);
    return upoly_trim(std::move(c));
}

inline UPoly upoly_neg(UPoly f) {
    for (auto& x : f.c) x = -x;
    return f;
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly{};
    std::vector<Integer> c(a.c.size() + b.c.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] += a.c[i] * b.c[j];
    return upoly_trim(std::move(c));
}

inline Integer upoly_content(const UPoly& f) {
    Integer g(0);
    for (const auto& x : f.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

// Content-free, sign preserved.
inline UPoly upoly_primitive(UPoly f) {
    if (f.is_zero()) return f;
    Integer g = upoly_content(f);
    if (g > 1)
        for (auto& x : f.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return f;
}

// Content-free with positive leading coefficient.
inline UPoly upoly_normalized(UPoly f) {
    f = upoly_primitive(std::move(f));
    if (!f.is_zero() && f.c.back() < 0)
        for (auto& x : f.c) x = -x;
    return f;
}

// Pseudo-remainder: lc(g)^k * f = q*g + r with k = max(deg f - deg g + 1, 0).
// Returns {r, k}; k is needed by callers that must correct for the sign of
// the multiplier.
inline std::pair<UPoly, long> upoly_prem(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw error(errc::bad_divisor, "pseudo-division by zero");
    long df = f.degree(), dg = g.degree();
    long k = std::max(df - dg + 1, 0l);
    if (k == 0) return {f, 0};
    UPoly r = f;
    const Integer& l = g.c.back();
    long steps = 0;
    while (!r.is_zero() && r.degree() >= dg) {
        long e = r.degree() - dg;
        Integer lr = r.c.back();
        std::vector<Integer> nc(r.c.begin(), r.c.end() - 1);
        for (auto& x : nc) x *= l;
        for (long i = 0; i < dg; ++i)
            nc[static_cast<std::size_t>(e + i)] -= lr * g.c[static_cast<std::size_t>(i)];
        r = upoly_trim(std::move(nc));
        ++steps;
    }
    for (; steps < k; ++steps)
        for (auto& x : r.c) x *= l;
    return {r, k};
}

inline UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly f = upoly_normalized(a), g = upoly_normalized(b);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    for (;;) {
        if (g.is_constant()) return UPoly{{Integer(1)}};
        UPoly r = upoly_prem(f, g).first;
        if (r.is_zero()) return upoly_normalized(std::move(g));
        f = std::move(g);
        g = upoly_primitive(std::move(r));
    }
}

// Exact quotient f / d over the rationals, normalized; d must divide f.
inline UPoly upoly_divexact(const UPoly& f, const UPoly& d) {
    std::vector<Rational> num;
    num.reserve(f.c.size());
    for (const auto& x : f.c) num.emplace_back(x);
    long dd = d.degree();
    long dq = f.degree() - dd;
    if (dq < 0) throw error(errc::bad_input, "quotient degree negative");
    std::vector<Rational> q(static_cast<std::size_t>(dq) + 1, Rational(0));
    Rational lead(d.c.back());
    for (long i = dq; i >= 0; --i) {
        Rational cq = num[static_cast<std::size_t>(i + dd)] / lead;
        q[static_cast<std::size_t>(i)] = cq;
        for (long j = 0; j <= dd; ++j)
            num[static_cast<std::size_t>(i + j)] -= cq * Rational(d.c[static_cast<std::size_t>(j)]);
    }
    for (long j = 0; j < dd; ++j)
        if (sign(num[static_cast<std::size_t>(j)]) != 0)
            throw error(errc::bad_input, "division is not exact");
    return upoly_normalized(upoly_from_rationals(q));
}

inline UPoly upoly_squarefree(const UPoly& f) {
    if (f.is_zero()) throw error(errc::zero_poly, "squarefree part of zero");
    if (f.is_constant()) return UPoly{{Integer(1)}};
    UPoly d = upoly_gcd(f, upoly_derivative(f));
    if (d.is_constant()) return upoly_normalized(f);
    return upoly_divexact(f, d);
}

// Pairwise coprime squarefree polynomials covering exactly the real (indeed
// complex) roots of the inputs; constants drop out.  Splitting by gcds keeps
// each fragment squarefree, so the union of root sets is preserved.
inline std::vector<UPoly> upoly_coprime_basis(const std::vector<UPoly>& polys) {
    std::vector<UPoly> basis, queue;
    for (const auto& f : polys) {
        if (f.is_zero()) throw error(errc::zero_poly, "coprime basis of zero");
        if (!f.is_constant()) queue.push_back(upoly_squarefree(f));
    }
    while (!queue.empty()) {
        UPoly p = std::move(queue.back());
        queue.pop_back();
        if (p.is_constant()) continue;
        bool split = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            UPoly g = upoly_gcd(p, basis[i]);
            if (g.is_constant()) continue;
            UPoly b_rest = upoly_divexact(basis[i], g);
            UPoly p_rest = upoly_divexact(p, g);
            basis[i] = std::move(g);
            if (!b_rest.is_constant()) queue.push_back(std::move(b_rest));
            if (!p_rest.is_constant()) queue.push_back(std::move(p_rest));
            split = true;
            break;
        }
        if (!split) basis.push_back(std::move(p));
    }
    std::sort(basis.begin(), basis.end(),
              [](const UPoly& a, const UPoly& b) { return a.c < b.c; });
    return basis;
}

// Removes one occurrence of the exact rational root r (Horner deflation).
inline UPoly upoly_deflate(const UPoly& f, const Rational& r) {
    long d = f.degree();
    if (d < 1) throw error(errc::bad_input, "cannot deflate a constant");
    std::vector<Rational> h(static_cast<std::size_t>(d), Rational(0));
    Rational carry(f.c.back());
    for (long i = d - 1; i >= 0; --i) {
        h[static_cast<std::size_t>(i)] = carry;
        carry = Rational(f.c[static_cast<std::size_t>(i)]) + r * carry;
    }
    if (sign(carry) != 0) throw error(errc::bad_input, "deflation point is not a root");
    return upoly_normalized(upoly_from_rationals(h));
}

// 1 + max |c_i / c_d|: every real root has absolute value below this.
inline Rational upoly_cauchy_bound(const UPoly& f) {
    if (f.is_zero()) throw error(errc::zero_poly, "root bound of zero");
    Rational m(0);
    Integer lead = abs(f.c.back());
    for (std::size_t i = 0; i + 1 < f.c.size(); ++i) {
        Rational q(abs(f.c[i]), lead);
        q.canonicalize();
        m = std::max(m, q);
    }
    return m + 1;
}

inline Rational pow2_above(const Rational& x) {
    Rational p(1);
    while (p < x) p *= 2;
    return p;
}

// --- Sturm machinery -------------------------------------------------------

// Signed-remainder chain starting from (f, g): each element equals the true
// remainder-chain element up to a positive constant, so sign variation counts
// match the exact chain.
inline std::vector<UPoly> sturm_chain(const UPoly& f, const UPoly& g) {
    std::vector<UPoly> chain;
    UPoly a = upoly_primitive(f);
    if (a.is_zero()) throw error(errc::zero_poly, "sturm chain of zero");
    chain.push_back(a);
    UPoly b = upoly_primitive(g);
    if (b.is_zero()) return chain;
    chain.push_back(b);
    for (;;) {
        const UPoly& s0 = chain[chain.size() - 2];
        const UPoly& s1 = chain[chain.size() - 1];
        if (s1.is_constant()) return chain;
        auto [r, k] = upoly_prem(s0, s1);
        if (r.is_zero()) return chain;
        bool mult_neg = (s1.c.back() < 0) && (k % 2 == 1);
        if (!mult_neg) r = upoly_neg(std::move(r));
        chain.push_back(upoly_primitive(std::move(r)));
    }
}

inline std::vector<UPoly> sturm_chain(const UPoly& f) {
    return sturm_chain(f, upoly_derivative(f));
}

inline int sturm_sign_at_neg_inf(const UPoly& f) {
    int s = sign(f.c.back());
    return (f.degree() % 2 == 0) ? s : -s;
}

inline std::size_t sign_variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

inline std::size_t sturm_variations_at(const std::vector<UPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(upoly_sign_at(p, x));
    return sign_variations(signs);
}

inline std::size_t sturm_variations_at_inf(const std::vector<UPoly>& chain, int dir) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain)
        signs.push_back(dir > 0 ? sign(p.c.back()) : sturm_sign_at_neg_inf(p));
    return sign_variations(signs);
}

// Tarski query: sum of sign(g) over the distinct real roots of f in (lo, hi).
// Requires f(lo) != 0 and f(hi) != 0.
inline long tarski_query(const UPoly& f, const UPoly& g, const Rational& lo, const Rational& hi) {
    if (lo >= hi) throw error(errc::bad_interval, "empty interval");
    if (upoly_sign_at(f, lo) == 0 || upoly_sign_at(f, hi) == 0)
        throw error(errc::bad_interval, "interval endpoint is a root");
    if (f.is_constant()) return 0;
    auto chain = sturm_chain(f, upoly_mul(upoly_derivative(f), g));
    return static_cast<long>(sturm_variations_at(chain, lo)) -
           static_cast<long>(sturm_variations_at(chain, hi));
}

inline long tarski_query_all(const UPoly& f, const UPoly& g) {
    if (f.is_zero()) throw error(errc::zero_poly, "tarski query on zero");
    if (f.is_constant()) return 0;
    auto chain = sturm_chain(f, upoly_mul(upoly_derivative(f), g));
    return static_cast<long>(sturm_variations_at_inf(chain, -1)) -
           static_cast<long>(sturm_variations_at_inf(chain, +1));
}

// Distinct roots in (lo, hi), non-root endpoints required.
inline std::size_t sturm_count(const UPoly& f, const Rational& lo, const Rational& hi) {
    UPoly one{{Integer(1)}};
    long n = tarski_query(upoly_squarefree(f), one, lo, hi);
    return static_cast<std::size_t>(n);
}

inline std::size_t sturm_count_all(const UPoly& f) {
    if (f.is_constant()) return 0;
    UPoly one{{Integer(1)}};
    return static_cast<std::size_t>(tarski_query_all(upoly_squarefree(f), one));
}

// --- Root isolation (Descartes / bisection) --------------------------------

struct RootInterval {
    Rational lo, hi; // open interval, endpoints are not roots
};

namespace detail {

inline UPoly taylor_shift1(UPoly f) {
    long d = f.degree();
    for (long i = 0; i < d; ++i)
        for (long j = d - 1; j >= i; --j)
            f.c[static_cast<std::size_t>(j)] += f.c[static_cast<std::size_t>(j) + 1];
    return f;
}

inline UPoly upoly_reverse(const UPoly& f) {
    std::vector<Integer> c(f.c.rbegin(), f.c.rend());
    return upoly_trim(std::move(c));
}

// Number of sign variations of (1+x)^d f(1/(1+x)); bounds the root count of
// f in the open unit interval (0, 1).
inline std::size_t descartes_01_bound(const UPoly& f) {
    UPoly t = taylor_shift1(upoly_reverse(f));
    std::vector<int> signs;
    signs.reserve(t.c.size());
    for (const auto& x : t.c) signs.push_back(sign(x));
    return sign_variations(signs);
}

// 2^d f(x/2): maps roots in (0, 1/2) to roots in (0, 1).
inline UPoly scale_half(UPoly f) {
    long d = f.degree();
    for (long i = 0; i < d; ++i)
        f.c[static_cast<std::size_t>(i)] <<= static_cast<unsigned long>(d - i);
    return upoly_primitive(std::move(f));
}

// Integer polynomial whose roots in (0,1) correspond to the roots of f in
// (lo, hi) under x = lo + (hi - lo) t.
inline UPoly transform_to_01(const UPoly& f, const Rational& lo, const Rational& hi) {
    Rational w = hi - lo;
    // Horner composition: f(lo + w t) built from the top coefficient down.
    std::vector<Rational> acc;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        // acc := acc * (lo + w t) + c_i
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j] += acc[j] * lo;
            next[j + 1] += acc[j] * w;
        }
        if (next.empty()) next.push_back(Rational(0));
        next[0] += Rational(f.c[i]);
        acc = std::move(next);
    }
    return upoly_primitive(upoly_from_rationals(acc));
}

inline void isolate_open(const UPoly& f_sf, const UPoly& q, const Rational& lo, const Rational& hi,
                         std::vector<RootInterval>& out);

// Isolates the roots of f_sf in (lo, hi) when mid is known to be one of them.
inline void isolate_with_root_at(const UPoly& f_sf, const Rational& lo, const Rational& hi,
                                 const Rational& mid, std::vector<RootInterval>& out) {
    UPoly rest = upoly_deflate(f_sf, mid);
    std::vector<RootInterval> others;
    isolate_open(rest, transform_to_01(rest, lo, hi), lo, hi, others);
    Rational delta = std::min(Rational(mid - lo), Rational(hi - mid));
    for (auto& iv : others) {
        while (iv.lo <= mid && mid <= iv.hi) {
            // Shrink until the interval is clear of mid; its root is not mid.
            Rational m = (iv.lo + iv.hi) / 2;
            if (upoly_sign_at(rest, m) == 0) {
                Rational w = (iv.hi - iv.lo) / 8;
                iv = {m - w, m + w};
            } else if (upoly_sign_at(rest, iv.lo) * upoly_sign_at(rest, m) < 0) {
                iv.hi = m;
            } else {
                iv.lo = m;
            }
        }
        if (iv.hi <= mid) delta = std::min(delta, Rational(mid - iv.hi));
        else delta = std::min(delta, Rational(iv.lo - mid));
        out.push_back(iv);
    }
    delta /= 2;
    out.push_back(RootInterval{mid - delta, mid + delta});
}

inline void isolate_open(const UPoly& f_sf, const UPoly& q, const Rational& lo, const Rational& hi,
                         std::vector<RootInterval>& out) {
    std::size_t v = descartes_01_bound(q);
    if (v == 0) return;
    if (v == 1) {
        out.push_back(RootInterval{lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (upoly_sign_at(f_sf, mid) == 0) {
        isolate_with_root_at(f_sf, lo, hi, mid, out);
        return;
    }
    UPoly left = scale_half(q);
    UPoly right = taylor_shift1(left);
    isolate_open(f_sf, left, lo, mid, out);
    isolate_open(f_sf, right, mid, hi, out);
}

} // namespace detail

// Disjoint open isolating intervals for all distinct real roots of the
// squarefree polynomial fs, sorted left to right; no endpoint is a root.
inline std::vector<RootInterval> isolate_roots_squarefree(const UPoly& fs) {
    if (fs.is_zero()) throw error(errc::zero_poly, "cannot isolate roots of zero");
    if (fs.is_constant()) return {};
    Rational b = pow2_above(upoly_cauchy_bound(fs));
    while (upoly_sign_at(fs, b) == 0 || upoly_sign_at(fs, -b) == 0) b *= 2;
    std::vector<RootInterval> out;
    detail::isolate_open(fs, detail::transform_to_01(fs, -b, b), -b, b, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& c) { return a.lo < c.lo; });
    return out;
}

// Same, for arbitrary nonzero f.
inline std::vector<RootInterval> isolate_roots(const UPoly& f) {
    if (f.is_zero()) throw error(errc::zero_poly, "cannot isolate roots of zero");
    return isolate_roots_squarefree(upoly_squarefree(f));
}

// One bisection step on an isolating interval of the squarefree polynomial
// f_sf; the result still isolates the same root with non-root endpoints.
inline RootInterval refine_step(const UPoly& f_sf, const RootInterval& iv) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = upoly_sign_at(f_sf, mid);
    if (sm == 0) {
        Rational w = (iv.hi - iv.lo) / 8;
        return RootInterval{mid - w, mid + w};
    }
    if (upoly_sign_at(f_sf, iv.lo) * sm < 0) return RootInterval{iv.lo, mid};
    return RootInterval{mid, iv.hi};
}

inline RootInterval refine_below(const UPoly& f_sf, RootInterval iv, const Rational& width) {
    while (iv.hi - iv.lo >= width) iv = refine_step(f_sf, iv);
    return iv;
}

// Distinct roots of f in the open interval (lo, hi); endpoints that happen to
// be roots are not counted.
inline std::size_t count_roots_in(const UPoly& f, const Rational& lo, const Rational& hi) {
    if (lo >= hi) throw error(errc::bad_interval, "empty interval");
    if (f.is_zero()) throw error(errc::zero_poly, "root count of zero");
    UPoly fs = upoly_squarefree(f);
    std::size_t count = 0;
    for (auto iv : isolate_roots(fs)) {
        bool lo_is_root = upoly_sign_at(fs, lo) == 0;
        bool hi_is_root = upoly_sign_at(fs, hi) == 0;
        if (lo_is_root && iv.lo < lo && lo < iv.hi) continue;
        if (hi_is_root && iv.lo < hi && hi < iv.hi) continue;
        for (;;) {
            if (iv.lo >= hi || iv.hi <= lo) break;           // fully outside
            if (lo <= iv.lo && iv.hi <= hi) { ++count; break; } // fully inside
            iv = refine_step(fs, iv);
        }
    }
    return count;
}

// Exact sign of g at the single root of f_sf inside iv; refines iv in place.
inline int sign_at_root(const UPoly& g, const UPoly& f_sf, RootInterval& iv) {
    if (g.is_zero()) return 0;
    if (g.is_constant()) return sign(g.c[0]);
    UPoly shared = upoly_gcd(f_sf, g);
    if (!shared.is_constant() && count_roots_in(shared, iv.lo, iv.hi) > 0) return 0;
    while (count_roots_in(g, iv.lo, iv.hi) > 0) iv = refine_step(f_sf, iv);
    return upoly_sign_at(g, Rational((iv.lo + iv.hi) / 2));
}

struct RootSigns {
    std::size_t negative = 0, zero = 0, positive = 0;
};

// Distinct roots of f classified by the sign g takes there.
inline RootSigns count_roots_with_signs(const UPoly& f, const UPoly& g) {
    UPoly fs = upoly_squarefree(f);
    RootSigns out;
    for (auto iv : isolate_roots(fs)) {
        int s = sign_at_root(g, fs, iv);
        if (s < 0) ++out.negative;
        else if (s == 0) ++out.zero;
        else ++out.positive;
    }
    return out;
}

} // namespace semialg
