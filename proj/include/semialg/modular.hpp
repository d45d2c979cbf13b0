#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace semialg {

namespace modular {

// Arithmetic in Z/p for word-sized primes below 2^62.
struct Zp {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

// Deterministic sequence of primes just above 2^61.
inline std::uint64_t nth_prime(std::size_t i) {
    static std::vector<std::uint64_t> primes;
    static Integer cursor = Integer(1) << 61;
    while (primes.size() <= i) {
        mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
        primes.push_back(mpz_get_ui(cursor.get_mpz_t()));
    }
    return primes[i];
}

inline std::uint64_t reduce(const Integer& z, const Zp& zp) {
    return mpz_fdiv_ui(z.get_mpz_t(), zp.p);
}

// Inverses of 1..n via the standard linear recurrence.
inline std::vector<std::uint64_t> small_inverses(std::uint64_t n, const Zp& zp) {
    std::vector<std::uint64_t> inv(n + 1, 0);
    if (n >= 1) inv[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i)
        inv[i] = zp.mul(zp.p - zp.p / i, inv[zp.p % i]);
    return inv;
}

// Resultant of two univariate polynomials mod p via the Euclidean remainder
// recurrence.  Coefficient vectors are little-endian.
inline std::uint64_t upoly_resultant_zp(std::vector<std::uint64_t> f,
                                        std::vector<std::uint64_t> g, const Zp& zp) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) return 0;
    std::uint64_t res = 1;
    if (f.size() < g.size()) {
        if (((f.size() - 1) & 1) && ((g.size() - 1) & 1)) res = zp.p - 1;
        std::swap(f, g);
    }
    while (g.size() > 1) {
        std::size_t df = f.size() - 1, dg = g.size() - 1;
        std::uint64_t lg = g.back(), linv = zp.inv(lg);
        while (f.size() >= g.size()) {
            std::uint64_t q = zp.mul(f.back(), linv);
            std::size_t off = f.size() - g.size();
            for (std::size_t j = 0; j + 1 < g.size(); ++j)
                f[off + j] = zp.sub(f[off + j], zp.mul(q, g[j]));
            f.pop_back();
            trim(f);
            if (f.empty()) return 0;
        }
        res = zp.mul(res, zp.pow(lg, df - (f.size() - 1)));
        if ((df & 1) && (dg & 1)) res = zp.sub(0, res);
        std::swap(f, g);
    }
    return zp.mul(res, zp.pow(g[0], f.size() - 1));
}

// Newton-form interpolation state over consecutive-ish small integer nodes.
struct NewtonInterp {
    const Zp* zp;
    std::vector<std::uint64_t> xs, coef;
    const std::vector<std::uint64_t>* inv;

    void add(std::uint64_t x, std::uint64_t y) {
        std::uint64_t t = y;
        for (std::size_t k = 0; k < coef.size(); ++k) {
            t = zp->mul(zp->sub(t, coef[k]), (*inv)[x - xs[k]]);
        }
        xs.push_back(x);
        coef.push_back(t);
    }

    // Standard coefficients, low degree first.
    std::vector<std::uint64_t> expand() const {
        std::vector<std::uint64_t> acc;
        for (std::size_t k = coef.size(); k-- > 0;) {
            std::vector<std::uint64_t> next(acc.size() + 1, 0);
            for (std::size_t j = 0; j < acc.size(); ++j) {
                next[j + 1] = zp->add(next[j + 1], acc[j]);
                next[j] = zp->sub(next[j], zp->mul(acc[j], xs[k]));
            }
            if (next.empty()) next.push_back(0);
            next[0] = zp->add(next[0], coef[k]);
            acc = std::move(next);
        }
        while (!acc.empty() && acc.back() == 0) acc.pop_back();
        return acc;
    }
};

// Dense image of p mod the prime: out[i][j] multiplies v^i w^j; w may be
// npos for univariate input.  False when deg_v drops mod the prime.
inline bool bivar_image(const Polynomial& p, std::size_t v, std::size_t w, const Zp& zp,
                        std::vector<std::vector<std::uint64_t>>& out) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    long dv = p.degree_in(v);
    long dw = w == npos ? 0 : p.degree_in(w);
    out.assign(static_cast<std::size_t>(dv) + 1,
               std::vector<std::uint64_t>(static_cast<std::size_t>(dw) + 1, 0));
    for (const auto& t : p.terms()) {
        std::size_t i = t.exp[v];
        std::size_t j = w == npos ? 0 : t.exp[w];
        out[i][j] = zp.add(out[i][j], reduce(t.coef.get_num(), zp));
    }
    for (std::uint64_t c : out.back())
        if (c != 0) return true;
    return false;
}

inline std::uint64_t row_eval(const std::vector<std::uint64_t>& row, std::uint64_t t,
                              const Zp& zp) {
    std::uint64_t acc = 0;
    for (std::size_t j = row.size(); j-- > 0;) acc = zp.add(zp.mul(acc, t), row[j]);
    return acc;
}

} // namespace modular

// Exact resultant with respect to var for inputs whose variables are var and
// at most one other.  Univariate images mod enough primes to cover a
// Sylvester-determinant coefficient bound are interpolated and lifted by
// CRT, then spot-checked at fresh evaluation points of a fresh prime.
// nullopt means the inputs do not fit or the pseudo-remainder path looks
// cheaper; the caller falls back.
inline std::optional<Polynomial> resultant_modular(const Polynomial& f, const Polynomial& g,
                                                   std::size_t var) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t w = npos;
    for (std::size_t v : f.variables())
        if (v != var) {
            if (w != npos && w != v) return std::nullopt;
            w = v;
        }
    for (std::size_t v : g.variables())
        if (v != var) {
            if (w != npos && w != v) return std::nullopt;
            w = v;
        }
    if (w == npos) return std::nullopt;

    long df = f.degree_in(var), dg = g.degree_in(var);
    Rational cf = f.content(), cg = g.content();
    Polynomial F = f.primitive(), G = g.primitive();
    Rational scale(1);
    for (long i = 0; i < dg; ++i) scale *= cf;
    for (long i = 0; i < df; ++i) scale *= cg;

    long bound = df * G.degree_in(w) + dg * F.degree_in(w);
    std::size_t max_points = static_cast<std::size_t>(bound) + 1;

    // Every coefficient of the resultant is a coefficient of the Sylvester
    // determinant: at most (df+dg)! products, each bounded by the product of
    // the one-norms of its rows.  Primes are 61 bits or more.
    double log2_bound = 0;
    for (long k = 2; k <= df + dg; ++k) log2_bound += std::log2(static_cast<double>(k));
    auto log2_norm1 = [](const Polynomial& p) {
        Integer n(0);
        for (const auto& t : p.terms()) n += abs(t.coef.get_num());
        return static_cast<double>(mpz_sizeinbase(n.get_mpz_t(), 2));
    };
    log2_bound += dg * log2_norm1(F) + df * log2_norm1(G) + 2;
    std::size_t primes_needed = static_cast<std::size_t>(log2_bound / 61) + 1;

    std::vector<Integer> acc;       // balanced CRT lift, low degree first
    Integer modulus(1);
    std::size_t good = 0;
    std::vector<std::vector<std::uint64_t>> fi, gi;

    for (std::size_t pi = 0; good < primes_needed; ++pi) {
        if (pi >= primes_needed + 64) return std::nullopt;
        modular::Zp zp{modular::nth_prime(pi)};
#ifdef SEMIALG_TRACE_MODULAR
        std::fprintf(stderr, "[mod] prime %zu/%zu deg %zu\n", pi, primes_needed, acc.size());
#endif
        if (!modular::bivar_image(F, var, w, zp, fi)) continue;
        if (!modular::bivar_image(G, var, w, zp, gi)) continue;

        auto invs = modular::small_inverses(max_points + 64, zp);
        modular::NewtonInterp interp{&zp, {}, {}, &invs};
        std::size_t zeros_run = 0;
        std::vector<std::uint64_t> ft(fi.size()), gt(gi.size());
        for (std::uint64_t t = 0; t <= max_points + 64; ++t) {
            if (interp.xs.size() >= max_points) break;
            if (zeros_run >= 17 && interp.xs.size() > 17) break;
            if (interp.xs.size() > 2100) return std::nullopt;
            if (modular::row_eval(fi.back(), t, zp) == 0) continue;
            if (modular::row_eval(gi.back(), t, zp) == 0) continue;
            for (std::size_t i = 0; i < fi.size(); ++i) ft[i] = modular::row_eval(fi[i], t, zp);
            for (std::size_t i = 0; i < gi.size(); ++i) gt[i] = modular::row_eval(gi[i], t, zp);
            interp.add(t, modular::upoly_resultant_zp(ft, gt, zp));
            if (interp.coef.back() == 0) ++zeros_run;
            else zeros_run = 0;
        }
        auto coeffs = interp.expand();

        // Degrees in the thousands favor the pseudo-remainder path: each
        // prime here costs quadratic work in the degree, and huge images
        // usually come with huge coefficients needing many primes.
        if (coeffs.size() > 2048) return std::nullopt;
        if (good == 0) {
            std::size_t n = interp.xs.size();
            std::size_t per_prime =
                n * n / 2 + n * (fi.size() + gi.size()) * (fi[0].size() + gi[0].size());
            if (per_prime * primes_needed > (1ull << 33)) return std::nullopt;
        }

        if (acc.size() < coeffs.size()) acc.resize(coeffs.size(), Integer(0));
        Integer next_modulus = modulus * static_cast<unsigned long>(zp.p);
        Integer half = next_modulus / 2;
        std::uint64_t minv = zp.inv(modular::reduce(modulus, zp));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            std::uint64_t have = modular::reduce(acc[j], zp);
            std::uint64_t want = j < coeffs.size() ? coeffs[j] : 0;
            std::uint64_t delta = zp.mul(zp.sub(want, have), minv);
            acc[j] += modulus * static_cast<unsigned long>(delta);
            if (acc[j] > half) acc[j] -= next_modulus;
        }
        modulus = next_modulus;
        ++good;
    }

    // Spot check with a prime and points the lift never used.
    for (std::size_t pi = primes_needed + 64;; ++pi) {
        modular::Zp zp{modular::nth_prime(pi)};
        if (!modular::bivar_image(F, var, w, zp, fi)) continue;
        if (!modular::bivar_image(G, var, w, zp, gi)) continue;
        std::vector<std::uint64_t> rc(acc.size());
        for (std::size_t j = 0; j < acc.size(); ++j) rc[j] = modular::reduce(acc[j], zp);
        std::vector<std::uint64_t> ft(fi.size()), gt(gi.size());
        int checked = 0;
        for (std::uint64_t t = max_points + 65; checked < 8; ++t) {
            if (modular::row_eval(fi.back(), t, zp) == 0) continue;
            if (modular::row_eval(gi.back(), t, zp) == 0) continue;
            for (std::size_t i = 0; i < fi.size(); ++i) ft[i] = modular::row_eval(fi[i], t, zp);
            for (std::size_t i = 0; i < gi.size(); ++i) gt[i] = modular::row_eval(gi[i], t, zp);
            if (modular::upoly_resultant_zp(ft, gt, zp) != modular::row_eval(rc, t, zp))
                return std::nullopt;
            ++checked;
        }
        break;
    }

    const VarOrderPtr& ring = f.ring();
    std::vector<Term> ts;
    for (std::size_t j = 0; j < acc.size(); ++j) {
        if (sign(acc[j]) == 0) continue;
        Exponents e(ring->size(), 0);
        e[w] = static_cast<unsigned>(j);
        ts.push_back(Term{std::move(e), Rational(acc[j])});
    }
    return scale * Polynomial::from_terms(ring, std::move(ts));
}

} // namespace semialg
