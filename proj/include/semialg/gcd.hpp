#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace semialg {

// Pseudo-remainder of f by g with respect to var: the unique r with
// lc_var(g)^k * f = q*g + r and deg_var(r) < deg_var(g), where
// k = max(deg_var(f) - deg_var(g) + 1, 0).
inline Polynomial prem(const Polynomial& f, const Polynomial& g, std::size_t var) {
    if (g.is_zero())
        throw error(errc::bad_divisor, "pseudo-division by zero");
    long dg = g.degree_in(var);
    if (dg < 1)
        throw error(errc::bad_input, "pseudo-divisor must have positive degree in the main variable");
    long df = f.degree_in(var);
    long k = std::max(df - dg + 1, 0l);
    if (k == 0) return f;

    Polynomial lc_g = g.leading_coefficient_in(var);
    Polynomial r = f;
    long steps = 0;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        long e = r.degree_in(var) - dg;
        Polynomial lc_r = r.leading_coefficient_in(var);
        Polynomial shift = Polynomial::variable(f.ring(), var).pow(static_cast<unsigned>(e));
        r = lc_g * r - lc_r * shift * g;
        ++steps;
    }
    for (; steps < k; ++steps) r = lc_g * r;
    return r;
}

inline Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

namespace detail {

inline Integer int_content(const Polynomial& p) {
    Integer g(0);
    for (const auto& t : p.terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num().get_mpz_t());
    return g;
}

inline Integer int_max_norm(const Polynomial& p) {
    Integer m(0);
    for (const auto& t : p.terms()) {
        Integer a = abs(t.coef.get_num());
        if (a > m) m = a;
    }
    return m;
}

// p with var evaluated at xi, by Horner over the var-coefficients.
inline Polynomial eval_var(const Polynomial& p, std::size_t var, const Rational& xi) {
    auto cs = p.coefficients_in(var);
    Polynomial acc = cs.back();
    for (std::size_t i = cs.size() - 1; i-- > 0;) acc = xi * acc + cs[i];
    return acc;
}

// Least-absolute-value residue of every coefficient mod xi.
inline Polynomial trunc_balanced(const Polynomial& p, const Integer& xi) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), t.coef.get_num().get_mpz_t(), xi.get_mpz_t());
        if (Integer(2 * r) > xi) r -= xi;
        if (sign(r) != 0) ts.push_back(Term{t.exp, Rational(r)});
    }
    return Polynomial::from_terms(p.ring(), std::move(ts));
}

inline Polynomial quo_ground(const Polynomial& p, const Integer& xi) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), t.coef.get_num().get_mpz_t(), xi.get_mpz_t());
        if (sign(q) != 0) ts.push_back(Term{t.exp, Rational(q)});
    }
    return Polynomial::from_terms(p.ring(), std::move(ts));
}

// Reads the gcd of the evaluated images back off its base-xi digits.
inline Polynomial gcd_interpolate(Polynomial h, const Integer& xi, std::size_t var) {
    std::vector<Term> ts;
    unsigned long i = 0;
    while (!h.is_zero()) {
        Polynomial d = trunc_balanced(h, xi);
        for (const auto& t : d.terms()) {
            Exponents e = t.exp;
            e[var] += i;
            ts.push_back(Term{std::move(e), t.coef});
        }
        h = quo_ground(h - d, xi);
        ++i;
    }
    Polynomial f = Polynomial::from_terms(h.ring(), std::move(ts));
    if (!f.is_zero() && sign(f.terms()[0].coef) < 0) return -f;
    return f;
}

// Heuristic gcd over the integers: evaluate one variable at a large point,
// recurse, and recover the gcd from the base-xi digits of the image gcd.
// Trial division certifies the candidate; nullopt means the heuristic lost.
inline std::optional<Polynomial> heugcd(Polynomial f, Polynomial g) {
    const auto& ring = f.ring();
    std::size_t var = ring->size();
    for (std::size_t v = 0; v < ring->size(); ++v)
        if (f.depends_on(v) || g.depends_on(v)) { var = v; break; }
    if (var == ring->size()) {
        Integer h;
        mpz_gcd(h.get_mpz_t(), f.constant_value().get_num().get_mpz_t(),
                g.constant_value().get_num().get_mpz_t());
        return Polynomial::constant(ring, Rational(h));
    }

    Integer c0;
    mpz_gcd(c0.get_mpz_t(), int_content(f).get_mpz_t(), int_content(g).get_mpz_t());
    if (c0 > 1) {
        Rational inv(1, c0);
        inv.canonicalize();
        f = inv * f;
        g = inv * g;
    }

    Integer fn = int_max_norm(f), gn = int_max_norm(g);
    Integer b = 2 * (fn < gn ? fn : gn) + 29;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), b.get_mpz_t());
    Integer xi = b < 99 * root ? b : Integer(99 * root);
    Integer lf = abs(f.leading_coefficient().get_num());
    Integer lg = abs(g.leading_coefficient().get_num());
    Integer alt = 2 * Integer(fn / lf < gn / lg ? fn / lf : gn / lg) + 4;
    if (alt > xi) xi = alt;

    long dv = std::max(f.degree_in(var), g.degree_in(var));
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<unsigned long>(dv + 1) >
            (1ul << 27))
            break;
        Rational xr(xi);
        Polynomial ff = eval_var(f, var, xr);
        Polynomial gg = eval_var(g, var, xr);
        if (!ff.is_zero() && !gg.is_zero()) {
            if (auto sub = heugcd(std::move(ff), std::move(gg))) {
                Polynomial h = gcd_interpolate(std::move(*sub), xi, var);
                if (!h.is_zero()) {
                    h = h.primitive();
                    if (try_exact_div(f, h) && try_exact_div(g, h))
                        return Rational(c0) * h;
                }
            }
        }
        mpz_sqrt(root.get_mpz_t(), xi.get_mpz_t());
        mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
        xi = 73794 * xi * root / 27011;
    }
    return std::nullopt;
}

} // namespace detail

// Gcd of the coefficients of p viewed as a univariate polynomial in var.
inline Polynomial poly_content_in(const Polynomial& p, std::size_t var) {
    Polynomial c(p.ring());
    for (const auto& ci : p.coefficients_in(var))
        if (!ci.is_zero()) {
            c = poly_gcd(c, ci);
            if (c.is_constant()) break;
        }
    return c.is_zero() ? Polynomial::constant(p.ring(), Rational(1)) : c;
}

inline Polynomial primitive_in(const Polynomial& p, std::size_t var) {
    Polynomial c = poly_content_in(p, var);
    if (c.is_constant()) return p.primitive();
    return exact_div(p, c).primitive();
}

// Multivariate gcd, heuristic first with a primitive pseudo-remainder
// sequence fallback.  The result is primitive with positive leading
// coefficient (constant 1 for coprime input).
inline Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    if (f.is_constant() || g.is_constant())
        return Polynomial::constant(f.ring() ? f.ring() : g.ring(), Rational(1));

    if (auto h = detail::heugcd(f.primitive(), g.primitive()))
        return h->normalized();

    std::size_t v = f.ring()->size();
    for (std::size_t k = 0; k < f.ring()->size(); ++k)
        if (f.depends_on(k) || g.depends_on(k)) { v = k; break; }

    if (!f.depends_on(v)) return poly_gcd(f, poly_content_in(g, v));
    if (!g.depends_on(v)) return poly_gcd(g, poly_content_in(f, v));

    Polynomial cf = poly_content_in(f, v);
    Polynomial cg = poly_content_in(g, v);
    Polynomial c = poly_gcd(cf, cg);
    Polynomial F = exact_div(f, cf);
    Polynomial G = exact_div(g, cg);
    if (F.degree_in(v) < G.degree_in(v)) std::swap(F, G);

    for (;;) {
        Polynomial r = prem(F, G, v);
        if (r.is_zero()) return (c * primitive_in(G, v)).normalized();
        if (r.degree_in(v) == 0) return c.normalized();
        F = G;
        G = primitive_in(r, v);
    }
}

inline bool divides(const Polynomial& d, const Polynomial& p) {
    return static_cast<bool>(try_exact_div(p, d));
}

// Largest squarefree divisor (same irreducible factors, multiplicity one),
// primitive with positive leading coefficient.
inline Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero())
        throw error(errc::zero_poly, "squarefree part of the zero polynomial");
    if (f.is_constant()) return Polynomial::constant(f.ring(), Rational(1));
    Polynomial d = f;
    for (std::size_t v : f.variables()) d = poly_gcd(d, f.derivative(v));
    if (d.is_constant()) return f.normalized();
    return exact_div(f, d).normalized();
}

// Pairwise-coprime squarefree polynomials whose product has the same radical
// as the product of the inputs.  Common factors between inputs are split out,
// so e.g. {x^2*y, x*y^2} refines to {x, y}.
inline std::vector<Polynomial> squarefree_basis(const std::vector<Polynomial>& polys) {
    std::vector<Polynomial> work;
    for (const auto& p : polys) {
        if (p.is_zero())
            throw error(errc::zero_input, "zero polynomial in squarefree basis input");
        if (!p.is_constant()) work.push_back(p.normalized());
    }
    std::vector<Polynomial> basis;
    while (!work.empty()) {
        Polynomial p = work.back();
        work.pop_back();
        if (p.is_constant()) continue;
        bool split = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Polynomial g = poly_gcd(p, basis[i]);
            if (g.is_constant()) continue;
            Polynomial q = basis[i];
            basis.erase(basis.begin() + i);
            work.push_back(g);
            Polynomial pr = exact_div(p, g).normalized();
            Polynomial qr = exact_div(q, g).normalized();
            if (!pr.is_constant()) work.push_back(pr);
            if (!qr.is_constant()) work.push_back(qr);
            split = true;
            break;
        }
        if (!split) basis.push_back(squarefree_part(p));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

} // namespace semialg
