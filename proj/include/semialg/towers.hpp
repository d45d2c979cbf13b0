#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "elimination.hpp"
#include "gcd.hpp"
#include "univariate.hpp"

namespace semialg {

namespace detail {

// A triangular chain with rational coefficients plus, per level, the
// squarefree univariate eliminant whose real roots contain every possible
// value of that level's coordinate.
struct TowerSystem {
    std::vector<Polynomial> chain;
    std::vector<std::size_t> vars;
    std::vector<UPoly> elim;
};

} // namespace detail

// One real solution of a triangular chain.  Level j's coordinate is the only
// root of the level-j eliminant inside ivs[j]; the box formed by the
// intervals isolates the solution.  Queries refine the intervals in place,
// which never changes the isolated point.
struct TowerPoint {
    std::shared_ptr<const detail::TowerSystem> sys;
    mutable std::vector<RootInterval> ivs;

    std::size_t height() const { return ivs.size(); }
};

namespace detail {

inline Polynomial positive_primitive(const Polynomial& p) {
    return p.primitive();
}

inline int sign_at(const TowerSystem& sys, std::vector<RootInterval>& ivs,
                   std::size_t height, const Polynomial& q);

// p with the var-coefficients that vanish at the partial point stripped from
// the top, so its degree in var equals the degree of its specialization.
// nullopt when every coefficient vanishes there.
inline std::optional<Polynomial> truncate_at(const TowerSystem& sys,
                                             std::vector<RootInterval>& ivs,
                                             std::size_t height,
                                             const Polynomial& p, std::size_t var) {
    auto cs = p.coefficients_in(var);
    long top = static_cast<long>(cs.size()) - 1;
    while (top >= 0 && sign_at(sys, ivs, height, cs[static_cast<std::size_t>(top)]) == 0)
        --top;
    if (top < 0) return std::nullopt;
    if (top == static_cast<long>(cs.size()) - 1) return p;
    Polynomial x = Polynomial::variable(p.ring(), var);
    Polynomial out = Polynomial::zero(p.ring());
    for (long i = 0; i <= top; ++i)
        out += cs[static_cast<std::size_t>(i)] * x.pow(static_cast<unsigned>(i));
    return out;
}

// Sum of the sign of g over the distinct real roots of f inside (lo, hi),
// where f and g are first specialized at the partial point of the given
// height.  f must already be truncated at that point (nonvanishing leading
// coefficient) and must not vanish at lo or hi after specialization.
//
// Uses a pseudo-remainder chain of (f, f'*g).  Each element is truncated at
// the point before the next division, so specialized degrees match symbolic
// ones and the forced-even initial powers are strictly positive there; the
// specialized chain is then a signed remainder sequence up to positive
// factors, and the classical variation-difference count applies.
inline long tarski_range(const TowerSystem& sys, std::vector<RootInterval>& ivs,
                         std::size_t level, const Polynomial& f, const Polynomial& g,
                         const Rational& lo, const Rational& hi) {
    if (lo >= hi) throw error(errc::bad_interval, "empty interval");
    std::size_t v = sys.vars[level];
    if (level == 0)
        return tarski_query(upoly_from(f, v), upoly_from(g, v), lo, hi);

    if (f.degree_in(v) < 1) return 0;

    std::vector<Polynomial> sr;
    sr.push_back(f);
    auto s1 = truncate_at(sys, ivs, level, f.derivative(v) * g, v);
    if (s1) sr.push_back(positive_primitive(*s1));
    while (sr.size() > 1) {
        const Polynomial& a = sr[sr.size() - 2];
        const Polynomial& b = sr.back();
        long da = a.degree_in(v), db = b.degree_in(v);
        if (db < 1) break;
        long k = std::max(da - db + 1, 0l);
        Polynomial r = prem(a, b, v);
        if (k % 2 == 1) r = b.leading_coefficient_in(v) * r;
        auto rt = truncate_at(sys, ivs, level, -r, v);
        if (!rt) break;
        sr.push_back(positive_primitive(*rt));
    }

    auto variations = [&](const Rational& x) {
        std::vector<int> signs;
        signs.reserve(sr.size());
        for (const auto& s : sr)
            signs.push_back(sign_at(sys, ivs, level, s.substitute({{v, x}})));
        if (signs[0] == 0)
            throw error(errc::not_isolating, "interval endpoint is a root of the chain polynomial");
        return sign_variations(signs);
    };
    return static_cast<long>(variations(lo)) - static_cast<long>(variations(hi));
}

// Exact sign of q at the partial point formed by the first `height` levels.
// q may involve any of those levels' variables and no others.
inline int sign_at(const TowerSystem& sys, std::vector<RootInterval>& ivs,
                   std::size_t height, const Polynomial& q) {
    if (q.is_zero()) return 0;
    if (q.is_constant()) return sign(q.constant_value());

    std::size_t level = height;
    while (level > 0 && !q.depends_on(sys.vars[level - 1])) --level;
    if (level == 0) return sign(q.constant_value());
    --level;
    std::size_t v = sys.vars[level];

    if (level == 0)
        return sign_at_root(upoly_from(q, v), sys.elim[0], ivs[0]);

    auto ft = truncate_at(sys, ivs, level, sys.chain[level], v);
    if (!ft)
        throw degenerate_error("chain polynomial vanishes identically at a tower point");
    if (ft->degree_in(v) < 1)
        throw error(errc::not_isolating, "chain polynomial lost its main variable at a tower point");

    int corr = 1;
    Polynomial red = q;
    if (red.degree_in(v) >= ft->degree_in(v)) {
        long k = red.degree_in(v) - ft->degree_in(v) + 1;
        if (k % 2 == 1)
            corr = sign_at(sys, ivs, level, ft->leading_coefficient_in(v));
        red = prem(red, *ft, v);
        if (red.is_zero()) return 0;
    }
    if (!red.depends_on(v)) return corr * sign_at(sys, ivs, level, red);
    red = positive_primitive(red);
    long tq = tarski_range(sys, ivs, level, *ft, red, ivs[level].lo, ivs[level].hi);
    if (tq < -1 || tq > 1)
        throw error(errc::not_isolating, "tower interval contains more than one root");
    return corr * static_cast<int>(tq);
}

} // namespace detail

// All real solutions of the triangular chain chain[j] in Q[vars[0..j]], each
// with positive degree in its main variable vars[j].  Throws degenerate_error
// when the chain is not zero-dimensional over the rationals (an eliminant
// vanishes identically, or a chain polynomial vanishes at a partial
// solution).
inline std::vector<TowerPoint> tower_real_points(std::vector<Polynomial> chain,
                                                 std::vector<std::size_t> vars) {
    if (chain.size() != vars.size())
        throw error(errc::bad_input, "chain and main variable lists differ in length");
    for (std::size_t j = 0; j < vars.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (vars[i] == vars[j]) throw error(errc::bad_input, "repeated main variable");
    for (std::size_t j = 0; j < chain.size(); ++j) {
        if (chain[j].is_zero()) throw error(errc::zero_poly, "zero chain polynomial");
        if (chain[j].degree_in(vars[j]) < 1)
            throw error(errc::bad_input, "chain polynomial misses its main variable");
        const auto& ring = *chain[j].ring();
        for (std::size_t idx = 0; idx < ring.size(); ++idx) {
            if (!chain[j].depends_on(idx)) continue;
            bool listed = false;
            for (std::size_t i = 0; i <= j; ++i) listed = listed || vars[i] == idx;
            if (!listed) throw error(errc::bad_input, "chain is not triangular");
        }
    }

    auto sys = std::make_shared<detail::TowerSystem>();
    sys->chain = std::move(chain);
    sys->vars = std::move(vars);

    std::vector<std::vector<RootInterval>> candidates(sys->chain.size());
    for (std::size_t j = 0; j < sys->chain.size(); ++j) {
        Polynomial r = sys->chain[j];
        for (std::size_t i = j; i-- > 0;)
            if (r.depends_on(sys->vars[i])) r = resultant(r, sys->chain[i], sys->vars[i]);
        if (r.is_zero())
            throw degenerate_error("eliminant of a chain level vanishes identically");
        if (r.is_constant()) {
            sys->elim.emplace_back();
            continue;
        }
        sys->elim.push_back(upoly_squarefree(upoly_from(r, sys->vars[j])));
        candidates[j] = isolate_roots_squarefree(sys->elim[j]);
    }

    std::vector<TowerPoint> points{TowerPoint{sys, {}}};
    if (sys->chain.empty()) return points;
    Polynomial one = Polynomial::constant(sys->chain[0].ring(), Rational(1));
    for (std::size_t j = 0; j < sys->chain.size() && !points.empty(); ++j) {
        std::vector<TowerPoint> next;
        for (auto& pt : points) {
            if (j == 0) {
                for (const auto& iv : candidates[0])
                    next.push_back(TowerPoint{sys, {iv}});
                continue;
            }
            auto ft = detail::truncate_at(*sys, pt.ivs, j, sys->chain[j], sys->vars[j]);
            if (!ft)
                throw degenerate_error("chain polynomial vanishes identically at a tower point");
            if (ft->degree_in(sys->vars[j]) < 1) continue;
            for (const auto& iv : candidates[j]) {
                long n = detail::tarski_range(*sys, pt.ivs, j, *ft, one, iv.lo, iv.hi);
                if (n < 0 || n > 1)
                    throw error(errc::not_isolating, "eliminant interval is not isolating");
                if (n == 0) continue;
                std::vector<RootInterval> ext = pt.ivs;
                ext.push_back(iv);
                next.push_back(TowerPoint{sys, std::move(ext)});
            }
        }
        points = std::move(next);
    }
    return points;
}

// Exact sign of q at a tower point; q may involve exactly the chain's main
// variables.  Refines the point's intervals as a side effect.
inline int tower_sign_at(const TowerPoint& pt, const Polynomial& q) {
    const auto& ring = *q.ring();
    for (std::size_t idx = 0; idx < ring.size(); ++idx) {
        if (!q.depends_on(idx)) continue;
        bool listed = false;
        for (std::size_t j = 0; j < pt.height(); ++j) listed = listed || pt.sys->vars[j] == idx;
        if (!listed)
            throw error(errc::bad_input, "polynomial depends on a variable the point does not fix");
    }
    return detail::sign_at(*pt.sys, pt.ivs, pt.height(), q);
}

// Shrinks every coordinate interval strictly below the given width.
inline void tower_refine_below(const TowerPoint& pt, const Rational& width) {
    for (std::size_t j = 0; j < pt.height(); ++j)
        while (pt.ivs[j].hi - pt.ivs[j].lo >= width)
            pt.ivs[j] = refine_step(pt.sys->elim[j], pt.ivs[j]);
}

} // namespace semialg
