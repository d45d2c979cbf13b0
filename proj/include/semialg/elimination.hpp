#pragma once

#include <algorithm>
#include <vector>

#include "gcd.hpp"
#include "modular.hpp"
#include "polynomial.hpp"

namespace semialg {

// Resultant of f and g with respect to var, by the subresultant pseudo-
// remainder sequence.  Exact divisions keep intermediates small.
inline Polynomial resultant_prs(const Polynomial& f, const Polynomial& g, std::size_t var) {
    if (f.is_zero() || g.is_zero())
        throw error(errc::zero_input, "resultant of the zero polynomial");
    const VarOrderPtr& ring = f.ring();
    Polynomial A = f, B = g;
    long a = A.degree_in(var), b = B.degree_in(var);
    if (a == 0 && b == 0) return Polynomial::constant(ring, Rational(1));
    if (a == 0) return A.pow(static_cast<unsigned>(b));
    if (b == 0) return B.pow(static_cast<unsigned>(a));
    int s = 1;
    if (a < b) {
        std::swap(A, B);
        std::swap(a, b);
        if (a % 2 == 1 && b % 2 == 1) s = -s;
    }
    Polynomial gg = Polynomial::constant(ring, Rational(1));
    Polynomial h = gg;
    for (;;) {
        a = A.degree_in(var);
        b = B.degree_in(var);
        long delta = a - b;
        if (a % 2 == 1 && b % 2 == 1) s = -s;
        Polynomial R = prem(A, B, var);
        if (R.is_zero()) return Polynomial(ring);
        A = B;
        B = exact_div(R, gg * h.pow(static_cast<unsigned>(delta)));
        gg = A.leading_coefficient_in(var);
        if (delta > 0)
            h = exact_div(gg.pow(static_cast<unsigned>(delta)),
                          h.pow(static_cast<unsigned>(delta - 1)));
        if (B.degree_in(var) == 0) {
            long df = A.degree_in(var);
            Polynomial r = exact_div(B.pow(static_cast<unsigned>(df)),
                                     h.pow(static_cast<unsigned>(df - 1)));
            return s < 0 ? -r : r;
        }
    }
}

// Dispatch: bivariate inputs go through the modular path, everything else
// through the pseudo-remainder sequence.
inline Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
    if (!f.is_zero() && !g.is_zero() && f.degree_in(var) > 0 && g.degree_in(var) > 0)
        if (auto r = resultant_modular(f, g, var)) return *r;
    return resultant_prs(f, g, var);
}

// (-1)^(d(d-1)/2) * resultant(f, f') / lc, for d = deg(f) in var >= 1.
inline Polynomial discriminant(const Polynomial& f, std::size_t var) {
    long d = f.degree_in(var);
    if (d < 1)
        throw error(errc::bad_input, "discriminant requires positive degree");
    Polynomial res = resultant(f, f.derivative(var), var);
    Polynomial disc = exact_div(res, f.leading_coefficient_in(var));
    return ((d * (d - 1) / 2) % 2 == 1) ? -disc : disc;
}

// One projection step for open-cell decompositions: over a squarefree basis
// of the inputs, keep leading coefficients, discriminants, and pairwise
// resultants with respect to var, plus the basis members free of var.
inline std::vector<Polynomial> projection_set(const std::vector<Polynomial>& polys,
                                              std::size_t var) {
    std::vector<Polynomial> basis = squarefree_basis(polys);
    std::vector<Polynomial> out;
    std::vector<Polynomial> active;
    for (const auto& p : basis) {
        if (!p.depends_on(var)) {
            out.push_back(p);
            continue;
        }
        active.push_back(p);
        Polynomial lc = p.leading_coefficient_in(var);
        if (!lc.is_constant()) out.push_back(lc);
        if (p.degree_in(var) >= 2) {
            Polynomial disc = discriminant(p, var);
            if (!disc.is_constant()) out.push_back(disc);
        }
    }
    for (std::size_t i = 0; i < active.size(); ++i)
        for (std::size_t j = i + 1; j < active.size(); ++j) {
            Polynomial res = resultant(active[i], active[j], var);
            if (!res.is_constant()) out.push_back(res);
        }
    return squarefree_basis(out);
}

// One branch of a triangular decomposition: chain polynomials with strictly
// increasing main unknowns, valid where every assumed_nonzero polynomial is
// nonzero and every forced_zero polynomial (an unknown-free relation the
// equations imply) vanishes.  inconsistent marks a branch whose equations
// reduced to a nonzero constant.
struct TriBranch {
    std::vector<Polynomial> chain;
    std::vector<std::size_t> main_vars;
    std::vector<Polynomial> assumed_nonzero;
    std::vector<Polynomial> forced_zero;
    bool inconsistent = false;
};

enum class TriMode {
    split,   // case-split on vanishing initials: branches cover the zero set
    generic, // single branch, initials recorded as assumptions
};

namespace detail {

inline void push_unique(std::vector<Polynomial>& v, const Polynomial& p) {
    if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

inline long highest_unknown_in(const Polynomial& p, const std::vector<std::size_t>& unknowns) {
    for (std::size_t k = unknowns.size(); k-- > 0;)
        if (p.depends_on(unknowns[k])) return static_cast<long>(k);
    return -1;
}

} // namespace detail

// Decomposes the common zero set of eqs into triangular branches over the
// given unknowns (ascending significance; remaining variables are free
// coefficients).  In split mode the branches are pairwise disjoint and cover
// the whole zero set; branches whose equations are plainly unsatisfiable are
// dropped.
inline std::vector<TriBranch> triangularize(const std::vector<Polynomial>& eqs,
                                            const std::vector<std::size_t>& unknowns,
                                            TriMode mode, std::size_t branch_cap = 64) {
    struct State {
        std::vector<Polynomial> eqs;
        std::vector<Polynomial> side;
    };
    std::vector<State> work;
    {
        State init;
        for (const auto& e : eqs)
            if (!e.is_zero()) detail::push_unique(init.eqs, e.normalized());
        work.push_back(std::move(init));
    }
    std::vector<TriBranch> out;

    while (!work.empty()) {
        if (out.size() + work.size() > branch_cap)
            throw error(errc::unsupported, "triangular decomposition branch limit exceeded");
        State st = std::move(work.back());
        work.pop_back();

        TriBranch br;
        br.assumed_nonzero = st.side;
        bool dead = false;
        std::vector<Polynomial> pending = st.eqs;

        auto classify_free = [&](const Polynomial& p) {
            // p has no unknowns: a nonzero constant kills the branch; a
            // nonconstant poly is a forced relation among the free variables.
            if (p.is_constant()) {
                if (sign(p.constant_value()) != 0) dead = true;
                return;
            }
            detail::push_unique(br.forced_zero, p.normalized());
        };

        for (std::size_t k = unknowns.size(); k-- > 0 && !dead;) {
            std::size_t v = unknowns[k];
            std::vector<Polynomial> club, rest;
            for (auto& p : pending)
                (p.depends_on(v) ? club : rest).push_back(p);
            if (club.empty()) {
                pending = std::move(rest);
                continue;
            }
            while (!dead) {
                std::sort(club.begin(), club.end(),
                          [v](const Polynomial& x, const Polynomial& y) {
                              long dx = x.degree_in(v), dy = y.degree_in(v);
                              if (dx != dy) return dx < dy;
                              return Polynomial::cmp(x, y) < 0;
                          });
                Polynomial pmin = club.front();
                Polynomial init = pmin.leading_coefficient_in(v).normalized();
                bool fresh_init =
                    !init.is_constant() &&
                    std::find(br.assumed_nonzero.begin(), br.assumed_nonzero.end(), init) ==
                        br.assumed_nonzero.end();
                if (fresh_init) {
                    if (mode == TriMode::split) {
                        // Complementary branch: the initial vanishes, so pmin
                        // degenerates to its tail.  It inherits the nonzero
                        // assumptions accumulated so far, which keeps the
                        // branches pairwise disjoint.
                        State alt;
                        alt.side = br.assumed_nonzero;
                        long dv = pmin.degree_in(v);
                        Polynomial tail =
                            pmin - init * Polynomial::variable(pmin.ring(), v)
                                              .pow(static_cast<unsigned>(dv));
                        for (const auto& p : br.chain) detail::push_unique(alt.eqs, p);
                        for (const auto& p : club)
                            if (p != pmin) detail::push_unique(alt.eqs, p.normalized());
                        for (const auto& p : rest) detail::push_unique(alt.eqs, p);
                        detail::push_unique(alt.eqs, init);
                        if (!tail.is_zero()) detail::push_unique(alt.eqs, tail.normalized());
                        work.push_back(std::move(alt));
                    }
                    br.assumed_nonzero.push_back(init);
                }
                if (club.size() == 1) break;
                std::vector<Polynomial> next_club{pmin};
                for (std::size_t i = 1; i < club.size() && !dead; ++i) {
                    Polynomial r = prem(club[i], pmin, v);
                    if (r.is_zero()) continue;
                    r = r.normalized();
                    if (r.depends_on(v)) {
                        detail::push_unique(next_club, r);
                    } else if (detail::highest_unknown_in(r, unknowns) >= 0) {
                        detail::push_unique(rest, r);
                    } else {
                        classify_free(r);
                    }
                }
                club = std::move(next_club);
            }
            if (dead) break;
            br.chain.insert(br.chain.begin(), club.front());
            br.main_vars.insert(br.main_vars.begin(), v);
            pending = std::move(rest);
        }
        if (!dead)
            for (const auto& p : pending) {
                classify_free(p);
                if (dead) break;
            }
        if (dead) {
            // Split branches that die contribute nothing; the generic branch
            // is kept so callers can see what was assumed before it died.
            if (mode != TriMode::generic) continue;
            br.inconsistent = true;
        }
        out.push_back(std::move(br));
    }
    return out;
}

// Single-branch triangularization assuming initials do not vanish.
inline TriBranch generic_chain(const std::vector<Polynomial>& eqs,
                               const std::vector<std::size_t>& unknowns) {
    auto branches = triangularize(eqs, unknowns, TriMode::generic, 1);
    if (branches.size() != 1)
        throw error(errc::degenerate, "generic triangularization did not yield a single branch");
    return branches.front();
}

} // namespace semialg
