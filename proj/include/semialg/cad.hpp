#pragma once

#include <map>
#include <optional>
#include <vector>

#include "elimination.hpp"
#include "univariate.hpp"

namespace semialg {

struct CadOptions {
    long max_degree = 60;        // per projection polynomial
    std::size_t max_terms = 10000;
    int max_restarts = 3;        // degenerate-lift restarts
};

// Rational point in parameter space avoiding every factor's zero set, with
// the factor sign vector and the valid range of its last coordinate (used to
// draw alternative points inside the same cell).
struct SamplePoint {
    std::vector<Rational> coords;       // one per parameter, ring order
    std::vector<int> signs;             // one per factor, in factor order
    std::optional<Rational> gap_lo, gap_hi;
};

// Exact factor signs at a full parameter assignment.
inline std::vector<int> sign_vector(const std::vector<Polynomial>& factors,
                                    const std::vector<Rational>& coords,
                                    std::size_t first_param) {
    std::map<std::size_t, Rational> assign;
    for (std::size_t i = 0; i < coords.size(); ++i) assign[first_param + i] = coords[i];
    std::vector<int> signs;
    signs.reserve(factors.size());
    for (const auto& f : factors) {
        Polynomial v = f.substitute(assign);
        if (!v.is_constant() || sign(v.constant_value()) == 0)
            throw error(errc::on_variety, "factor vanishes at the sample point");
        signs.push_back(sign(v.constant_value()));
    }
    return signs;
}

// Projection levels for a repeated open-cell projection, eliminating the last
// parameter first.  levels[k] holds the polynomials whose highest parameter
// is parameter k (0-based), so levels[0] is univariate in the first one.
struct ProjectionCascade {
    std::vector<std::vector<Polynomial>> levels;
};

namespace detail {

inline long highest_param_of(const Polynomial& p, std::size_t first_param, std::size_t count) {
    for (std::size_t k = count; k-- > 0;)
        if (p.depends_on(first_param + k)) return static_cast<long>(k);
    return -1;
}

inline void check_cascade_caps(const Polynomial& p, const CadOptions& opt) {
    if (p.total_degree() > opt.max_degree)
        throw error(errc::unsupported, "projection degree cap exceeded: " + std::to_string(p.total_degree()));
    if (p.terms().size() > opt.max_terms)
        throw error(errc::unsupported, "projection size cap exceeded");
}

} // namespace detail

inline ProjectionCascade projection_cascade(const std::vector<Polynomial>& factors,
                                            std::size_t first_param, std::size_t param_count,
                                            const CadOptions& opt = {}) {
    for (const auto& f : factors)
        if (f.is_zero()) throw error(errc::zero_input, "zero factor in projection");
    ProjectionCascade out;
    out.levels.assign(param_count, {});
    std::vector<Polynomial> cur = squarefree_basis(factors);
    for (std::size_t k = param_count; k-- > 0;) {
        std::size_t var = first_param + k;
        std::vector<Polynomial> rest;
        for (const auto& p : cur) {
            long lvl = detail::highest_param_of(p, first_param, param_count);
            if (lvl == static_cast<long>(k)) {
                detail::check_cascade_caps(p, opt);
                out.levels[k].push_back(p);
            } else {
                rest.push_back(p);
            }
        }
        if (k == 0) break;
        if (out.levels[k].empty()) {
            cur = std::move(rest);
            continue;
        }
        std::vector<Polynomial> proj = projection_set(out.levels[k], var);
        for (auto& p : proj) {
            detail::check_cascade_caps(p, opt);
            rest.push_back(std::move(p));
        }
        cur = squarefree_basis(rest);
    }
    return out;
}

namespace detail {

struct degenerate_lift {
    std::vector<Polynomial> coefficients;
};

struct LevelStack {
    std::vector<RootInterval> ivs;            // refined, sorted, disjoint
    std::vector<std::optional<Rational>> exact;
    Integer bound;                            // integer >= every |root|
};

// Isolates the union of the real roots of the specialized level polynomials,
// factor by factor over a coprime basis, and pins down exact rational roots
// where a short search finds them, so outer samples sit just past the
// extreme roots.
inline LevelStack analyze_level(const std::vector<UPoly>& parts) {
    LevelStack st;
    st.bound = 0;
    std::vector<UPoly> basis = upoly_coprime_basis(parts);
    if (basis.empty()) return st;

    struct Tagged {
        RootInterval iv;
        std::size_t f;
    };
    std::vector<Tagged> roots;
    for (std::size_t fi = 0; fi < basis.size(); ++fi)
        for (const auto& iv : isolate_roots_squarefree(basis[fi]))
            roots.push_back(Tagged{iv, fi});
    auto by_lo = [](const Tagged& a, const Tagged& b) { return a.iv.lo < b.iv.lo; };
    std::sort(roots.begin(), roots.end(), by_lo);

    // Intervals of different basis members may overlap even though their
    // roots are distinct; bisecting the wider member of every overlapping
    // pair separates them all after finitely many rounds.
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            if (roots[i].iv.hi <= roots[i + 1].iv.lo) continue;
            Tagged& wide =
                Rational(roots[i].iv.hi - roots[i].iv.lo) >=
                        Rational(roots[i + 1].iv.hi - roots[i + 1].iv.lo)
                    ? roots[i]
                    : roots[i + 1];
            wide.iv = refine_step(basis[wide.f], wide.iv);
            again = true;
        }
        if (again) std::sort(roots.begin(), roots.end(), by_lo);
    }

    st.ivs.reserve(roots.size());
    st.exact.assign(roots.size(), std::nullopt);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const UPoly& sf = basis[roots[i].f];
        RootInterval iv = roots[i].iv;
        for (int round = 0; round < 8 && !st.exact[i]; ++round) {
            Rational cand = simplest_dyadic_in(iv.lo, iv.hi);
            if (upoly_sign_at(sf, cand) == 0) st.exact[i] = cand;
            else iv = refine_step(sf, iv);
        }
        Integer b;
        if (st.exact[i]) b = rational_ceil(rational_abs(*st.exact[i]));
        else b = rational_ceil(std::max(rational_abs(iv.lo), rational_abs(iv.hi)));
        if (b > st.bound) st.bound = b;
        st.ivs.push_back(iv);
    }
    return st;
}

} // namespace detail

// One rational sample per connected component of the complement of the
// factors' zero sets in parameter space, each with its exact sign vector.
// Deterministic; open cells only.
inline std::vector<SamplePoint> open_cell_samples(const std::vector<Polynomial>& factors,
                                                  std::size_t first_param,
                                                  std::size_t param_count,
                                                  const CadOptions& opt = {}) {
    if (param_count == 0) throw error(errc::bad_input, "no parameters to sample");
    std::vector<Polynomial> inputs = factors;
    for (int restart = 0;; ++restart) {
        ProjectionCascade cascade = projection_cascade(inputs, first_param, param_count, opt);
        std::vector<SamplePoint> out;
        std::vector<Rational> prefix;

        auto lift = [&](auto&& self, std::size_t level) -> void {
            std::vector<UPoly> parts;
            std::size_t var = first_param + level;
            std::map<std::size_t, Rational> assign;
            for (std::size_t i = 0; i < level; ++i) assign[first_param + i] = prefix[i];
            for (const auto& p : cascade.levels[level]) {
                Polynomial sp = level == 0 ? p : p.substitute(assign);
                if (sp.is_zero()) {
                    detail::degenerate_lift d;
                    for (const auto& c : p.coefficients_in(var))
                        if (!c.is_constant()) d.coefficients.push_back(c);
                    throw d;
                }
                if (sp.is_constant()) continue;
                parts.push_back(upoly_from(sp, var));
            }
            detail::LevelStack st = detail::analyze_level(parts);

            auto emit = [&](const Rational& x, std::optional<Rational> glo,
                            std::optional<Rational> ghi) {
                prefix.push_back(x);
                if (level + 1 == param_count) {
                    SamplePoint sp;
                    sp.coords = prefix;
                    sp.signs = sign_vector(inputs, prefix, first_param);
                    sp.gap_lo = std::move(glo);
                    sp.gap_hi = std::move(ghi);
                    out.push_back(std::move(sp));
                } else {
                    self(self, level + 1);
                }
                prefix.pop_back();
            };

            if (st.ivs.empty()) {
                emit(Rational(0), std::nullopt, std::nullopt);
                return;
            }
            Rational outer = Rational(st.bound) + 1;
            emit(-outer, std::nullopt, -outer);
            for (std::size_t i = 0; i + 1 < st.ivs.size(); ++i) {
                Rational lo = st.ivs[i].hi, hi = st.ivs[i + 1].lo;
                emit(simplest_dyadic_in(lo, hi), lo, hi);
            }
            emit(outer, outer, std::nullopt);
        };

        try {
            lift(lift, 0);
            return out;
        } catch (const detail::degenerate_lift& d) {
            if (restart >= opt.max_restarts)
                throw error(errc::unsupported,
                            "degenerate lifts persisted after " +
                                std::to_string(opt.max_restarts) + " restarts");
            if (d.coefficients.empty())
                throw error(errc::unsupported, "degenerate lift with no usable coefficients");
            for (const auto& c : d.coefficients) inputs.push_back(c);
        }
    }
}

// k-th deterministic alternative for a sample's last coordinate inside the
// same cell, with the sign vector rechecked; nullopt when none exists.
inline std::optional<SamplePoint> sample_variant(const SamplePoint& sp,
                                                 const std::vector<Polynomial>& factors,
                                                 std::size_t first_param, int k) {
    if (k < 1) throw error(errc::bad_input, "variant index starts at 1");
    Rational x;
    if (sp.gap_lo && sp.gap_hi) {
        if (*sp.gap_lo == *sp.gap_hi) return std::nullopt;
        if (k > 5) return std::nullopt;
        Rational t(k, 6);
        t.canonicalize();
        x = *sp.gap_lo + (*sp.gap_hi - *sp.gap_lo) * t;
    } else if (sp.gap_lo) {
        x = *sp.gap_lo + k;
    } else if (sp.gap_hi) {
        x = *sp.gap_hi - k;
    } else {
        x = Rational((k % 2 == 1) ? (k + 1) / 2 : -(k / 2));
    }
    SamplePoint alt = sp;
    alt.coords.back() = x;
    alt.signs = sign_vector(factors, alt.coords, first_param);
    if (alt.signs != sp.signs)
        throw error(errc::bad_input, "cell variant changed sign vector");
    return alt;
}

} // namespace semialg
