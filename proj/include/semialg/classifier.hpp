#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "borderpoly.hpp"
#include "cad.hpp"
#include "towers.hpp"

namespace semialg {

enum class SignReq { nonneg, positive, nonzero };

inline bool sign_meets(int s, SignReq r) {
    switch (r) {
        case SignReq::nonneg: return s >= 0;
        case SignReq::positive: return s > 0;
        case SignReq::nonzero: return s != 0;
    }
    return false;
}

namespace detail {

struct SignCond {
    Polynomial poly;
    SignReq req;
};

inline bool depends_on_any(const Polynomial& p, const std::vector<std::size_t>& vars) {
    for (std::size_t v : vars)
        if (p.depends_on(v)) return true;
    return false;
}

} // namespace detail

// One real solution of a specialized system: the triangular branch pinning
// the unknowns plus the tower point itself.
struct SpecializedSolution {
    std::vector<Polynomial> chain;
    std::vector<std::size_t> chain_vars;
    std::vector<Polynomial> assumed_nonzero;
    TowerPoint point;
};

// All distinct real solutions in the unknowns once every parameter is pinned
// to the given rational values (ring order).  Constraints that specialize to
// constants are decided directly; a violated one makes the solution set
// empty.  Throws degenerate_error when the specialized system stops being
// zero-dimensional, which signals the caller to try a nearby sample.
inline std::vector<SpecializedSolution> solutions_at(const SemiAlgSystem& sys,
                                                     const std::vector<Rational>& params) {
    sys.validate();
    if (params.size() != sys.param_count)
        throw error(errc::missing_assignment, "sample size does not match parameter count");
    std::map<std::size_t, Rational> assign;
    for (std::size_t i = 0; i < params.size(); ++i)
        assign[sys.unknown_count() + i] = params[i];

    std::vector<SpecializedSolution> out;
    std::vector<Polynomial> eqs;
    for (const auto& f : sys.equations) {
        Polynomial s = f.substitute(assign);
        if (s.is_zero()) continue;
        if (s.is_constant()) return out;
        eqs.push_back(std::move(s));
    }
    std::vector<detail::SignCond> conds;
    auto specialize = [&](const std::vector<Polynomial>& list, SignReq req) {
        for (const auto& p : list) {
            Polynomial s = p.substitute(assign);
            if (s.is_constant()) {
                if (!sign_meets(sign(s.constant_value()), req)) return false;
                continue;
            }
            conds.push_back(detail::SignCond{std::move(s), req});
        }
        return true;
    };
    if (!specialize(sys.nonneg, SignReq::nonneg)) return out;
    if (!specialize(sys.strict_pos, SignReq::positive)) return out;
    if (!specialize(sys.nonzero, SignReq::nonzero)) return out;

    if (eqs.empty()) {
        if (sys.unknown_count() == 0) {
            out.push_back(SpecializedSolution{{}, {}, {}, tower_real_points({}, {}).front()});
            return out;
        }
        if (sys.equations.empty())
            throw error(errc::no_equation, "cannot count an equation-free system with unknowns");
        throw degenerate_error("every equation vanishes identically at the sample");
    }

    for (const auto& br : triangularize(eqs, sys.unknown_vars(), TriMode::split)) {
        if (br.inconsistent) continue;
        bool dead = false;
        for (const auto& p : br.forced_zero)
            if (p.is_constant() && sign(p.constant_value()) != 0) dead = true;
        if (dead) continue;

        std::vector<std::size_t> free_unknowns;
        for (std::size_t u : sys.unknown_vars())
            if (std::find(br.main_vars.begin(), br.main_vars.end(), u) == br.main_vars.end())
                free_unknowns.push_back(u);
        for (const auto& p : br.chain)
            if (detail::depends_on_any(p, free_unknowns))
                throw degenerate_error("specialized chain leaves an unknown undetermined");

        std::vector<TowerPoint> kept;
        for (const auto& pt : tower_real_points(br.chain, br.main_vars)) {
            bool ok = true;
            for (const auto& nz : br.assumed_nonzero) {
                if (detail::depends_on_any(nz, free_unknowns)) continue;
                if (tower_sign_at(pt, nz) == 0) { ok = false; break; }
            }
            for (const auto& c : conds) {
                if (!ok) break;
                if (detail::depends_on_any(c.poly, free_unknowns)) continue;
                if (!sign_meets(tower_sign_at(pt, c.poly), c.req)) ok = false;
            }
            if (ok) kept.push_back(pt);
        }
        if (!kept.empty()) {
            if (!free_unknowns.empty())
                throw degenerate_error("positive-dimensional solution set at the sample");
            for (auto& pt : kept)
                out.push_back(SpecializedSolution{br.chain, br.main_vars, br.assumed_nonzero,
                                                  std::move(pt)});
        }
    }
    return out;
}

// Exact number of distinct real solutions at the sample.
inline Integer count_at(const SemiAlgSystem& sys, const std::vector<Rational>& params) {
    return Integer(static_cast<unsigned long>(solutions_at(sys, params).size()));
}

// One parameter cell: the rational sample actually counted (always off the
// border variety, signs in border-factor order) and its exact solution count.
struct CellCount {
    SamplePoint sample;
    Integer count;
};

// sign(factor) == sgn, factor indexing into the border basis.
struct SignLiteral {
    std::size_t factor;
    int sgn;
};

struct ClassificationResult {
    BorderBasis border;
    std::vector<CellCount> cells;
    bool uniform = false;
    bool ambiguous = false;
    // Disjunction of sign-literal conjunctions selecting exactly the cells
    // whose count meets the target.  A single empty conjunction means every
    // cell qualifies; an empty disjunction (with ambiguous false) means none
    // does.  Meaningless when ambiguous is set.
    std::vector<std::vector<SignLiteral>> condition;
};

struct ClassifyOptions {
    CadOptions cad;
    int degenerate_retries = 5;
    bool escalation = true;
};

namespace detail {

// True when every cell consistent with the literal set meets the target.
inline bool literals_safe(const std::vector<CellCount>& cells,
                          const std::vector<bool>& matches,
                          const std::vector<std::pair<std::size_t, int>>& lits) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
        bool covered = true;
        for (const auto& [idx, s] : lits)
            if (cells[c].sample.signs[idx] != s) { covered = false; break; }
        if (covered && !matches[c]) return false;
    }
    return true;
}

inline void assemble_condition(ClassificationResult& res, const CountTarget& target) {
    const auto& cells = res.cells;
    std::map<std::vector<int>, Integer> by_signs;
    for (const auto& c : cells) {
        auto it = by_signs.find(c.sample.signs);
        if (it == by_signs.end()) by_signs.emplace(c.sample.signs, c.count);
        else if (it->second != c.count) { res.ambiguous = true; return; }
    }

    std::vector<bool> matches(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) matches[i] = target.matches(cells[i].count);

    std::vector<std::vector<SignLiteral>> dnf;
    std::vector<std::vector<int>> seen;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!matches[i]) continue;
        if (std::find(seen.begin(), seen.end(), cells[i].sample.signs) != seen.end()) continue;
        seen.push_back(cells[i].sample.signs);

        std::vector<std::pair<std::size_t, int>> lits;
        for (std::size_t f = 0; f < cells[i].sample.signs.size(); ++f)
            lits.emplace_back(f, cells[i].sample.signs[f]);
        for (std::size_t f = 0; f < lits.size();) {
            auto trial = lits;
            trial.erase(trial.begin() + static_cast<long>(f));
            if (literals_safe(cells, matches, trial)) lits = std::move(trial);
            else ++f;
        }
        std::vector<SignLiteral> conj;
        conj.reserve(lits.size());
        for (const auto& [idx, s] : lits) conj.push_back(SignLiteral{idx, s});
        dnf.push_back(std::move(conj));
    }

    // Absorption: drop any conjunction implied by a more general one.
    auto subsumes = [](const std::vector<SignLiteral>& a, const std::vector<SignLiteral>& b) {
        for (const auto& la : a) {
            bool found = false;
            for (const auto& lb : b)
                if (lb.factor == la.factor && lb.sgn == la.sgn) { found = true; break; }
            if (!found) return false;
        }
        return true;
    };
    std::vector<std::vector<SignLiteral>> kept;
    for (std::size_t i = 0; i < dnf.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < dnf.size() && !absorbed; ++j) {
            if (i == j) continue;
            if (subsumes(dnf[j], dnf[i]) && (dnf[j].size() < dnf[i].size() || j < i))
                absorbed = true;
        }
        if (!absorbed) kept.push_back(dnf[i]);
    }
    res.condition = std::move(kept);
}

// Parametric split-branch initials and relations projected into the
// parameters; candidates for border escalation after persistent degeneracy.
inline std::vector<Polynomial> escalation_factors(const SemiAlgSystem& sys) {
    std::vector<Polynomial> out;
    for (const auto& br : triangularize(sys.equations, sys.unknown_vars(), TriMode::split)) {
        std::vector<Polynomial> raw = br.assumed_nonzero;
        for (std::size_t i = 0; i < br.chain.size(); ++i) {
            Polynomial init = br.chain[i].leading_coefficient_in(br.main_vars[i]);
            if (!init.is_constant()) raw.push_back(std::move(init));
        }
        for (const auto& p : br.forced_zero) raw.push_back(p);
        for (auto& p : raw) {
            Polynomial q = project_through_chain(std::move(p), br);
            if (q.is_constant() || !sys.parameters_only(q)) continue;
            q = q.normalized();
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
        }
    }
    return out;
}

inline BorderBasis extend_border(const BorderBasis& border, const std::vector<Polynomial>& extra) {
    std::vector<std::pair<Polynomial, const BorderFactor*>> raw;
    std::vector<Polynomial> polys;
    for (const auto& f : border.factors) {
        raw.emplace_back(f.poly, &f);
        polys.push_back(f.poly);
    }
    for (const auto& p : extra) {
        raw.emplace_back(p, nullptr);
        polys.push_back(p);
    }
    BorderBasis out;
    out.generically_inconsistent = border.generically_inconsistent;
    for (const auto& b : squarefree_basis(polys)) {
        const BorderFactor* from = nullptr;
        for (const auto& [p, src] : raw)
            if (divides(b, p)) { from = src; break; }
        if (from) out.factors.push_back(BorderFactor{b, from->tag, from->source});
        else out.factors.push_back(BorderFactor{b, FactorTag::initial, "escalated initial"});
    }
    return out;
}

} // namespace detail

// Counts distinct real solutions over one sample per open parameter cell of
// the border basis and aggregates the counts into a sign condition meeting
// the target.  Samples that lose genericity are retried within their cell and
// the border is extended once with parametric branch initials if degeneracy
// persists.
inline ClassificationResult real_root_classification(const SemiAlgSystem& sys,
                                                     const CountTarget& target,
                                                     const ClassifyOptions& opt = {}) {
    sys.validate();
    if (sys.equations.empty())
        throw error(errc::no_equation, "classification requires at least one equation");
    if (sys.param_count == 0)
        throw error(errc::bad_input, "classification requires parameters");

    BorderBasis border = border_polynomial(sys);
    for (int attempt = 0;; ++attempt) {
        std::vector<Polynomial> factors;
        for (const auto& f : border.factors) factors.push_back(f.poly);

        std::vector<SamplePoint> samples;
        if (factors.empty()) {
            SamplePoint origin;
            origin.coords.assign(sys.param_count, Rational(0));
            samples.push_back(std::move(origin));
        } else {
            samples = open_cell_samples(factors, sys.unknown_count(), sys.param_count, opt.cad);
        }

        std::vector<CellCount> cells;
        bool stuck = false;
        for (const auto& sp : samples) {
            std::optional<Integer> n;
            SamplePoint used = sp;
            try {
                n = count_at(sys, sp.coords);
            } catch (const degenerate_error&) {
                for (int k = 1; k <= opt.degenerate_retries && !n; ++k) {
                    auto alt = sample_variant(sp, factors, sys.unknown_count(), k);
                    if (!alt) break;
                    try {
                        n = count_at(sys, alt->coords);
                        used = std::move(*alt);
                    } catch (const degenerate_error&) {
                    }
                }
            }
            if (!n) { stuck = true; break; }
            cells.push_back(CellCount{std::move(used), std::move(*n)});
        }

        if (!stuck) {
            ClassificationResult res;
            res.border = std::move(border);
            res.cells = std::move(cells);
            res.uniform = true;
            for (const auto& c : res.cells)
                if (c.count != res.cells.front().count) res.uniform = false;
            detail::assemble_condition(res, target);
            return res;
        }

        if (!opt.escalation || attempt >= 1)
            throw error(errc::degenerate_exhausted,
                        "a parameter cell stayed degenerate through all retries");
        std::size_t before = border.factors.size();
        std::vector<Polynomial> before_polys = border.polys();
        border = detail::extend_border(border, detail::escalation_factors(sys));
        if (border.factors.size() == before && border.polys() == before_polys)
            throw error(errc::degenerate_exhausted,
                        "degenerate cell and no new border factors to add");
    }
}

} // namespace semialg
