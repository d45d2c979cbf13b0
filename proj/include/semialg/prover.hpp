#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "classifier.hpp"
#include "intervalarith.hpp"

namespace semialg {

enum class ClosureMode { generic, full };

inline ClassifyOptions prover_classify_defaults() {
    ClassifyOptions c;
    c.cad.max_degree = 1024;
    c.cad.max_terms = 5000000;
    return c;
}

struct ProveOptions {
    std::vector<std::string> param_override;  // names forced into the parameter block
    int depth = 3;                            // boundary recursion budget
    ClosureMode closure = ClosureMode::generic;
    ClassifyOptions classify = prover_classify_defaults();
};

// A nonnegativity question: show goal >= 0 (or > 0 when goal_strict) at every
// real point satisfying the hypothesis constraints.
struct Problem {
    VarOrderPtr ring;
    std::vector<Polynomial> equations;
    std::vector<Polynomial> nonneg;
    std::vector<Polynomial> strict_pos;
    std::vector<Polynomial> nonzero;
    Polynomial goal;
    bool goal_strict = false;
    ProveOptions options;

    void validate() const {
        if (!ring) throw error(errc::bad_input, "problem has no ring");
        auto chk = [&](const Polynomial& p) {
            if (!same_ring(p.ring(), ring))
                throw error(errc::ring_mismatch, "problem ring mismatch");
        };
        for (const auto& p : equations) chk(p);
        for (const auto& p : nonneg) chk(p);
        for (const auto& p : strict_pos) chk(p);
        for (const auto& p : nonzero) chk(p);
        chk(goal);
        if (options.depth < 0) throw error(errc::bad_input, "negative recursion depth");
    }
};

enum class ProofStatus { proved, proved_generic_closure, disproved, unknown };

inline const char* proof_status_name(ProofStatus s) {
    switch (s) {
    case ProofStatus::proved: return "PROVED";
    case ProofStatus::proved_generic_closure: return "PROVED_GENERIC_CLOSURE";
    case ProofStatus::disproved: return "DISPROVED";
    case ProofStatus::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

enum class ClaimKind {
    equation_sign_change,  // bounds: values on the lo and hi face, definite opposite signs
    equation_vanishes,     // bounds: value over the whole box, contains zero
    nonneg,                // lower end >= 0 on the whole box
    positive,              // lower end > 0
    nonzero,               // excludes zero
    goal_negative,         // upper end < 0
    goal_nonpositive,      // upper end <= 0
};

inline const char* claim_kind_name(ClaimKind k) {
    switch (k) {
    case ClaimKind::equation_sign_change: return "equation_sign_change";
    case ClaimKind::equation_vanishes: return "equation_vanishes";
    case ClaimKind::nonneg: return "nonneg";
    case ClaimKind::positive: return "positive";
    case ClaimKind::nonzero: return "nonzero";
    case ClaimKind::goal_negative: return "goal_negative";
    case ClaimKind::goal_nonpositive: return "goal_nonpositive";
    }
    return "?";
}

struct CertificateEntry {
    ClaimKind kind;
    std::string label;
    Polynomial poly;
    std::vector<RatInterval> bounds;
    std::size_t face_var = 0;  // variable pinned at the box faces for sign changes
};

inline bool claim_holds(const CertificateEntry& e) {
    switch (e.kind) {
    case ClaimKind::equation_sign_change:
        return e.bounds.size() == 2 && e.bounds[0].definite_sign() != 0 &&
               e.bounds[0].definite_sign() == -e.bounds[1].definite_sign();
    case ClaimKind::equation_vanishes:
        return e.bounds.size() == 1 && e.bounds[0].contains_zero();
    case ClaimKind::nonneg:
        return e.bounds.size() == 1 && sign(e.bounds[0].lo) >= 0;
    case ClaimKind::positive:
        return e.bounds.size() == 1 && sign(e.bounds[0].lo) > 0;
    case ClaimKind::nonzero:
        return e.bounds.size() == 1 && !e.bounds[0].contains_zero();
    case ClaimKind::goal_negative:
        return e.bounds.size() == 1 && sign(e.bounds[0].hi) < 0;
    case ClaimKind::goal_nonpositive:
        return e.bounds.size() == 1 && sign(e.bounds[0].hi) <= 0;
    }
    return false;
}

// Counterexample to the goal: exact parameter values plus a box pinning the
// unknowns, with interval bounds showing every constraint of the refuting
// system holds in the box while the goal fails.
struct Witness {
    VarOrderPtr ring;  // refuting system's ring, slack variable included
    std::size_t param_count = 0;
    std::vector<Rational> param_values;     // per parameter, ring order
    std::vector<std::size_t> box_vars;      // unknowns in chain order
    std::vector<RatInterval> boxes;         // one box per unknown
    std::vector<Polynomial> chain;          // specialized triangular chain pinning the unknowns
    std::vector<Polynomial> side_nonzero;   // chain initials nonzero at the point
    std::vector<CertificateEntry> certificate;

    std::vector<RatInterval> full_box() const {
        std::vector<RatInterval> box(ring->size(), RatInterval{Rational(0), Rational(0)});
        for (std::size_t i = 0; i < param_count; ++i) {
            std::size_t v = ring->size() - param_count + i;
            box[v] = RatInterval{param_values[i], param_values[i]};
        }
        for (std::size_t j = 0; j < box_vars.size(); ++j) box[box_vars[j]] = boxes[j];
        return box;
    }
};

struct Verdict {
    ProofStatus status = ProofStatus::unknown;
    std::string reason;               // set for UNKNOWN
    std::optional<Witness> witness;   // set for DISPROVED
    BorderBasis border;               // top-level border basis
    std::vector<std::string> trace;
};

// A counterexample to goal >= 0 is a hypothesis point with -goal > 0; a
// counterexample to goal > 0 is one with -goal >= 0.
inline SemiAlgSystem encode_refutation(const Problem& p) {
    p.validate();
    SemiAlgSystem sys;
    sys.ring = p.ring;
    sys.param_count = 0;
    sys.equations = p.equations;
    sys.nonneg = p.nonneg;
    sys.strict_pos = p.strict_pos;
    sys.nonzero = p.nonzero;
    if (p.goal_strict) sys.nonneg.push_back(-p.goal);
    else sys.strict_pos.push_back(-p.goal);
    return sys;
}

// u > 0 somewhere iff T - u = 0 is solvable with T > 0, so the last strict
// entry (or nonneg entry, for the weak form) becomes an equation with a fresh
// slack unknown and every original variable turns into a parameter.
inline SemiAlgSystem encode_slack(const SemiAlgSystem& sys) {
    sys.validate();
    if (!sys.equations.empty())
        throw error(errc::already_has_equation, "slack encoding requires an equation-free system");
    const bool strict = !sys.strict_pos.empty();
    if (!strict && sys.nonneg.empty())
        throw error(errc::bad_input, "no inequality available for slack encoding");

    std::string slack = "T";
    for (bool clash = true; clash;) {
        clash = false;
        for (std::size_t i = 0; i < sys.ring->size(); ++i)
            if (sys.ring->name(i) == slack) {
                slack += "_";
                clash = true;
            }
    }
    std::vector<std::string> names{slack};
    for (std::size_t i = 0; i < sys.ring->size(); ++i) names.push_back(sys.ring->name(i));
    VarOrderPtr ring = make_ring(names);
    Polynomial T = Polynomial::variable(ring, 0);

    SemiAlgSystem out;
    out.ring = ring;
    out.param_count = sys.ring->size();
    auto lift = [&](const std::vector<Polynomial>& list, std::size_t drop_last) {
        std::vector<Polynomial> v;
        for (std::size_t i = 0; i + drop_last < list.size(); ++i)
            v.push_back(map_to_ring(list[i], ring));
        return v;
    };
    if (strict) {
        out.equations.push_back(T - map_to_ring(sys.strict_pos.back(), ring));
        out.strict_pos = lift(sys.strict_pos, 1);
        out.strict_pos.push_back(T);
        out.nonneg = lift(sys.nonneg, 0);
    } else {
        out.equations.push_back(T - map_to_ring(sys.nonneg.back(), ring));
        out.nonneg = lift(sys.nonneg, 1);
        out.nonneg.push_back(T);
        out.strict_pos = lift(sys.strict_pos, 0);
    }
    out.nonzero = lift(sys.nonzero, 0);
    return out;
}

struct SplitChoice {
    std::vector<std::size_t> unknowns;  // original ring indices, ascending
    std::vector<std::size_t> params;
};

// One fresh main unknown per equation, lowest positive degree first (ties to
// the earlier variable); everything left over is a parameter.  An explicit
// override names the parameter block instead.
inline SplitChoice choose_split(const SemiAlgSystem& sys,
                                const std::vector<std::string>& param_override = {}) {
    if (sys.equations.empty())
        throw error(errc::no_equation, "cannot split an equation-free system");
    const std::size_t n = sys.ring->size();
    std::vector<char> mark(n, 0);
    SplitChoice sc;
    if (!param_override.empty()) {
        for (const auto& nm : param_override) {
            std::size_t v = sys.ring->require(nm);
            if (mark[v]) throw error(errc::bad_input, "duplicate parameter override: " + nm);
            mark[v] = 1;
        }
        for (std::size_t v = 0; v < n; ++v) (mark[v] ? sc.params : sc.unknowns).push_back(v);
        for (const auto& f : sys.equations) {
            bool has = false;
            for (std::size_t v : sc.unknowns)
                if (f.degree_in(v) > 0) { has = true; break; }
            if (!has)
                throw error(errc::unsatisfiable_split,
                            "equation has no unknown under the override: " + f.to_string());
        }
        return sc;
    }
    for (const auto& f : sys.equations) {
        long best_deg = -1;
        std::size_t best = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (mark[v]) continue;
            long d = f.degree_in(v);
            if (d > 0 && (best_deg < 0 || d < best_deg)) {
                best_deg = d;
                best = v;
            }
        }
        if (best_deg < 0)
            throw error(errc::unsatisfiable_split,
                        "no available main variable for equation " + f.to_string());
        mark[best] = 1;
    }
    for (std::size_t v = 0; v < n; ++v) (mark[v] ? sc.unknowns : sc.params).push_back(v);
    return sc;
}

namespace detail {

inline SemiAlgSystem rebuild_on(const SemiAlgSystem& sys, const std::vector<std::string>& names,
                                std::size_t param_count) {
    VarOrderPtr ring = make_ring(names);
    SemiAlgSystem out;
    out.ring = ring;
    out.param_count = param_count;
    auto lift = [&](const std::vector<Polynomial>& list) {
        std::vector<Polynomial> v;
        v.reserve(list.size());
        for (const auto& p : list) v.push_back(map_to_ring(p, ring));
        return v;
    };
    out.equations = lift(sys.equations);
    out.nonneg = lift(sys.nonneg);
    out.strict_pos = lift(sys.strict_pos);
    out.nonzero = lift(sys.nonzero);
    return out;
}

inline SemiAlgSystem apply_split(const SemiAlgSystem& sys, const SplitChoice& sc) {
    std::vector<std::string> names;
    for (std::size_t v : sc.unknowns) names.push_back(sys.ring->name(v));
    for (std::size_t v : sc.params) names.push_back(sys.ring->name(v));
    return rebuild_on(sys, names, sc.params.size());
}

}  // namespace detail

// Appending factor = 0 moves the analysis onto one border piece; one of the
// factor's variables leaves the parameter block as the new equation's unknown.
inline SemiAlgSystem build_boundary_child(const SemiAlgSystem& sys, const Polynomial& factor) {
    sys.check(factor);
    if (!sys.parameters_only(factor))
        throw error(errc::bad_input, "border factor must involve parameters only");
    long best_deg = -1;
    std::size_t fresh = 0;
    for (std::size_t v : sys.parameter_vars()) {
        long d = factor.degree_in(v);
        if (d > 0 && (best_deg < 0 || d < best_deg)) {
            best_deg = d;
            fresh = v;
        }
    }
    if (best_deg < 0)
        throw error(errc::unsatisfiable_split, "border factor has no variable");
    std::vector<std::string> names;
    for (std::size_t v = 0; v < sys.unknown_count(); ++v) names.push_back(sys.ring->name(v));
    names.push_back(sys.ring->name(fresh));
    for (std::size_t v : sys.parameter_vars())
        if (v != fresh) names.push_back(sys.ring->name(v));
    SemiAlgSystem out = detail::rebuild_on(sys, names, sys.param_count - 1);
    out.equations.push_back(map_to_ring(factor, out.ring));
    return out;
}

// Builds the certified counterexample box around one counted solution: exact
// rational coordinates where a chain level is linear, isolating intervals
// refined until every inequality of the system holds on the whole box.
inline Witness extract_witness(const SemiAlgSystem& sys, const std::vector<Rational>& sample,
                               std::size_t solution_index) {
    auto sols = solutions_at(sys, sample);
    if (solution_index >= sols.size())
        throw error(errc::bad_input, "no counted solution at this index");
    const SpecializedSolution& sol = sols[solution_index];

    Witness w;
    w.ring = sys.ring;
    w.param_count = sys.param_count;
    w.param_values = sample;
    w.box_vars = sol.chain_vars;
    w.chain = sol.chain;
    w.side_nonzero = sol.assumed_nonzero;

    std::map<std::size_t, Rational> pinned;
    for (std::size_t i = 0; i < sample.size(); ++i) pinned[sys.unknown_count() + i] = sample[i];

    const std::size_t h = sol.chain.size();
    std::vector<char> exact(h, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t j = 0; j < h; ++j) {
            if (exact[j]) continue;
            Polynomial q = sol.chain[j].substitute(pinned);
            std::size_t v = sol.chain_vars[j];
            if (q.degree_in(v) != 1) continue;
            bool pure = true;
            for (std::size_t u = 0; u < sys.ring->size() && pure; ++u)
                if (u != v && q.depends_on(u)) pure = false;
            if (!pure) continue;
            auto cs = q.coefficients_in(v);
            Rational r = -cs[0].constant_value() / cs[1].constant_value();
            if (!(sol.point.ivs[j].lo < r && r < sol.point.ivs[j].hi)) continue;
            pinned[v] = r;
            exact[j] = 1;
            changed = true;
        }
    }

    auto rebuild_boxes = [&]() {
        w.boxes.clear();
        for (std::size_t j = 0; j < h; ++j) {
            if (exact[j]) {
                const Rational& r = pinned.at(sol.chain_vars[j]);
                w.boxes.push_back(RatInterval{r, r});
            } else {
                w.boxes.push_back(RatInterval{sol.point.ivs[j].lo, sol.point.ivs[j].hi});
            }
        }
    };

    struct PendingClaim {
        ClaimKind kind;
        std::string label;
        const Polynomial* poly;
    };
    std::vector<PendingClaim> ineq;
    for (const auto& p : sys.nonneg)
        ineq.push_back({ClaimKind::nonneg, "nonneg: " + p.to_string(), &p});
    for (const auto& p : sys.strict_pos)
        ineq.push_back({ClaimKind::positive, "positive: " + p.to_string(), &p});
    for (const auto& p : sys.nonzero)
        ineq.push_back({ClaimKind::nonzero, "nonzero: " + p.to_string(), &p});
    for (const auto& p : sol.assumed_nonzero)
        ineq.push_back({ClaimKind::nonzero, "initial: " + p.to_string(), &p});

    Rational floor_w(Integer(1), Integer(1) << 64);
    floor_w.canonicalize();
    Rational width(1);
    std::vector<CertificateEntry> entries;
    for (;;) {
        rebuild_boxes();
        auto box = w.full_box();
        entries.clear();
        bool all_ok = true;
        for (const auto& c : ineq) {
            CertificateEntry e{c.kind, c.label, *c.poly, {interval_eval(*c.poly, box)}, 0};
            if (!claim_holds(e)) {
                all_ok = false;
                break;
            }
            entries.push_back(std::move(e));
        }
        if (all_ok) break;
        width /= 2;
        if (width < floor_w)
            throw error(errc::refinement_stalled, "witness box refinement stalled below 2^-64");
        tower_refine_below(sol.point, width);
    }

    auto box = w.full_box();
    std::vector<CertificateEntry> eqents;
    for (const auto& f : sys.equations) {
        CertificateEntry e{ClaimKind::equation_vanishes, "equation: " + f.to_string(), f, {}, 0};
        for (std::size_t j = 0; j < h && e.bounds.empty(); ++j) {
            std::size_t v = sol.chain_vars[j];
            if (!(box[v].lo < box[v].hi)) continue;
            auto lo_box = box, hi_box = box;
            lo_box[v] = RatInterval{box[v].lo, box[v].lo};
            hi_box[v] = RatInterval{box[v].hi, box[v].hi};
            RatInterval A = interval_eval(f, lo_box), B = interval_eval(f, hi_box);
            if (A.definite_sign() != 0 && A.definite_sign() == -B.definite_sign()) {
                e.kind = ClaimKind::equation_sign_change;
                e.bounds = {A, B};
                e.face_var = v;
                e.label += " (sign change across " + sys.ring->name(v) + ")";
            }
        }
        if (e.bounds.empty()) e.bounds = {interval_eval(f, box)};
        if (!claim_holds(e))
            throw error(errc::refinement_stalled, "equation enclosure misses zero: " + f.to_string());
        eqents.push_back(std::move(e));
    }

    w.certificate = std::move(eqents);
    for (auto& e : entries) w.certificate.push_back(std::move(e));
    return w;
}

namespace detail {

enum class HypPrep { kept, vacuous };

// Constant constraints are decided on the spot: a violated one empties the
// hypothesis set, a satisfied one carries no content.
inline HypPrep prep_hypotheses(Problem& p) {
    std::vector<Polynomial> eqs;
    for (const auto& f : p.equations) {
        if (f.is_zero()) continue;
        if (f.is_constant()) return HypPrep::vacuous;
        eqs.push_back(f);
    }
    p.equations = std::move(eqs);
    auto keep = [](std::vector<Polynomial>& list, auto ok) {
        std::vector<Polynomial> out;
        for (const auto& q : list) {
            if (q.is_constant()) {
                if (!ok(sign(q.constant_value()))) return false;
                continue;
            }
            out.push_back(q);
        }
        list = std::move(out);
        return true;
    };
    if (!keep(p.nonneg, [](int s) { return s >= 0; })) return HypPrep::vacuous;
    if (!keep(p.strict_pos, [](int s) { return s > 0; })) return HypPrep::vacuous;
    if (!keep(p.nonzero, [](int s) { return s != 0; })) return HypPrep::vacuous;
    return HypPrep::kept;
}

struct ProveState {
    const Problem* problem = nullptr;
    ProveOptions opt;
    bool closure_eligible = false;
    Verdict verdict;
};

inline void trace_line(ProveState& st, int depth, const std::string& s) {
    st.verdict.trace.push_back("[depth " + std::to_string(depth) + "] " + s);
}

struct RecResult {
    ProofStatus status = ProofStatus::unknown;
    std::string reason;
    std::optional<Witness> witness;
};

inline void append_goal_entry(Witness& w, const Problem& p) {
    Polynomial g = map_to_ring(p.goal, w.ring);
    CertificateEntry e{p.goal_strict ? ClaimKind::goal_nonpositive : ClaimKind::goal_negative,
                       "goal: " + g.to_string(),
                       g,
                       {interval_eval(g, w.full_box())},
                       0};
    if (!claim_holds(e))
        throw error(errc::refinement_stalled, "goal enclosure not definite on the witness box");
    w.certificate.push_back(std::move(e));
}

inline RecResult try_disprove(ProveState& st, const SemiAlgSystem& sys,
                              const std::vector<Rational>& sample) {
    const std::size_t n = solutions_at(sys, sample).size();
    for (std::size_t i = 0; i < n; ++i) {
        try {
            Witness w = extract_witness(sys, sample, i);
            append_goal_entry(w, *st.problem);
            return {ProofStatus::disproved, "", std::move(w)};
        } catch (const error& e) {
            if (e.code() != errc::refinement_stalled) throw;
        }
    }
    return {ProofStatus::unknown,
            std::string(errc_name(errc::refinement_stalled)) +
                ": no counted solution admits a certified box",
            std::nullopt};
}

inline RecResult prove_rec(ProveState& st, const SemiAlgSystem& sys, int depth, bool top) {
    if (sys.param_count == 0) {
        const std::size_t n = solutions_at(sys, {}).size();
        trace_line(st, depth, "no parameters left; direct count is " + std::to_string(n));
        if (n == 0) return {ProofStatus::proved, "", std::nullopt};
        return try_disprove(st, sys, {});
    }

    ClassificationResult res = real_root_classification(sys, CountTarget::exact(0), st.opt.classify);
    if (top) st.verdict.border = res.border;
    {
        std::ostringstream os;
        os << res.border.factors.size() << " border factor(s)";
        for (const auto& bf : res.border.factors) os << "; " << bf.poly.to_string();
        trace_line(st, depth, os.str());
    }

    bool any_positive = false;
    RecResult stalled;
    for (const auto& c : res.cells) {
        if (!(c.count > 0)) continue;
        any_positive = true;
        RecResult r = try_disprove(st, sys, c.sample.coords);
        if (r.status == ProofStatus::disproved) {
            trace_line(st, depth, "counterexample cell with count " + c.count.get_str());
            return r;
        }
        stalled = std::move(r);
    }
    if (any_positive) return stalled;

    trace_line(st, depth,
               "all " + std::to_string(res.cells.size()) + " open parameter cell(s) count zero");

    if (top && st.closure_eligible && st.opt.closure == ClosureMode::generic) {
        trace_line(st, depth, "continuity closure applies: non-strict goal, no strict hypotheses");
        return {ProofStatus::proved_generic_closure, "", std::nullopt};
    }
    if (res.border.factors.empty()) {
        trace_line(st, depth, "empty border: no real solutions for any parameter value");
        return {ProofStatus::proved, "", std::nullopt};
    }
    if (depth <= 0)
        return {ProofStatus::unknown,
                std::string(errc_name(errc::depth_exceeded)) + ": boundary recursion budget exhausted",
                std::nullopt};

    RecResult agg{ProofStatus::proved, "", std::nullopt};
    for (const auto& bf : res.border.factors) {
        SemiAlgSystem child = build_boundary_child(sys, bf.poly);
        trace_line(st, depth,
                   "boundary piece " + bf.poly.to_string() + " = 0, fresh unknown " +
                       child.ring->name(child.unknown_count() - 1));
        RecResult r = prove_rec(st, child, depth - 1, false);
        if (r.status == ProofStatus::disproved) return r;
        if (r.status != ProofStatus::proved && agg.status == ProofStatus::proved) {
            agg.status = ProofStatus::unknown;
            agg.reason = r.reason;
        }
    }
    return agg;
}

}  // namespace detail

inline Verdict prove(const Problem& problem) {
    detail::ProveState st;
    st.problem = &problem;
    st.opt = problem.options;
    Verdict& v = st.verdict;
    try {
        problem.validate();
        Problem p = problem;
        if (detail::prep_hypotheses(p) == detail::HypPrep::vacuous) {
            v.trace.push_back("a constant hypothesis is violated; the claim holds vacuously");
            v.status = ProofStatus::proved;
            return std::move(v);
        }
        if (p.goal.is_constant()) {
            int s = sign(p.goal.constant_value());
            if (p.goal_strict ? s > 0 : s >= 0) {
                v.trace.push_back("goal is a constant satisfying the claimed relation");
                v.status = ProofStatus::proved;
                return std::move(v);
            }
        }
        st.closure_eligible = !p.goal_strict && p.strict_pos.empty();

        SemiAlgSystem sys = encode_refutation(p);
        if (sys.equations.empty()) {
            if (!st.opt.param_override.empty()) {
                std::set<std::string> ov(st.opt.param_override.begin(), st.opt.param_override.end());
                std::set<std::string> all;
                for (std::size_t i = 0; i < p.ring->size(); ++i) all.insert(p.ring->name(i));
                if (ov != all)
                    throw error(errc::bad_input, "parameter override conflicts with slack encoding");
            }
            sys = encode_slack(sys);
            v.trace.push_back("slack encoding: " + sys.equations[0].to_string() + " = 0 with " +
                              sys.ring->name(0) + (p.goal_strict ? " >= 0" : " > 0"));
        } else {
            SplitChoice sc = choose_split(sys, st.opt.param_override);
            sys = detail::apply_split(sys, sc);
            std::ostringstream os;
            os << "unknowns:";
            for (std::size_t i = 0; i < sys.unknown_count(); ++i) os << " " << sys.ring->name(i);
            os << "; parameters:";
            for (std::size_t v2 : sys.parameter_vars()) os << " " << sys.ring->name(v2);
            v.trace.push_back(os.str());
        }

        detail::RecResult r = detail::prove_rec(st, sys, st.opt.depth, true);
        v.status = r.status;
        v.reason = std::move(r.reason);
        v.witness = std::move(r.witness);
    } catch (const error& e) {
        v.status = ProofStatus::unknown;
        v.reason = e.what();
    }
    return std::move(v);
}

// Independent recheck: rebuilds the refuting system, confirms every
// constraint is covered by a certificate claim, and recomputes every interval
// bound from scratch.
inline bool verify_witness(const Problem& problem, const Witness& w, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    try {
        problem.validate();
        Problem p = problem;
        if (detail::prep_hypotheses(p) == detail::HypPrep::vacuous)
            return fail("hypotheses are vacuous; no witness applies");
        if (!w.ring) return fail("witness has no ring");
        if (w.param_values.size() != w.param_count) return fail("parameter value count mismatch");
        if (w.box_vars.size() != w.boxes.size()) return fail("box count mismatch");
        if (w.param_count > w.ring->size()) return fail("parameter count exceeds ring size");
        const std::size_t unk = w.ring->size() - w.param_count;
        std::vector<char> seen(unk, 0);
        for (std::size_t v : w.box_vars) {
            if (v >= unk || seen[v]) return fail("boxes do not pin the unknowns");
            seen[v] = 1;
        }
        for (std::size_t v = 0; v < unk; ++v)
            if (!seen[v]) return fail("unknown variable without a box");
        for (const auto& b : w.boxes)
            if (b.lo > b.hi) return fail("inverted box");

        SemiAlgSystem sys = encode_refutation(p);
        if (sys.equations.empty()) sys = encode_slack(sys);

        auto covered = [&](const Polynomial& q, std::initializer_list<ClaimKind> kinds) {
            Polynomial m = map_to_ring(q, w.ring);
            for (const auto& e : w.certificate)
                for (ClaimKind k : kinds)
                    if (e.kind == k && e.poly == m) return true;
            return false;
        };
        for (const auto& f : sys.equations)
            if (!covered(f, {ClaimKind::equation_sign_change, ClaimKind::equation_vanishes}))
                return fail("equation not covered by the certificate: " + f.to_string());
        for (const auto& q : sys.nonneg)
            if (!covered(q, {ClaimKind::nonneg}))
                return fail("nonneg constraint not covered: " + q.to_string());
        for (const auto& q : sys.strict_pos)
            if (!covered(q, {ClaimKind::positive}))
                return fail("positivity constraint not covered: " + q.to_string());
        for (const auto& q : sys.nonzero)
            if (!covered(q, {ClaimKind::nonzero}))
                return fail("nonzero constraint not covered: " + q.to_string());
        if (!covered(p.goal,
                     {p.goal_strict ? ClaimKind::goal_nonpositive : ClaimKind::goal_negative}))
            return fail("goal violation claim missing");

        auto box = w.full_box();
        for (const auto& e : w.certificate) {
            if (!same_ring(e.poly.ring(), w.ring)) return fail("certificate entry on a foreign ring");
            CertificateEntry r = e;
            if (e.kind == ClaimKind::equation_sign_change) {
                if (e.face_var >= w.ring->size()) return fail("bad face variable");
                auto lo_box = box, hi_box = box;
                lo_box[e.face_var] = RatInterval{box[e.face_var].lo, box[e.face_var].lo};
                hi_box[e.face_var] = RatInterval{box[e.face_var].hi, box[e.face_var].hi};
                r.bounds = {interval_eval(e.poly, lo_box), interval_eval(e.poly, hi_box)};
            } else {
                r.bounds = {interval_eval(e.poly, box)};
            }
            if (!claim_holds(r)) return fail("recomputed bound violates the claim: " + e.label);
        }
        return true;
    } catch (const error& e) {
        return fail(e.what());
    }
}

struct RefinedLiteral {
    std::size_t factor;
    int sgn;
    bool closed;  // the factor's zero set also meets the target, so the bound includes equality
};

struct RefinedCondition {
    bool ambiguous = false;
    std::vector<std::vector<RefinedLiteral>> dnf;
};

// One-level boundary refinement of a classification condition: a literal
// closes when the target count also holds on the factor's zero set.
inline RefinedCondition refine_boundary_condition(const SemiAlgSystem& sys, const CountTarget& target,
                                                  const ClassificationResult& res,
                                                  const ClassifyOptions& opt = {}) {
    RefinedCondition rc;
    rc.ambiguous = res.ambiguous;
    std::map<std::size_t, bool> closable;
    auto boundary_matches = [&](std::size_t fi) {
        auto it = closable.find(fi);
        if (it != closable.end()) return it->second;
        bool ok = false;
        try {
            SemiAlgSystem child = build_boundary_child(sys, res.border.factors[fi].poly);
            if (child.param_count == 0) {
                ok = target.matches(count_at(child, {}));
            } else {
                ClassificationResult cres = real_root_classification(child, target, opt);
                ok = !cres.cells.empty();
                for (const auto& c : cres.cells)
                    if (!target.matches(c.count)) ok = false;
            }
        } catch (const error&) {
            ok = false;
        }
        closable[fi] = ok;
        return ok;
    };
    for (const auto& conj : res.condition) {
        std::vector<RefinedLiteral> out;
        for (const auto& lit : conj)
            out.push_back(RefinedLiteral{lit.factor, lit.sgn, boundary_matches(lit.factor)});
        rc.dnf.push_back(std::move(out));
    }
    return rc;
}

// Sum of cubes bound: under -1 <= x_i <= 1 and sum of x_i^3 = 0, the mean of
// the x_i is at most 1/3.
inline Problem make_ex6(long n) {
    if (n < 3) throw error(errc::bad_n, "n must be at least 3");
    std::vector<std::string> names;
    for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    VarOrderPtr ring = make_ring(names);
    Problem p;
    p.ring = ring;
    Polynomial one = Polynomial::constant(ring, Rational(1));
    Polynomial cubes = Polynomial::constant(ring, Rational(0));
    Polynomial total = cubes;
    for (long i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(ring, static_cast<std::size_t>(i));
        p.nonneg.push_back(xi + one);
        p.nonneg.push_back(one - xi);
        cubes = cubes + xi.pow(3);
        total = total + xi;
    }
    p.equations.push_back(cubes);
    Rational bound(n, 3);
    bound.canonicalize();
    p.goal = Polynomial::constant(ring, bound) - total;
    p.goal_strict = false;
    return p;
}

}  // namespace semialg
