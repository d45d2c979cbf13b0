#pragma once

#include <string>
#include <vector>

#include "elimination.hpp"
#include "system.hpp"

namespace semialg {

enum class FactorTag { initial, discriminant, ineq_resultant, eliminant };

inline const char* factor_tag_name(FactorTag t) {
    switch (t) {
        case FactorTag::initial: return "initial";
        case FactorTag::discriminant: return "discriminant";
        case FactorTag::ineq_resultant: return "ineq-resultant";
        case FactorTag::eliminant: return "eliminant";
    }
    return "?";
}

struct BorderFactor {
    Polynomial poly; // parameters only, squarefree, normalized
    FactorTag tag;
    std::string source;
};

// Squarefree pairwise-coprime factor list whose nonvanishing keeps the number
// of distinct real solutions of the source system locally constant.
struct BorderBasis {
    std::vector<BorderFactor> factors;
    bool generically_inconsistent = false;

    std::vector<Polynomial> polys() const {
        std::vector<Polynomial> out;
        out.reserve(factors.size());
        for (const auto& f : factors) out.push_back(f.poly);
        return out;
    }
};

// Eliminates from q every unknown the chain pins, by iterated resultants from
// the top of the chain down.  A vanishing resultant means q shares a factor
// with the chain polynomial; the shared part is divided out and the step
// retried, so the result is nonzero whenever q is.
inline Polynomial project_through_chain(Polynomial q, const TriBranch& branch) {
    for (std::size_t k = branch.chain.size(); k-- > 0;) {
        std::size_t v = branch.main_vars[k];
        while (!q.is_constant() && q.depends_on(v)) {
            Polynomial r = resultant(q, branch.chain[k], v);
            if (!r.is_zero()) {
                q = r;
                break;
            }
            Polynomial g = poly_gcd(q, branch.chain[k]);
            q = exact_div(q, g);
        }
        if (q.is_constant()) break;
    }
    return q;
}

// Border polynomial basis of a parametric system: initials and discriminants
// of the generic triangular chain plus iterated resultants of the inequality
// and inequation polynomials, all projected into the parameters, then reduced
// to a squarefree pairwise-coprime basis with provenance.
inline BorderBasis border_polynomial(const SemiAlgSystem& sys) {
    sys.validate();
    if (sys.equations.empty())
        throw error(errc::no_equation, "border polynomial requires at least one equation");
    if (sys.unknown_count() == 0)
        throw error(errc::bad_input, "border polynomial requires at least one unknown");

    std::vector<std::size_t> unknowns = sys.unknown_vars();
    TriBranch br = triangularize(sys.equations, unknowns, TriMode::generic, 1).front();

    if (!br.inconsistent) {
        for (std::size_t v : unknowns) {
            bool pinned = std::find(br.main_vars.begin(), br.main_vars.end(), v) !=
                          br.main_vars.end();
            if (!pinned)
                throw degenerate_error("equations leave unknown " + sys.ring->name(v) +
                                       " undetermined");
        }
    }

    std::vector<BorderFactor> raw;
    auto add_raw = [&](Polynomial p, FactorTag tag, const std::string& source) {
        p = project_through_chain(std::move(p), br);
        if (p.is_constant()) return;
        if (!sys.parameters_only(p))
            throw degenerate_error("projection left unknowns in " + p.to_string());
        p = p.normalized();
        for (const auto& f : raw)
            if (f.poly == p) return;
        raw.push_back(BorderFactor{std::move(p), tag, source});
    };

    for (std::size_t i = 0; i < br.chain.size(); ++i) {
        Polynomial init = br.chain[i].leading_coefficient_in(br.main_vars[i]);
        if (!init.is_constant())
            add_raw(init, FactorTag::initial,
                    "initial of the " + sys.ring->name(br.main_vars[i]) + " equation");
    }
    for (const auto& p : br.assumed_nonzero)
        add_raw(p, FactorTag::initial, "assumed initial");
    for (std::size_t i = 0; i < br.chain.size(); ++i) {
        if (br.chain[i].degree_in(br.main_vars[i]) < 2) continue;
        add_raw(discriminant(br.chain[i], br.main_vars[i]), FactorTag::discriminant,
                "discriminant of the " + sys.ring->name(br.main_vars[i]) + " equation");
    }
    auto add_ineqs = [&](const std::vector<Polynomial>& list, const std::string& name) {
        for (std::size_t j = 0; j < list.size(); ++j) {
            if (list[j].is_constant()) continue;
            add_raw(list[j], FactorTag::ineq_resultant, name + "[" + std::to_string(j) + "]");
        }
    };
    add_ineqs(sys.nonneg, "nonneg");
    add_ineqs(sys.strict_pos, "strict");
    add_ineqs(sys.nonzero, "nonzero");
    for (const auto& p : br.forced_zero) add_raw(p, FactorTag::eliminant, "eliminant");

    std::vector<Polynomial> raw_polys;
    raw_polys.reserve(raw.size());
    for (const auto& f : raw) raw_polys.push_back(f.poly);

    BorderBasis out;
    out.generically_inconsistent = br.inconsistent;
    for (const auto& b : squarefree_basis(raw_polys)) {
        FactorTag tag = FactorTag::ineq_resultant;
        std::string source = "basis";
        for (const auto& f : raw) {
            if (divides(b, f.poly)) {
                tag = f.tag;
                source = f.source;
                break;
            }
        }
        out.factors.push_back(BorderFactor{b, tag, source});
    }
    return out;
}

} // namespace semialg
