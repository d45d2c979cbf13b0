#pragma once

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "problemfile.hpp"
#include "prover.hpp"

namespace semialg {

using json = nlohmann::ordered_json;

// --- shared pieces ----------------------------------------------------------

inline json json_interval(const RatInterval& iv) {
    return json::array({to_string(iv.lo), to_string(iv.hi)});
}

inline json border_json(const BorderBasis& b) {
    json arr = json::array();
    for (const auto& f : b.factors) {
        json e;
        e["poly"] = f.poly.to_string();
        e["tag"] = factor_tag_name(f.tag);
        e["degree"] = f.poly.total_degree();
        e["terms"] = f.poly.terms().size();
        arr.push_back(e);
    }
    return arr;
}

inline std::string format_border_text(const BorderBasis& b) {
    std::ostringstream os;
    if (b.factors.empty()) {
        os << "Border polynomial: empty (no degenerate parameter values)\n";
        return os.str();
    }
    os << "Border polynomial factors:\n";
    for (const auto& f : b.factors) {
        std::size_t terms = f.poly.terms().size();
        os << "  [" << factor_tag_name(f.tag) << "] " << f.poly.to_string() << "  (degree "
           << f.poly.total_degree() << ", " << terms << (terms == 1 ? " term" : " terms")
           << ")\n";
    }
    return os.str();
}

inline std::string format_literal(const SignLiteral& lit, const BorderBasis& border) {
    return "sign(" + border.factors.at(lit.factor).poly.to_string() + ") = " +
           std::to_string(lit.sgn);
}

inline std::string format_condition(const std::vector<std::vector<SignLiteral>>& dnf,
                                    const BorderBasis& border) {
    std::ostringstream os;
    for (std::size_t i = 0; i < dnf.size(); ++i) {
        if (i) os << "or\n";
        os << "  ";
        for (std::size_t j = 0; j < dnf[i].size(); ++j) {
            if (j) os << " and ";
            os << format_literal(dnf[i][j], border);
        }
        os << "\n";
    }
    return os.str();
}

// --- classification ---------------------------------------------------------

inline std::string format_classification_text(const SemiAlgSystem& sys, const CountTarget& target,
                                               const ClassificationResult& res) {
    std::ostringstream os;
    os << format_border_text(res.border);
    if (res.border.generically_inconsistent) {
        os << "The system is generically inconsistent: no real solutions away from the border.\n";
        return os.str();
    }
    if (res.uniform) {
        Integer n = res.cells.empty() ? Integer(0) : res.cells.front().count;
        os << "There is always " << to_string(n) << " real solution(s)!\n";
    } else {
        os << "The number of real solutions lies in " << target.to_string() << " exactly when:\n";
        if (res.condition.empty())
            os << "  never (no sampled cell matches)\n";
        else
            os << format_condition(res.condition, res.border);
    }
    os << "PROVIDED THAT\n";
    for (const auto& f : res.border.factors) os << "  " << f.poly.to_string() << " <> 0\n";
    for (const auto& h : sys.nonzero) {
        if (!sys.parameters_only(h)) continue;
        Polynomial hp = detail::positive_primitive(h);
        bool dup = false;
        for (const auto& f : res.border.factors)
            if (f.poly == hp) dup = true;
        if (!dup) os << "  " << h.to_string() << " <> 0\n";
    }
    if (res.ambiguous)
        os << "AMBIGUOUS: escalation left some nearby cells unresolved; the condition covers "
              "sampled cells only.\n";
    return os.str();
}

inline json classification_json(const SemiAlgSystem& sys, const CountTarget& target,
                                const ClassificationResult& res) {
    json j;
    j["mode"] = "classify";
    j["ring"] = sys.ring->names();
    json pnames = json::array();
    for (std::size_t v : sys.parameter_vars()) pnames.push_back(sys.ring->name(v));
    j["parameters"] = pnames;
    j["target"] = target.to_string();
    j["generically_inconsistent"] = res.border.generically_inconsistent;
    j["border"] = border_json(res.border);
    j["uniform"] = res.uniform;
    j["ambiguous"] = res.ambiguous;
    if (res.uniform)
        j["count"] = to_string(res.cells.empty() ? Integer(0) : res.cells.front().count);
    json cond = json::array();
    for (const auto& clause : res.condition) {
        json c = json::array();
        for (const auto& lit : clause) {
            json l;
            l["factor"] = lit.factor;
            l["poly"] = res.border.factors.at(lit.factor).poly.to_string();
            l["sign"] = lit.sgn;
            c.push_back(l);
        }
        cond.push_back(c);
    }
    j["condition"] = cond;
    json cells = json::array();
    for (const auto& cell : res.cells) {
        json c;
        json coords = json::array();
        for (const auto& q : cell.sample.coords) coords.push_back(to_string(q));
        c["sample"] = coords;
        c["count"] = to_string(cell.count);
        cells.push_back(c);
    }
    j["cells"] = cells;
    return j;
}

// --- proving ----------------------------------------------------------------

inline json witness_json(const Witness& w) {
    json j;
    j["ring"] = w.ring->names();
    json params;
    std::size_t first_param = w.ring->size() - w.param_count;
    for (std::size_t i = 0; i < w.param_count; ++i)
        params[w.ring->name(first_param + i)] = to_string(w.param_values[i]);
    j["parameters"] = params;
    json boxes;
    for (std::size_t i = 0; i < w.box_vars.size(); ++i)
        boxes[w.ring->name(w.box_vars[i])] = json_interval(w.boxes[i]);
    j["boxes"] = boxes;
    json chain = json::array();
    for (const auto& p : w.chain) chain.push_back(p.to_string());
    j["chain"] = chain;
    json side = json::array();
    for (const auto& p : w.side_nonzero) side.push_back(p.to_string());
    j["side_nonzero"] = side;
    json cert = json::array();
    for (const auto& e : w.certificate) {
        json c;
        c["kind"] = claim_kind_name(e.kind);
        c["label"] = e.label;
        c["poly"] = e.poly.to_string();
        json bounds = json::array();
        for (const auto& iv : e.bounds) bounds.push_back(json_interval(iv));
        c["bounds"] = bounds;
        if (e.kind == ClaimKind::equation_sign_change) c["face_var"] = w.ring->name(e.face_var);
        cert.push_back(c);
    }
    j["certificate"] = cert;
    return j;
}

inline std::string format_witness_text(const Witness& w) {
    std::ostringstream os;
    os << "Counterexample:\n";
    std::size_t first_param = w.ring->size() - w.param_count;
    for (std::size_t i = 0; i < w.param_count; ++i)
        os << "  " << w.ring->name(first_param + i) << " = " << to_string(w.param_values[i])
           << "\n";
    for (std::size_t i = 0; i < w.box_vars.size(); ++i)
        os << "  " << w.ring->name(w.box_vars[i]) << " in [" << to_string(w.boxes[i].lo) << ", "
           << to_string(w.boxes[i].hi) << "]\n";
    if (!w.chain.empty()) {
        os << "pinned by the triangular chain:\n";
        for (const auto& p : w.chain) os << "  " << p.to_string() << " = 0\n";
    }
    os << "certified claims:\n";
    for (const auto& e : w.certificate) {
        os << "  [" << claim_kind_name(e.kind) << "] " << e.label;
        for (const auto& iv : e.bounds)
            os << "  [" << to_string(iv.lo) << ", " << to_string(iv.hi) << "]";
        os << "\n";
    }
    return os.str();
}

inline std::string format_verdict_text(const Problem& p, const Verdict& v) {
    std::ostringstream os;
    os << proof_status_name(v.status) << "\n";
    os << "goal: " << p.goal.to_string() << (p.goal_strict ? " > 0" : " >= 0") << "\n";
    switch (v.status) {
    case ProofStatus::proved:
        os << "The refuting system has no real solutions anywhere.\n";
        break;
    case ProofStatus::proved_generic_closure:
        os << "There is always 0 real solution(s)!\n";
        os << "PROVIDED THAT\n";
        for (const auto& f : v.border.factors) os << "  " << f.poly.to_string() << " <> 0\n";
        os << "The goal is non-strict, so the generic result extends to the border by "
              "continuity.\n";
        break;
    case ProofStatus::disproved:
        if (v.witness) os << format_witness_text(*v.witness);
        break;
    case ProofStatus::unknown:
        os << "reason: " << v.reason << "\n";
        break;
    }
    if (!v.border.factors.empty() && v.status != ProofStatus::proved_generic_closure)
        os << format_border_text(v.border);
    return os.str();
}

inline json verdict_json(const Problem& p, const Verdict& v) {
    json j;
    j["mode"] = "prove";
    j["status"] = proof_status_name(v.status);
    j["goal"] = p.goal.to_string();
    j["goal_relation"] = p.goal_strict ? "> 0" : ">= 0";
    j["reason"] = v.reason;
    j["border"] = border_json(v.border);
    j["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    j["trace"] = v.trace;
    return j;
}

// --- univariate isolation ----------------------------------------------------

inline std::string format_isolation_text(const Polynomial& p,
                                         const std::vector<RootInterval>& roots) {
    std::ostringstream os;
    os << p.to_string() << " has " << roots.size() << " distinct real root(s)\n";
    for (const auto& r : roots)
        os << "  root in (" << to_string(r.lo) << ", " << to_string(r.hi) << ")\n";
    return os.str();
}

inline json isolation_json(const Polynomial& p, const std::vector<RootInterval>& roots) {
    json j;
    j["mode"] = "isolate";
    j["poly"] = p.to_string();
    j["distinct_real_roots"] = roots.size();
    json arr = json::array();
    for (const auto& r : roots) arr.push_back(json::array({to_string(r.lo), to_string(r.hi)}));
    j["intervals"] = arr;
    return j;
}

} // namespace semialg
