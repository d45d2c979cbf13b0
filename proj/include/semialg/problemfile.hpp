#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "parser.hpp"
#include "prover.hpp"

namespace semialg {

// Problem files are line oriented; '#' starts a comment and blank lines are
// skipped.  Each remaining line is one directive:
//
//   ring x a b c          variable order, leftmost eliminated first
//   params a b c          parameter block (or: params 3, the last 3 ring vars)
//   eq <poly>             polynomial equation = 0
//   ge <poly>             polynomial >= 0
//   gt <poly>             polynomial > 0
//   ne <poly>             polynomial != 0
//   goal <poly> >= 0      prove the goal (or: > 0)
//   count 1..inf          classify by solution count (or: 0, or: 2..3)
//
// Exactly one ring line is required.  A goal line selects proving, a count
// line selects classification; a file may not request both.

enum class ProblemMode { prove, classify };

struct ParsedProblem {
    ProblemMode mode = ProblemMode::prove;
    Problem problem;                      // prove mode
    SemiAlgSystem system;                 // classify mode
    CountTarget target = CountTarget::exact(0);
    std::vector<std::string> params;      // names given by the params directive
};

namespace detail {

[[noreturn]] inline void file_fail(std::size_t line, std::size_t col, const std::string& msg) {
    throw error(errc::syntax_error,
                "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline bool is_uint(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Re-anchor a polynomial parse error at its position in the source file.
// PolyParser reports "col N" relative to the payload, which starts at
// 1-based column `base` of line `line`.
inline Polynomial parse_payload_poly(const std::string& payload, const VarOrderPtr& ring,
                                     std::size_t line, std::size_t base) {
    try {
        return parse_polynomial(payload, ring);
    } catch (const error& e) {
        if (e.code() != errc::syntax_error) throw;
        std::string msg = e.what();
        std::string prefix = std::string(errc_name(errc::syntax_error)) + ": col ";
        std::size_t col = 1;
        if (msg.rfind(prefix, 0) == 0) {
            std::size_t i = prefix.size(), n = 0;
            while (i < msg.size() && std::isdigit(static_cast<unsigned char>(msg[i]))) {
                n = n * 10 + static_cast<std::size_t>(msg[i] - '0');
                ++i;
            }
            if (n > 0 && i + 2 <= msg.size() && msg[i] == ':') {
                col = n;
                msg = msg.substr(i + 2);
            }
        }
        file_fail(line, base + col - 1, msg);
    }
}

inline CountTarget parse_count_target(const std::string& text, std::size_t line, std::size_t base) {
    std::size_t dots = text.find("..");
    auto to_long = [&](const std::string& part, std::size_t off) -> long {
        if (!is_uint(part) || part.size() > 18) file_fail(line, base + off, "expected a count");
        return std::stol(part);
    };
    if (dots == std::string::npos) return CountTarget::exact(to_long(text, 0));
    std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    long l = to_long(lo, 0);
    if (hi == "inf") return CountTarget::at_least(l);
    long h = to_long(hi, dots + 2);
    if (h < l) file_fail(line, base, "empty count range");
    return CountTarget::range(l, h);
}

} // namespace detail

inline ParsedProblem parse_problem(const std::string& text) {
    using detail::file_fail;

    VarOrderPtr ring;
    std::vector<std::string> params;
    bool have_params = false;
    std::vector<Polynomial> equations, nonneg, strict_pos, nonzero;
    Polynomial goal;
    bool have_goal = false, goal_strict = false;
    CountTarget target = CountTarget::exact(0);
    bool have_count = false;
    std::size_t ring_line = 0;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::size_t hash = raw.find('#');
        std::string code = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (detail::trim(code).empty()) continue;

        std::size_t dstart = 0;
        while (dstart < code.size() && std::isspace(static_cast<unsigned char>(code[dstart]))) ++dstart;
        std::size_t dend = dstart;
        while (dend < code.size() && !std::isspace(static_cast<unsigned char>(code[dend]))) ++dend;
        std::string directive = code.substr(dstart, dend - dstart);
        std::size_t pstart = dend;
        while (pstart < code.size() && std::isspace(static_cast<unsigned char>(code[pstart]))) ++pstart;
        std::string payload = detail::trim(code.substr(pstart));
        std::size_t pcol = pstart + 1;

        auto split_names = [&]() {
            std::vector<std::string> names;
            std::istringstream ws(payload);
            std::string tok;
            while (ws >> tok) names.push_back(tok);
            return names;
        };
        auto need_ring = [&]() {
            if (!ring)
                throw error(errc::missing_ring,
                            "line " + std::to_string(lineno) + ": '" + directive +
                                "' before any ring directive");
        };

        if (directive == "ring") {
            if (ring) file_fail(lineno, dstart + 1, "duplicate ring directive");
            auto names = split_names();
            if (names.empty()) file_fail(lineno, pcol, "ring needs at least one variable");
            for (const auto& n : names) {
                if (!detail::is_identifier(n)) file_fail(lineno, pcol, "bad variable name '" + n + "'");
                for (const auto& m : names)
                    if (&m != &n && m == n) file_fail(lineno, pcol, "duplicate variable '" + n + "'");
            }
            ring = make_ring(names);
            ring_line = lineno;
        } else if (directive == "params") {
            need_ring();
            if (have_params) file_fail(lineno, dstart + 1, "duplicate params directive");
            auto names = split_names();
            if (names.empty()) file_fail(lineno, pcol, "params needs a count or variable names");
            if (names.size() == 1 && detail::is_uint(names[0])) {
                std::size_t n = static_cast<std::size_t>(std::stol(names[0]));
                if (n == 0 || n > ring->size())
                    file_fail(lineno, pcol, "params count out of range");
                for (std::size_t i = ring->size() - n; i < ring->size(); ++i)
                    params.push_back(ring->name(i));
            } else {
                for (const auto& n : names) {
                    if (!ring->index_of(n))
                        file_fail(lineno, pcol, "'" + n + "' is not a ring variable");
                    for (const auto& m : params)
                        if (m == n) file_fail(lineno, pcol, "duplicate parameter '" + n + "'");
                    params.push_back(n);
                }
            }
            have_params = true;
        } else if (directive == "eq" || directive == "ge" || directive == "gt" ||
                   directive == "ne") {
            need_ring();
            if (payload.empty()) file_fail(lineno, pcol, "missing polynomial");
            Polynomial p = detail::parse_payload_poly(payload, ring, lineno, pcol);
            if (directive == "eq") equations.push_back(p);
            else if (directive == "ge") nonneg.push_back(p);
            else if (directive == "gt") strict_pos.push_back(p);
            else nonzero.push_back(p);
        } else if (directive == "goal") {
            need_ring();
            if (have_goal || have_count)
                throw error(errc::conflicting_mode,
                            "line " + std::to_string(lineno) + ": more than one goal or count");
            std::size_t rel = payload.find('>');
            if (rel == std::string::npos)
                file_fail(lineno, pcol, "goal needs a '>= 0' or '> 0' relation");
            std::string ptext = detail::trim(payload.substr(0, rel));
            std::size_t after = rel + 1;
            bool strict = true;
            if (after < payload.size() && payload[after] == '=') {
                strict = false;
                ++after;
            }
            if (detail::trim(payload.substr(after)) != "0")
                file_fail(lineno, pcol + after, "goal relation must compare against 0");
            if (ptext.empty()) file_fail(lineno, pcol, "missing goal polynomial");
            goal = detail::parse_payload_poly(ptext, ring, lineno, pcol);
            goal_strict = strict;
            have_goal = true;
        } else if (directive == "count") {
            if (have_count || have_goal)
                throw error(errc::conflicting_mode,
                            "line " + std::to_string(lineno) + ": more than one goal or count");
            if (payload.empty()) file_fail(lineno, pcol, "missing count");
            target = detail::parse_count_target(payload, lineno, pcol);
            have_count = true;
        } else {
            file_fail(lineno, dstart + 1, "unknown directive '" + directive + "'");
        }
    }

    if (!ring) throw error(errc::missing_ring, "no ring directive");
    if (!have_goal && !have_count)
        throw error(errc::bad_input, "file has neither a goal nor a count directive");

    ParsedProblem out;
    out.params = params;
    if (have_goal) {
        out.mode = ProblemMode::prove;
        out.problem.ring = ring;
        out.problem.equations = equations;
        out.problem.nonneg = nonneg;
        out.problem.strict_pos = strict_pos;
        out.problem.nonzero = nonzero;
        out.problem.goal = goal;
        out.problem.goal_strict = goal_strict;
        out.problem.options.param_override = params;
        out.problem.validate();
    } else {
        out.mode = ProblemMode::classify;
        out.target = target;
        out.system.ring = ring;
        out.system.equations = equations;
        out.system.nonneg = nonneg;
        out.system.strict_pos = strict_pos;
        out.system.nonzero = nonzero;
        if (have_params) {
            std::vector<bool> is_param(ring->size(), false);
            for (const auto& n : params) is_param[*ring->index_of(n)] = true;
            for (std::size_t i = ring->size() - params.size(); i < ring->size(); ++i)
                if (!is_param[i])
                    throw error(errc::bad_input,
                                "line " + std::to_string(ring_line) +
                                    ": classification parameters must be the trailing ring variables");
            out.system.param_count = params.size();
        }
        out.system.validate();
    }
    return out;
}

inline ParsedProblem parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::bad_input, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

} // namespace semialg
