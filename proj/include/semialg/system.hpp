#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace semialg {

// Conjunction F = 0, N >= 0, P > 0, H != 0 over a shared ring whose last
// param_count variables are parameters; the rest are unknowns.
struct SemiAlgSystem {
    VarOrderPtr ring;
    std::size_t param_count = 0;
    std::vector<Polynomial> equations;   // F
    std::vector<Polynomial> nonneg;      // N
    std::vector<Polynomial> strict_pos;  // P
    std::vector<Polynomial> nonzero;     // H

    std::size_t unknown_count() const { return ring->size() - param_count; }

    bool is_parameter(std::size_t var) const { return var >= unknown_count(); }

    std::vector<std::size_t> unknown_vars() const {
        std::vector<std::size_t> v(unknown_count());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
        return v;
    }

    std::vector<std::size_t> parameter_vars() const {
        std::vector<std::size_t> v(param_count);
        for (std::size_t i = 0; i < param_count; ++i) v[i] = unknown_count() + i;
        return v;
    }

    bool parameters_only(const Polynomial& p) const {
        for (std::size_t v = 0; v < unknown_count(); ++v)
            if (p.depends_on(v)) return false;
        return true;
    }

    void check(const Polynomial& p) const {
        if (!same_ring(p.ring(), ring)) throw error(errc::ring_mismatch, "system ring mismatch");
    }

    void validate() const {
        if (param_count > ring->size())
            throw error(errc::bad_input, "more parameters than ring variables");
        for (const auto& p : equations) check(p);
        for (const auto& p : nonneg) check(p);
        for (const auto& p : strict_pos) check(p);
        for (const auto& p : nonzero) check(p);
    }
};

// Requested number of distinct real solutions: an exact value or a closed
// range whose upper end may be absent (unbounded).
struct CountTarget {
    Integer lo;
    std::optional<Integer> hi;

    static CountTarget exact(long n) {
        if (n < 0) throw error(errc::bad_input, "negative solution count");
        return CountTarget{Integer(n), Integer(n)};
    }
    static CountTarget range(long l, long h) {
        if (l < 0 || h < l) throw error(errc::bad_input, "bad count range");
        return CountTarget{Integer(l), Integer(h)};
    }
    static CountTarget at_least(long l) {
        if (l < 0) throw error(errc::bad_input, "bad count range");
        return CountTarget{Integer(l), std::nullopt};
    }

    bool matches(const Integer& n) const { return n >= lo && (!hi || n <= *hi); }

    std::string to_string() const {
        if (hi && *hi == lo) return semialg::to_string(lo);
        return semialg::to_string(lo) + ".." + (hi ? semialg::to_string(*hi) : std::string("inf"));
    }
};

} // namespace semialg
