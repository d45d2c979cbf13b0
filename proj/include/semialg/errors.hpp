#pragma once

#include <stdexcept>
#include <string>

namespace semialg {

enum class errc {
    unknown_variable,
    negative_exponent,
    ring_mismatch,
    missing_assignment,
    zero_input,
    zero_poly,
    bad_interval,
    not_isolating,
    bad_divisor,
    bad_input,
    unsupported,
    no_equation,
    on_variety,
    degenerate,
    degenerate_exhausted,
    already_has_equation,
    unsatisfiable_split,
    depth_exceeded,
    refinement_stalled,
    bad_n,
    syntax_error,
    missing_ring,
    conflicting_mode,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::unknown_variable: return "UNKNOWN_VARIABLE";
    case errc::negative_exponent: return "NEGATIVE_EXPONENT";
    case errc::ring_mismatch: return "RING_MISMATCH";
    case errc::missing_assignment: return "MISSING_ASSIGNMENT";
    case errc::zero_input: return "ZERO_INPUT";
    case errc::zero_poly: return "ZERO_POLY";
    case errc::bad_interval: return "BAD_INTERVAL";
    case errc::not_isolating: return "NOT_ISOLATING";
    case errc::bad_divisor: return "BAD_DIVISOR";
    case errc::bad_input: return "BAD_INPUT";
    case errc::unsupported: return "UNSUPPORTED";
    case errc::no_equation: return "NO_EQUATION";
    case errc::on_variety: return "ON_VARIETY";
    case errc::degenerate: return "DEGENERATE";
    case errc::degenerate_exhausted: return "DEGENERATE_EXHAUSTED";
    case errc::already_has_equation: return "ALREADY_HAS_EQUATION";
    case errc::unsatisfiable_split: return "UNSATISFIABLE_SPLIT";
    case errc::depth_exceeded: return "DEPTH_EXCEEDED";
    case errc::refinement_stalled: return "REFINEMENT_STALLED";
    case errc::bad_n: return "BAD_N";
    case errc::syntax_error: return "SYNTAX_ERROR";
    case errc::missing_ring: return "MISSING_RING";
    case errc::conflicting_mode: return "CONFLICTING_MODE";
    }
    return "UNKNOWN";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// Recoverable: a sample point turned out to be non-generic. Callers resample.
class degenerate_error : public error {
public:
    explicit degenerate_error(const std::string& what) : error(errc::degenerate, what) {}
};

} // namespace semialg
