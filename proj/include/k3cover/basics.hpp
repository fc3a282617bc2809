#pragma once

// Exact arithmetic base types and error conventions shared by the whole
// toolkit.  Everything numeric is boost::multiprecision; no floating point
// anywhere near lattice data.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3cover {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when input data violates a documented precondition (bad glue vector,
// odd self-intersection, non-reduced branch, ...).  The CLI maps this to
// exit code 2.
struct invalid_input : std::domain_error {
    explicit invalid_input(const std::string& what) : std::domain_error(what) {}
};

// Thrown on internal invariants that should be unreachable from any input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

#define K3_CHECK(cond, msg)                                                   \
    do {                                                                      \
        if (!(cond)) {                                                        \
            std::ostringstream k3_oss_;                                       \
            k3_oss_ << msg;                                                   \
            throw ::k3cover::invalid_input(k3_oss_.str());                    \
        }                                                                     \
    } while (0)

#define K3_ASSERT(cond, msg)                                                  \
    do {                                                                      \
        if (!(cond)) {                                                        \
            std::ostringstream k3_oss_;                                       \
            k3_oss_ << "internal: " << msg;                                   \
            throw ::k3cover::internal_error(k3_oss_.str());                   \
        }                                                                     \
    } while (0)

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Int to_int(const Rat& q) {
    K3_ASSERT(is_integer(q), "expected integer, got " << q);
    return numerator(q);
}

inline std::string str(const Rat& q) {
    std::ostringstream oss;
    oss << q;
    return oss.str();
}

inline std::string str(const Int& n) {
    std::ostringstream oss;
    oss << n;
    return oss.str();
}

// A value that may be pinned exactly, bounded below, or unresolved.  Used for
// invariants (q, p_g, ...) that depend on cohomology the fact registry cannot
// always settle; "needs input" is a first-class outcome, never a guess.
struct MaybeInt {
    enum class State { exact, at_least, unknown };
    State state = State::unknown;
    Int value = 0;          // meaningful for exact / at_least
    std::string note;       // why unknown / what the bound came from

    static MaybeInt exact(Int v) { return {State::exact, std::move(v), {}}; }
    static MaybeInt at_least(Int v, std::string why = {}) {
        return {State::at_least, std::move(v), std::move(why)};
    }
    static MaybeInt unknown(std::string why) {
        return {State::unknown, 0, std::move(why)};
    }

    bool is_exact() const { return state == State::exact; }
    bool known_at_least(const Int& v) const {
        return state != State::unknown && value >= v;
    }
    std::string render() const {
        switch (state) {
            case State::exact: return str(value);
            case State::at_least: return ">=" + str(value);
            default: return "needs-input";
        }
    }
};

}  // namespace k3cover
