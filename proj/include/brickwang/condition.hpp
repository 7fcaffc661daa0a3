#pragma once

#include "brickwang/board.hpp"

#include <string>

namespace brickwang {

/// Constraint on the colour of a single leg: exactly `c`, anything but `c`,
/// or unconstrained. Ordered strongest to weakest.
struct Condition {
    enum class Kind : std::uint8_t { Exact, Not, Any };

    Kind kind = Kind::Any;
    Color color = 0;

    static constexpr Condition exact(Color c) { return {Kind::Exact, c}; }
    static constexpr Condition not_(Color c) { return {Kind::Not, c}; }
    static constexpr Condition any() { return {Kind::Any, 0}; }

    constexpr bool accepts(Color x) const {
        switch (kind) {
            case Kind::Exact: return x == color;
            case Kind::Not: return x != color;
            case Kind::Any: return true;
        }
        return true;
    }

    constexpr bool is_any() const { return kind == Kind::Any; }

    /// Exact c -> Not c -> Any -> Any.
    constexpr Condition negated() const {
        switch (kind) {
            case Kind::Exact: return not_(color);
            case Kind::Not:
            case Kind::Any: return any();
        }
        return any();
    }

    friend constexpr bool operator==(const Condition& a, const Condition& b) {
        return a.kind == b.kind && (a.kind == Kind::Any || a.color == b.color);
    }
};

/// "=3", "!3" or "*".
std::string to_string(const Condition& c);

}  // namespace brickwang
