#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "ostrowski/error.hpp"

namespace ostrowski {

/// Closed interval [a, b] with a < b.
struct Interval {
    double a = 0.0;
    double b = 1.0;

    Interval() = default;
    Interval(double lo, double hi) : a(lo), b(hi) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
            throw PreconditionError("interval requires finite a < b, got [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
        }
    }

    double length() const noexcept { return b - a; }
    double midpoint() const noexcept { return 0.5 * a + 0.5 * b; }
    bool contains(double x) const noexcept { return a <= x && x <= b; }
    bool contains_interior(double x) const noexcept { return a < x && x < b; }
    bool positive() const noexcept { return a > 0.0; }
    bool inside_open_quarter_turn() const noexcept { return a > 0.0 && b < std::numbers::pi / 2.0; }

    void require_positive(const char* what) const {
        if (!positive()) throw PreconditionError(std::string(what) + " requires an interval inside (0, inf)");
    }
    void require_quarter_turn(const char* what) const {
        if (!inside_open_quarter_turn()) {
            throw PreconditionError(std::string(what) + " requires an interval inside (0, pi/2)");
        }
    }
    void require_contains(double x, const char* what) const {
        if (!contains(x)) throw PreconditionError(std::string(what) + ": x must lie in [a, b]");
    }
    void require_interior(double x, const char* what) const {
        if (!contains_interior(x)) throw PreconditionError(std::string(what) + ": x must lie in (a, b)");
    }
};

}  // namespace ostrowski
