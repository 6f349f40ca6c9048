#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration.
//
// The cell with the largest error estimate is bisected until the summed
// estimate drops below max(rel_tol * |value|, abs_floor), or until it is
// dominated by the rounding floor 50 * eps * integral of |f| on every cell.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ostrowski/expr.hpp"

namespace ostrowski {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t subdivisions = 0;
};

struct QuadOptions {
    double rel_tol = 1e-12;
    double abs_floor = 1e-14;
    std::size_t max_cells = 1'000'000;
};

using Integrand = std::function<double(double)>;

/// Integrates f over [a, b]; `breakpoints` seed the initial partition (kinks of f);
/// the FunctionSpec overload adds kink_points(f) itself.
/// a == b gives 0. Throws ConvergenceError naming the worst cell.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts = {},
                     std::span<const double> breakpoints = {});

QuadResult integrate(const FunctionSpec& f, double a, double b, double rel_tol = 1e-12,
                     std::span<const double> breakpoints = {});

/// Zeros in (a, b) of the argument of every abs() inside f, where f may have a kink.
std::vector<double> kink_points(const FunctionSpec& f, double a, double b);

/// Points in [a, b] where t -> |g(x) - g(t)| is not smooth: x itself and every
/// sign change of g(x) - g(t) found on a sampling grid and refined by bisection.
std::vector<double> abs_diff_breakpoints(const FunctionSpec& g, double x, double a, double b);

/// Integral of |g(x) - g(t)| dt over [a, b], a <= x <= b.
QuadResult integrate_abs_diff(const FunctionSpec& g, double x, double a, double b, double rel_tol = 1e-12);

/// Integral of w(t) |g(x) - g(t)| dt over [a, b]; negative weight samples are clamped to 0.
QuadResult integrate_weighted_abs_diff(const FunctionSpec& g, const FunctionSpec& w, double x, double a, double b,
                                       double rel_tol = 1e-12);

}  // namespace ostrowski
