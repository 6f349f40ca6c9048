#pragma once

// Bounds for the weighted average (1/M) * integral of w f over [a, b], where
// w >= 0 and M = integral of w > 0.

#include <cstddef>
#include <vector>

#include "ostrowski/expr.hpp"
#include "ostrowski/interval.hpp"

namespace ostrowski {

/// A non-negative weight on a fixed interval with its mass and cumulative
/// integral F(x) = integral of w over [a, x] precomputed at construction.
class WeightSpec {
public:
    /// Samples w at 4097 points: values below -1e-12 are rejected, values in
    /// [-1e-12, 0) are treated as 0. Throws PreconditionError for zero mass.
    WeightSpec(FunctionSpec w, const Interval& interval, double rel_tol = 1e-13);

    const FunctionSpec& function() const noexcept { return w_; }
    const Interval& interval() const noexcept { return interval_; }
    double total_mass() const noexcept { return cumulative_.back(); }

    /// Clamped weight value.
    double weight(double t) const;
    double cumulative(double x) const;
    /// Integral of w * g over [lo, hi] (a <= lo <= hi <= b).
    double integral_with(const FunctionSpec& g, double lo, double hi) const;

private:
    FunctionSpec w_;
    Interval interval_;
    double rel_tol_;
    std::vector<double> kinks_;
    std::vector<double> nodes_;
    std::vector<double> cumulative_;
};

/// |f(x) - (1/M) * integral of w f|.
double weighted_lhs(const FunctionSpec& f, const WeightSpec& weight, double x);

double weighted_bound(const FunctionSpec& g, const WeightSpec& weight, double x, double norm);

/// Leftmost x0 with F(x0) >= M/2 - tol * M, found by bisection on the monotone F.
double find_weight_median(const WeightSpec& weight, double tol = 1e-13);

/// The weighted bound at the weight median, where the g(x0) term cancels.
double weighted_median_bound(const FunctionSpec& g, const WeightSpec& weight, double norm, double tol = 1e-13);

double weighted_split_bound(const FunctionSpec& g, const WeightSpec& weight, double x, double norm_left,
                            double norm_right);

}  // namespace ostrowski
