#pragma once

// Derivative-ratio seminorms. Sampled estimates evaluate the ratio on a uniform
// grid of `grid` cells (grid + 1 points) and refine every leading local maximum
// by golden-section search; each returned value is attained at `argmax`, so it
// never exceeds the true supremum.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "ostrowski/expr.hpp"
#include "ostrowski/interval.hpp"

namespace ostrowski {

enum class Provenance { Analytic, Sampled };

std::string to_string(Provenance p);

struct SupEstimate {
    double value = 0.0;
    double argmax = 0.0;
    Provenance provenance = Provenance::Analytic;
    Interval interval;

    /// A caller-asserted supremum. argmax defaults to the interval midpoint.
    static SupEstimate analytic(double value, const Interval& interval);
    static SupEstimate analytic(double value, const Interval& interval, double argmax);
};

inline constexpr std::size_t kDefaultSupGrid = 4096;
inline constexpr std::size_t kMinSupGrid = 64;

/// |g'| below this is treated as a zero of g'.
inline constexpr double kDerivativeZero = 1e-12;

/// sup |phi| over the interval by grid sampling and refinement. Endpoints at
/// which phi throws or is non-finite are replaced by points 1e-9 * length inside.
SupEstimate sampled_sup(const std::function<double(double)>& phi, const Interval& interval,
                        std::size_t grid = kDefaultSupGrid);

/// sup |f'/g'|. Throws PreconditionError if g' vanishes or changes sign at a sample.
SupEstimate sup_ratio(const FunctionSpec& f, const FunctionSpec& g, const Interval& interval,
                      std::size_t grid = kDefaultSupGrid);

/// sup |f'|, the comparison function g(t) = t.
SupEstimate sup_abs_derivative(const FunctionSpec& f, const Interval& interval, std::size_t grid = kDefaultSupGrid);

/// sup u^{1-p} |f'(u)| on an interval inside (0, inf), p != 0.
SupEstimate power_seminorm(const FunctionSpec& f, const Interval& interval, double p,
                           std::size_t grid = kDefaultSupGrid);

/// sup |u f'(u)| on an interval inside (0, inf).
SupEstimate log_seminorm(const FunctionSpec& f, const Interval& interval, std::size_t grid = kDefaultSupGrid);

/// Smallest (left, right) constants with |f'(t)| <= c |x - t|^{p-1} on (a, x) and (x, b):
/// left = sup_{(a,x)} |f'(t)| (x-t)^{1-p}, right = sup_{(x,b)} |f'(t)| (t-x)^{1-p}. p > 0.
std::pair<SupEstimate, SupEstimate> local_power_seminorms(const FunctionSpec& f, const Interval& interval, double x,
                                                          double p, std::size_t grid = kDefaultSupGrid);

}  // namespace ostrowski
