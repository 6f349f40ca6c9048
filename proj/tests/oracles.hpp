#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's quadrature or sup machinery.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n = 20000) {
    if (n % 2) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double s = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
    return s * h / 3.0;
}

/// Simpson with breakpoints, for integrands with kinks.
inline double simpson_split(const std::function<double(double)>& f, std::vector<double> cuts, std::size_t n = 20000) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] > cuts[i]) total += simpson(f, cuts[i], cuts[i + 1], n);
    }
    return total;
}

struct ScanMax {
    double value;
    double argmax;
};

/// max |phi| over n + 1 equispaced points.
inline ScanMax dense_max(const std::function<double(double)>& phi, double a, double b, std::size_t n = 1000000) {
    ScanMax best{-1.0, a};
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = i == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
        const double v = std::fabs(phi(t));
        if (v > best.value) best = {v, t};
    }
    return best;
}

/// argmin over n + 1 equispaced points.
inline double dense_argmin(const std::function<double(double)>& phi, double a, double b, std::size_t n = 100000) {
    double best = INFINITY;
    double arg = a;
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = i == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
        const double v = phi(t);
        if (v < best) {
            best = v;
            arg = t;
        }
    }
    return arg;
}

inline double central_difference(const std::function<double(double)>& f, double t, double h = 1e-6) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

/// Root of an increasing function on [lo, hi] by plain bisection.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (lo + hi);
        if (f(m) < 0.0) {
            lo = m;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

inline bool rel_close(double a, double b, double rel, double abs_floor = 0.0) {
    return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b)) + abs_floor;
}

}  // namespace oracle
