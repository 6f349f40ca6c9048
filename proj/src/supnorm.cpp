#include "ostrowski/supnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "ostrowski/error.hpp"

namespace ostrowski {

namespace {

constexpr double kEndpointNudge = 1e-9;
constexpr std::size_t kRefinedMaxima = 16;
constexpr double kInvPhi = 0.6180339887498948482;

std::optional<double> try_eval(const std::function<double(double)>& phi, double t) {
    try {
        const double v = std::fabs(phi(t));
        if (std::isfinite(v)) return v;
    } catch (const Error&) {
    }
    return std::nullopt;
}

struct Best {
    double value;
    double argmax;
};

Best golden_max(const std::function<double(double)>& phi, double lo, double hi, double tol) {
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = std::fabs(phi(x1));
    double f2 = std::fabs(phi(x2));
    Best best = f1 >= f2 ? Best{f1, x1} : Best{f2, x2};
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            if (!(x2 > x1 && x2 < hi)) break;
            f2 = std::fabs(phi(x2));
            if (f2 > best.value) best = {f2, x2};
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            if (!(x1 > lo && x1 < x2)) break;
            f1 = std::fabs(phi(x1));
            if (f1 > best.value) best = {f1, x1};
        }
    }
    return best;
}

std::string at(double t) {
    std::ostringstream os;
    os.precision(17);
    os << t;
    return os.str();
}

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::Analytic ? "analytic" : "sampled"; }

SupEstimate SupEstimate::analytic(double value, const Interval& interval) {
    return analytic(value, interval, interval.midpoint());
}

SupEstimate SupEstimate::analytic(double value, const Interval& interval, double argmax) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw PreconditionError("seminorm value must be finite and non-negative");
    }
    if (!interval.contains(argmax)) throw PreconditionError("seminorm argmax must lie in the interval");
    return {value, argmax, Provenance::Analytic, interval};
}

SupEstimate sampled_sup(const std::function<double(double)>& phi, const Interval& interval, std::size_t grid) {
    if (grid < kMinSupGrid) throw PreconditionError("sup grid must have at least 64 cells");
    const double a = interval.a;
    const double len = interval.length();

    std::vector<double> ts(grid + 1);
    std::vector<double> vs(grid + 1);
    for (std::size_t i = 0; i <= grid; ++i) {
        ts[i] = i == grid ? interval.b : a + len * static_cast<double>(i) / static_cast<double>(grid);
    }
    for (std::size_t i : {std::size_t{0}, grid}) {
        std::optional<double> v = try_eval(phi, ts[i]);
        if (!v) {
            ts[i] = i == 0 ? a + kEndpointNudge * len : interval.b - kEndpointNudge * len;
            v = std::fabs(phi(ts[i]));
            if (!std::isfinite(*v)) {
                throw PreconditionError("seminorm integrand is not finite near t=" + at(ts[i]));
            }
        }
        vs[i] = *v;
    }
    for (std::size_t i = 1; i < grid; ++i) {
        vs[i] = std::fabs(phi(ts[i]));
        if (!std::isfinite(vs[i])) throw PreconditionError("seminorm integrand is not finite at t=" + at(ts[i]));
    }

    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i <= grid; ++i) {
        const bool ge_left = i == 0 || vs[i] >= vs[i - 1];
        const bool ge_right = i == grid || vs[i] >= vs[i + 1];
        if (ge_left && ge_right) peaks.push_back(i);
    }
    std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t x, std::size_t y) { return vs[x] > vs[y]; });
    if (peaks.size() > kRefinedMaxima) peaks.resize(kRefinedMaxima);

    Best best{vs[peaks.front()], ts[peaks.front()]};
    const double tol = 1e-14 * std::max(len, std::fabs(a) + std::fabs(interval.b)) + 1e-300;
    for (std::size_t i : peaks) {
        const double lo = i == 0 ? ts[0] : ts[i - 1];
        const double hi = i == grid ? ts[grid] : ts[i + 1];
        const Best refined = golden_max(phi, lo, hi, tol);
        if (refined.value > best.value) best = refined;
    }
    return {best.value, best.argmax, Provenance::Sampled, interval};
}

SupEstimate sup_ratio(const FunctionSpec& f, const FunctionSpec& g, const Interval& interval, std::size_t grid) {
    int sign = 0;
    auto phi = [&](double t) {
        const double gp = g.derivative(t);
        if (std::fabs(gp) < kDerivativeZero) {
            throw PreconditionError("g' vanishes at t=" + at(t));
        }
        const int s = gp > 0.0 ? 1 : -1;
        if (sign == 0) {
            sign = s;
        } else if (s != sign) {
            throw PreconditionError("g' changes sign at t=" + at(t));
        }
        return f.derivative(t) / gp;
    };
    // Interior samples fix the sign so that a degenerate endpoint cannot set it.
    sign = g.derivative(interval.midpoint()) > 0.0 ? 1 : -1;
    return sampled_sup(phi, interval, grid);
}

SupEstimate sup_abs_derivative(const FunctionSpec& f, const Interval& interval, std::size_t grid) {
    return sampled_sup([&](double t) { return f.derivative(t); }, interval, grid);
}

SupEstimate power_seminorm(const FunctionSpec& f, const Interval& interval, double p, std::size_t grid) {
    interval.require_positive("power seminorm");
    if (!std::isfinite(p) || p == 0.0) throw PreconditionError("power seminorm requires finite p != 0");
    return sampled_sup([&](double u) { return std::pow(u, 1.0 - p) * f.derivative(u); }, interval, grid);
}

SupEstimate log_seminorm(const FunctionSpec& f, const Interval& interval, std::size_t grid) {
    interval.require_positive("log seminorm");
    return sampled_sup([&](double u) { return u * f.derivative(u); }, interval, grid);
}

std::pair<SupEstimate, SupEstimate> local_power_seminorms(const FunctionSpec& f, const Interval& interval, double x,
                                                          double p, std::size_t grid) {
    interval.require_interior(x, "local power seminorms");
    if (!std::isfinite(p) || !(p > 0.0)) throw PreconditionError("local power seminorms require p > 0");
    const double e = 1.0 - p;
    SupEstimate left =
        sampled_sup([&](double t) { return f.derivative(t) * std::pow(x - t, e); }, Interval(interval.a, x), grid);
    SupEstimate right =
        sampled_sup([&](double t) { return f.derivative(t) * std::pow(t - x, e); }, Interval(x, interval.b), grid);
    return {left, right};
}

}  // namespace ostrowski
