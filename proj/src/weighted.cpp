#include "ostrowski/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ostrowski/error.hpp"
#include "ostrowski/quadrature.hpp"

namespace ostrowski {

namespace {

constexpr int kWeightSamples = 4096;
constexpr int kCumulativeCells = 64;
constexpr double kNegativeTolerance = 1e-12;

void require_norm(double m, const char* what) {
    if (!std::isfinite(m) || m < 0.0) {
        throw PreconditionError(std::string(what) + ": seminorm constants must be finite and non-negative");
    }
}

}  // namespace

WeightSpec::WeightSpec(FunctionSpec w, const Interval& interval, double rel_tol)
    : w_(std::move(w)), interval_(interval), rel_tol_(rel_tol) {
    for (int i = 0; i <= kWeightSamples; ++i) {
        const double t = interval_.a + interval_.length() * i / kWeightSamples;
        const double v = w_.eval(t);
        if (v < -kNegativeTolerance) {
            std::ostringstream os;
            os.precision(17);
            os << "weight is negative (" << v << ") at t=" << t;
            throw PreconditionError(os.str());
        }
    }

    kinks_ = kink_points(w_, interval_.a, interval_.b);
    nodes_.resize(kCumulativeCells + 1);
    cumulative_.assign(kCumulativeCells + 1, 0.0);
    const double h = interval_.length() / kCumulativeCells;
    for (int k = 0; k <= kCumulativeCells; ++k) {
        nodes_[k] = k == kCumulativeCells ? interval_.b : interval_.a + h * k;
    }
    QuadOptions opts;
    opts.rel_tol = rel_tol_;
    for (int k = 0; k < kCumulativeCells; ++k) {
        const double piece = integrate([this](double t) { return weight(t); }, nodes_[k], nodes_[k + 1], opts, kinks_).value;
        cumulative_[k + 1] = cumulative_[k] + piece;
    }
    if (!(total_mass() > 0.0)) {
        throw PreconditionError("weight must have positive total mass");
    }
}

double WeightSpec::weight(double t) const { return std::max(w_.eval(t), 0.0); }

double WeightSpec::cumulative(double x) const {
    if (x <= interval_.a) return 0.0;
    if (x >= interval_.b) return total_mass();
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    const auto k = static_cast<std::size_t>(std::distance(nodes_.begin(), it) - 1);
    if (nodes_[k] == x) return cumulative_[k];
    QuadOptions opts;
    opts.rel_tol = rel_tol_;
    return cumulative_[k] + integrate([this](double t) { return weight(t); }, nodes_[k], x, opts, kinks_).value;
}

double WeightSpec::integral_with(const FunctionSpec& g, double lo, double hi) const {
    QuadOptions opts;
    opts.rel_tol = rel_tol_;
    const std::vector<double> breaks = [&] {
        std::vector<double> pts = kink_points(g, lo, hi);
        pts.insert(pts.end(), kinks_.begin(), kinks_.end());
        return pts;
    }();
    return integrate([&](double t) { return weight(t) * g.eval(t); }, lo, hi, opts, breaks).value;
}

double weighted_lhs(const FunctionSpec& f, const WeightSpec& weight, double x) {
    const Interval& iv = weight.interval();
    iv.require_contains(x, "weighted_lhs");
    const double average = weight.integral_with(f, iv.a, iv.b) / weight.total_mass();
    return std::fabs(f.eval(x) - average);
}

double weighted_bound(const FunctionSpec& g, const WeightSpec& weight, double x, double norm) {
    require_norm(norm, "weighted_bound");
    const Interval& iv = weight.interval();
    iv.require_contains(x, "weighted_bound");
    const double mass = weight.total_mass();
    const double below = weight.cumulative(x);
    const double gx = g.eval(x);
    const double right = weight.integral_with(g, x, iv.b);
    const double left = weight.integral_with(g, iv.a, x);
    const double core = gx * (below - (mass - below)) / mass + (right - left) / mass;
    return std::fabs(core) * norm;
}

double find_weight_median(const WeightSpec& weight, double tol) {
    if (!(tol >= 0.0)) throw PreconditionError("median tolerance must be non-negative");
    const Interval& iv = weight.interval();
    const double target = 0.5 * weight.total_mass() - tol * weight.total_mass();
    double lo = iv.a;
    double hi = iv.b;
    if (weight.cumulative(lo) >= target) return lo;
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (weight.cumulative(mid) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

double weighted_median_bound(const FunctionSpec& g, const WeightSpec& weight, double norm, double tol) {
    require_norm(norm, "weighted_median_bound");
    const Interval& iv = weight.interval();
    const double x0 = find_weight_median(weight, tol);
    const double right = weight.integral_with(g, x0, iv.b);
    const double left = weight.integral_with(g, iv.a, x0);
    return std::fabs(right - left) / weight.total_mass() * norm;
}

double weighted_split_bound(const FunctionSpec& g, const WeightSpec& weight, double x, double norm_left,
                            double norm_right) {
    require_norm(norm_left, "weighted_split_bound");
    require_norm(norm_right, "weighted_split_bound");
    const Interval& iv = weight.interval();
    iv.require_contains(x, "weighted_split_bound");
    const double mass = weight.total_mass();
    const double below = weight.cumulative(x);
    const double gx = g.eval(x);
    const double left = std::fabs(gx * below / mass - weight.integral_with(g, iv.a, x) / mass);
    const double right = std::fabs(gx * (mass - below) / mass - weight.integral_with(g, x, iv.b) / mass);
    return left * norm_left + right * norm_right;
}

}  // namespace ostrowski
