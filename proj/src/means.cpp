#include "ostrowski/means.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ostrowski/error.hpp"

namespace ostrowski {

namespace {

void require_positive(double x, double y, const char* mean) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw PreconditionError(std::string(mean) + " requires positive arguments");
    }
}

void require_finite(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw PreconditionError("mean arguments must be finite");
    }
}

std::pair<double, double> ordered(double x, double y) { return x <= y ? std::pair{x, y} : std::pair{y, x}; }

double midpoint(double lo, double hi) { return 0.5 * lo + 0.5 * hi; }

// sin(h)/h and sinh(h)/h
double sinc(double h) {
    if (std::fabs(h) < 1e-4) {
        const double h2 = h * h;
        return 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
    }
    return std::sin(h) / h;
}

double sinhc(double h) {
    if (std::fabs(h) < 1e-4) {
        const double h2 = h * h;
        return 1.0 + h2 / 6.0 + h2 * h2 / 120.0;
    }
    return std::sinh(h) / h;
}

// ln(hi/lo) for 0 < lo <= hi without cancellation when hi ~ lo.
double log_ratio(double lo, double hi) {
    const double r = (hi - lo) / lo;
    return std::isfinite(r) ? std::log1p(r) : std::log(hi) - std::log(lo);
}

// ln(expm1(z)/z), finite for every real z.
double log_expm1_over(double z) {
    if (std::fabs(z) < 1e-3) {
        const double z2 = z * z;
        return z / 2.0 + z2 / 24.0 - z2 * z2 / 2880.0;
    }
    if (z > 30.0) return z + std::log1p(-std::exp(-z)) - std::log(z);
    if (z < -30.0) return std::log1p(-std::exp(z)) - std::log(-z);
    return std::log(std::expm1(z) / z);
}

// ln of the average of t^p over [lo, hi], p != -1.
double log_mean_power(double p, double lo, double hi) {
    if (p == 0.0) return 0.0;
    const double d = hi - lo;
    if (d <= diagonal_switch(lo, hi)) {
        const double m = midpoint(lo, hi);
        const double u = 0.5 * d / m;
        const double u2 = u * u;
        const double series = p * (p - 1.0) / 6.0 * u2 + p * (p - 1.0) * (p - 2.0) * (p - 3.0) / 120.0 * u2 * u2;
        return p * std::log(m) + std::log1p(series);
    }
    const double s = log_ratio(lo, hi);
    if (std::fabs(p) < 0.5) {
        // avg t^p = lo^p [1 + expm1(p s)/(1 - e^{-s})] / (1 + p), every term O(1) as p -> 0
        return p * std::log(lo) + std::log1p(std::expm1(p * s) / -std::expm1(-s)) - std::log1p(p);
    }
    // avg t^p = lo^p [expm1(q s)/(q s)] / [expm1(s)/s] with q = p + 1, stable as q -> 0
    const double q = p + 1.0;
    return p * std::log(lo) + log_expm1_over(q * s) - log_expm1_over(s);
}

}  // namespace

MeanKind MeanKind::p_logarithmic(double p) {
    if (!std::isfinite(p) || p == 0.0 || p == -1.0) {
        throw PreconditionError("p-logarithmic mean requires finite p not in {-1, 0}");
    }
    return MeanKind(MeanTag::PLogarithmic, p);
}

MeanKind MeanKind::from_name(std::string_view name, double p) {
    if (name == "A") return arithmetic();
    if (name == "L") return logarithmic();
    if (name == "Lp") return p_logarithmic(p);
    if (name == "I") return identric();
    if (name == "E") return exponential();
    if (name == "C") return cos_mean();
    if (name == "S") return sin_mean();
    if (name == "G") return geometric();
    throw PreconditionError("unknown mean kind '" + std::string(name) + "' (expected A, L, Lp, I, E, C, S, G)");
}

std::string MeanKind::name() const {
    switch (tag_) {
        case MeanTag::Arithmetic: return "A";
        case MeanTag::Logarithmic: return "L";
        case MeanTag::PLogarithmic: return "Lp";
        case MeanTag::Identric: return "I";
        case MeanTag::Exponential: return "E";
        case MeanTag::CosMean: return "C";
        case MeanTag::SinMean: return "S";
        case MeanTag::Geometric: return "G";
    }
    return "?";
}

double diagonal_switch(double x, double y) { return 1e-7 * (1.0 + std::max(std::fabs(x), std::fabs(y))); }

namespace means {

double arithmetic(double x, double y) {
    require_finite(x, y);
    const auto [lo, hi] = ordered(x, y);
    return midpoint(lo, hi);
}

double logarithmic(double x, double y) {
    require_finite(x, y);
    require_positive(x, y, "logarithmic mean");
    const auto [lo, hi] = ordered(x, y);
    const double d = hi - lo;
    if (d <= diagonal_switch(lo, hi)) {
        const double u = d / (hi + lo);
        return midpoint(lo, hi) * (1.0 - u * u / 3.0);
    }
    return d / log_ratio(lo, hi);
}

double inverse_logarithmic(double x, double y) { return 1.0 / logarithmic(x, y); }

double log_identric(double x, double y) {
    require_finite(x, y);
    require_positive(x, y, "identric mean");
    const auto [lo, hi] = ordered(x, y);
    const double d = hi - lo;
    if (d <= diagonal_switch(lo, hi)) {
        const double m = midpoint(lo, hi);
        const double u = 0.5 * d / m;
        return std::log(m) - u * u / 6.0;
    }
    // (hi ln hi - lo ln lo)/(hi - lo) - 1 rewritten so neither hi^hi nor the difference is formed
    return std::log(hi) + lo * log_ratio(lo, hi) / d - 1.0;
}

double identric(double x, double y) { return std::exp(log_identric(x, y)); }

double exponential(double x, double y) {
    require_finite(x, y);
    const auto [lo, hi] = ordered(x, y);
    const double h = 0.5 * (hi - lo);
    const double m = midpoint(lo, hi);
    if (hi - lo <= diagonal_switch(lo, hi)) {
        return std::exp(m) * (1.0 + h * h / 6.0);
    }
    return std::exp(m) * sinhc(h);
}

double cos_mean(double x, double y) {
    require_finite(x, y);
    const auto [lo, hi] = ordered(x, y);
    const double h = 0.5 * (hi - lo);
    const double m = midpoint(lo, hi);
    if (hi - lo <= diagonal_switch(lo, hi)) {
        return -std::sin(m) * (1.0 - h * h / 6.0);
    }
    return -std::sin(m) * sinc(h);
}

double sin_mean(double x, double y) {
    require_finite(x, y);
    const auto [lo, hi] = ordered(x, y);
    const double h = 0.5 * (hi - lo);
    const double m = midpoint(lo, hi);
    if (hi - lo <= diagonal_switch(lo, hi)) {
        return std::cos(m) * (1.0 - h * h / 6.0);
    }
    return std::cos(m) * sinc(h);
}

double geometric(double x, double y) {
    require_finite(x, y);
    require_positive(x, y, "geometric mean");
    const auto [lo, hi] = ordered(x, y);
    if (lo == hi) return lo;
    const double prod = lo * hi;
    if (std::isfinite(prod) && prod > 0.0) return std::sqrt(prod);
    return std::sqrt(lo) * std::sqrt(hi);
}

double p_logarithmic_pow(double p, double x, double y) {
    require_finite(x, y);
    require_positive(x, y, "p-logarithmic mean");
    if (!std::isfinite(p) || p == -1.0) {
        throw PreconditionError("p-logarithmic power requires finite p != -1");
    }
    const auto [lo, hi] = ordered(x, y);
    return std::exp(log_mean_power(p, lo, hi));
}

double p_logarithmic(double p, double x, double y) {
    require_finite(x, y);
    require_positive(x, y, "p-logarithmic mean");
    if (!std::isfinite(p) || p == 0.0 || p == -1.0) {
        throw PreconditionError("p-logarithmic mean requires finite p not in {-1, 0}");
    }
    const auto [lo, hi] = ordered(x, y);
    if (hi - lo <= diagonal_switch(lo, hi)) {
        const double m = midpoint(lo, hi);
        return m * std::exp((log_mean_power(p, lo, hi) - p * std::log(m)) / p);
    }
    return std::exp(log_mean_power(p, lo, hi) / p);
}

}  // namespace means

double evaluate_mean(const MeanKind& kind, double x, double y) {
    switch (kind.tag()) {
        case MeanTag::Arithmetic: return means::arithmetic(x, y);
        case MeanTag::Logarithmic: return means::logarithmic(x, y);
        case MeanTag::PLogarithmic: return means::p_logarithmic(kind.p(), x, y);
        case MeanTag::Identric: return means::identric(x, y);
        case MeanTag::Exponential: return means::exponential(x, y);
        case MeanTag::CosMean: return means::cos_mean(x, y);
        case MeanTag::SinMean: return means::sin_mean(x, y);
        case MeanTag::Geometric: return means::geometric(x, y);
    }
    throw PreconditionError("unknown mean kind");
}

double mean_limit_check(double p, double x, double y) {
    if (p == 0.0) return means::identric(x, y);
    if (p == -1.0) return means::logarithmic(x, y);
    return means::p_logarithmic(p, x, y);
}

}  // namespace ostrowski
