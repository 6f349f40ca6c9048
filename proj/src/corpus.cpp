#include "ostrowski/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "ostrowski/error.hpp"

namespace ostrowski {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, v < 0 ? "(%.17g)" : "%.17g", v);
    return buf;
}

double poly_derivative(const std::vector<double>& c, double t) {
    double acc = 0.0;
    for (std::size_t k = c.size() - 1; k >= 1; --k) acc = acc * t + static_cast<double>(k) * c[k];
    return acc;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string to_string(CorpusFamily family) {
    switch (family) {
        case CorpusFamily::Polynomial: return "polynomial";
        case CorpusFamily::Exponential: return "exponential";
        case CorpusFamily::Sine: return "sine";
        case CorpusFamily::Logarithm: return "logarithm";
    }
    return "?";
}

CorpusFunction make_polynomial(std::vector<double> coeffs) {
    if (coeffs.empty() || coeffs.size() > 5) throw PreconditionError("polynomial degree must be 0..4");
    coeffs.resize(5, 0.0);
    std::string text = num(coeffs[0]);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0.0) continue;
        text += " + " + num(coeffs[k]) + "*t";
        if (k > 1) text += "^" + std::to_string(k);
    }
    return {CorpusFamily::Polynomial, std::move(coeffs), std::move(text)};
}

CorpusFunction make_exponential(double a, double b) {
    return {CorpusFamily::Exponential, {a, b}, num(a) + "*exp(" + num(b) + "*t)"};
}

CorpusFunction make_sine(double a, double b, double c) {
    return {CorpusFamily::Sine, {a, b, c}, num(a) + "*sin(" + num(b) + "*t + " + num(c) + ")"};
}

CorpusFunction make_logarithm(double a, double b) {
    return {CorpusFamily::Logarithm, {a, b}, num(a) + "*ln(t) + " + num(b)};
}

double CorpusFunction::derivative(double t) const {
    const auto& q = params;
    switch (family) {
        case CorpusFamily::Polynomial: return poly_derivative(q, t);
        case CorpusFamily::Exponential: return q[0] * q[1] * std::exp(q[1] * t);
        case CorpusFamily::Sine: return q[0] * q[1] * std::cos(q[1] * t + q[2]);
        case CorpusFamily::Logarithm: return q[0] / t;
    }
    return 0.0;
}

double CorpusFunction::sup_abs_derivative(double lo, double hi) const {
    const auto& q = params;
    double best = std::max(std::fabs(derivative(lo)), std::fabs(derivative(hi)));
    switch (family) {
        case CorpusFamily::Polynomial: {
            // Critical points of f' solve 12 c4 t^2 + 6 c3 t + 2 c2 = 0.
            const double A = 12.0 * q[4];
            const double B = 6.0 * q[3];
            const double C = 2.0 * q[2];
            std::vector<double> roots;
            if (A == 0.0) {
                if (B != 0.0) roots.push_back(-C / B);
            } else {
                const double disc = B * B - 4.0 * A * C;
                if (disc >= 0.0) {
                    const double s = std::sqrt(disc);
                    const double qq = -0.5 * (B + std::copysign(s, B));
                    roots.push_back(qq / A);
                    if (qq != 0.0) roots.push_back(C / qq);
                }
            }
            for (double r : roots) {
                if (r > lo && r < hi) best = std::max(best, std::fabs(derivative(r)));
            }
            return best;
        }
        case CorpusFamily::Exponential:
        case CorpusFamily::Logarithm:
            return best;
        case CorpusFamily::Sine: {
            // |cos| reaches 1 where b t + c is a multiple of pi.
            if (q[1] == 0.0) return 0.0;
            const double u = q[1] * lo + q[2];
            const double v = q[1] * hi + q[2];
            const double plo = std::min(u, v);
            const double phi = std::max(u, v);
            const double k = std::ceil(plo / std::numbers::pi);
            if (k * std::numbers::pi <= phi) best = std::max(best, std::fabs(q[0] * q[1]));
            return best;
        }
    }
    return best;
}

bool CorpusFunction::defined_on(const Interval& iv) const { return family != CorpusFamily::Logarithm || iv.a > 0.0; }

CorpusFunction random_function(Rng& rng) {
    switch (rng.index(4)) {
        case 0: {
            const std::size_t degree = 1 + rng.index(4);
            std::vector<double> c(degree + 1);
            for (auto& v : c) v = rng.uniform(-2.0, 2.0);
            return make_polynomial(std::move(c));
        }
        case 1: {
            const double a = rng.uniform(-2.0, 2.0);
            const double b = rng.uniform(-2.0, 2.0);
            return make_exponential(a, b);
        }
        case 2: {
            const double a = rng.uniform(-2.0, 2.0);
            const double b = rng.uniform(-2.0, 2.0);
            const double c = rng.uniform(-std::numbers::pi, std::numbers::pi);
            return make_sine(a, b, c);
        }
        default: {
            const double a = rng.uniform(-2.0, 2.0);
            const double b = rng.uniform(-2.0, 2.0);
            return make_logarithm(a, b);
        }
    }
}

Interval random_interval(Rng& rng, double lo, double hi, double min_length) {
    if (!(hi - lo > min_length)) throw PreconditionError("random_interval range is shorter than min_length");
    for (;;) {
        double u = rng.uniform(lo, hi);
        double v = rng.uniform(lo, hi);
        if (u > v) std::swap(u, v);
        if (v - u >= min_length) return Interval(u, v);
    }
}

std::vector<CorpusFunction> make_corpus(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    std::vector<CorpusFunction> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_function(rng));
    return out;
}

}  // namespace ostrowski
