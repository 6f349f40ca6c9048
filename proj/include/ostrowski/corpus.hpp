#pragma once

// Seeded random test functions whose derivative sups have closed forms.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ostrowski/expr.hpp"
#include "ostrowski/interval.hpp"

namespace ostrowski {

/// mt19937_64 with a bit-exact uniform draw, so corpora are identical across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 step, used to derive independent per-case seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

enum class CorpusFamily { Polynomial, Exponential, Sine, Logarithm };

std::string to_string(CorpusFamily family);

struct CorpusFunction {
    CorpusFamily family;
    /// Polynomial: c0..c4; Exponential: a, b; Sine: a, b, c; Logarithm: a, b.
    std::vector<double> params;
    std::string text;

    FunctionSpec spec() const { return FunctionSpec::parse(text); }
    /// f'(t) from the parameters.
    double derivative(double t) const;
    /// Closed-form sup |f'| over [lo, hi].
    double sup_abs_derivative(double lo, double hi) const;
    /// Whether f is defined on the interval (Logarithm needs lo > 0).
    bool defined_on(const Interval& iv) const;
};

CorpusFunction make_polynomial(std::vector<double> coeffs);
CorpusFunction make_exponential(double a, double b);
CorpusFunction make_sine(double a, double b, double c);
CorpusFunction make_logarithm(double a, double b);

/// Families drawn uniformly; polynomial degree 1..4, coefficients in [-2, 2].
CorpusFunction random_function(Rng& rng);
/// Endpoints in [lo, hi] with length at least min_length.
Interval random_interval(Rng& rng, double lo = 0.1, double hi = 5.0, double min_length = 0.05);

std::vector<CorpusFunction> make_corpus(std::uint64_t seed, std::size_t n);

}  // namespace ostrowski
