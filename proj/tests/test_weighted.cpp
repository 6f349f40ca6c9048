#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ostrowski/bounds.hpp"
#include "ostrowski/corpus.hpp"
#include "ostrowski/error.hpp"
#include "ostrowski/weighted.hpp"

using namespace ostrowski;
using std::numbers::pi;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("WeightSpec invariants") {
    const WeightSpec w(parse("1 + t^2"), Interval(0, 2));
    CHECK(w.total_mass() == doctest::Approx(2.0 + 8.0 / 3.0).epsilon(1e-13));
    CHECK(w.cumulative(0.0) == 0.0);
    CHECK(w.cumulative(2.0) == doctest::Approx(w.total_mass()).epsilon(1e-14));
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double F = w.cumulative(0.01 * i);
        CHECK(F >= prev);
        prev = F;
    }
    CHECK(w.cumulative(1.3) == doctest::Approx(1.3 + std::pow(1.3, 3) / 3).epsilon(1e-13));
}

TEST_CASE("negative, clamped and massless weights") {
    try {
        WeightSpec(parse("t - 0.5"), Interval(0, 1));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& err) {
        CHECK(std::string(err.what()).find("t=") != std::string::npos);
    }
    const WeightSpec w(parse("t - 1e-13"), Interval(0, 1));
    CHECK(w.weight(0.0) == 0.0);
    CHECK_THROWS_AS(WeightSpec(parse("0"), Interval(0, 1)), PreconditionError);
    CHECK_THROWS_AS(WeightSpec(parse("t - t"), Interval(0, 1)), PreconditionError);
}

TEST_CASE("weighted bound examples") {
    const WeightSpec w(parse("t"), Interval(0, 1));
    const FunctionSpec t = parse("t");
    const double rhs = weighted_bound(t, w, kInvSqrt2, 1.0);
    // (1/M) int w |x - t| with M = 1/2
    const double ref =
        2.0 * oracle::simpson_split([](double s) { return s * std::fabs(kInvSqrt2 - s); }, {0.0, kInvSqrt2, 1.0});
    CHECK(rhs == doctest::Approx(ref).epsilon(1e-11));
    CHECK(rhs == doctest::Approx(2.0 / 3.0 * (1.0 - kInvSqrt2)).epsilon(1e-12));
    const double lhs = weighted_lhs(t, w, kInvSqrt2);
    CHECK(lhs == doctest::Approx(std::fabs(kInvSqrt2 - 2.0 / 3.0)).epsilon(1e-12));
    CHECK(lhs == doctest::Approx(0.04044).epsilon(1e-3));
    CHECK(weighted_lhs(parse("2.5"), w, 0.3) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("weight medians") {
    CHECK(find_weight_median(WeightSpec(parse("1"), Interval(-1, 3))) == doctest::Approx(1.0).epsilon(1e-12));
    const WeightSpec wt(parse("t"), Interval(0, 1));
    const double m = find_weight_median(wt);
    CHECK(m == doctest::Approx(oracle::bisect([](double x) { return x * x / 2 - 0.25; }, 0.0, 1.0)).epsilon(1e-12));
    CHECK(m == doctest::Approx(0.7071067811865476).epsilon(1e-10));
    CHECK(find_weight_median(WeightSpec(parse("sin(t)"), Interval(0, pi))) == doctest::Approx(pi / 2).epsilon(1e-12));

    for (const char* text : {"1", "t", "exp(-t)", "1 + t^2", "sin(t)^2"}) {
        const WeightSpec w(parse(text), Interval(0.0, 2.5));
        const double tol = 1e-13;
        const double x0 = find_weight_median(w, tol);
        const double M = w.total_mass();
        CHECK(std::fabs(w.cumulative(x0) - M / 2) <= tol * M + 1e-15);
    }
}

TEST_CASE("plateau weights give the leftmost median") {
    // 2 max(0, 0.2 - t) + 2 max(0, t - 0.8): F = M/2 on all of [0.2, 0.8]
    const FunctionSpec text = parse("(abs(t - 0.2) - (t - 0.2)) + (abs(t - 0.8) + (t - 0.8))");
    const WeightSpec w(text, Interval(0, 1));
    // F(x) = M/2 - (0.2 - x)^2 left of the plateau, so x0 = 0.2 - sqrt(tol M).
    const double x0 = find_weight_median(w, 1e-10);
    CHECK(x0 == doctest::Approx(0.2 - std::sqrt(1e-10 * 0.08)).epsilon(1e-7));
    CHECK(find_weight_median(w, 1e-10) == x0);
    CHECK(find_weight_median(WeightSpec(text, Interval(0, 1)), 1e-10) == x0);
    const double x1 = find_weight_median(w);
    CHECK(x1 == doctest::Approx(0.2 - std::sqrt(1e-13 * 0.08)).epsilon(1e-9));
    CHECK(std::fabs(w.cumulative(x1) - w.total_mass() / 2) <= 1e-13 * w.total_mass() + 1e-15);
    CHECK(find_weight_median(w) == x1);
    // F stays flat across the plateau
    for (double x : {0.2, 0.20005, 0.5, 0.79}) CHECK(w.cumulative(x) == doctest::Approx(0.04).epsilon(1e-13));
}

TEST_CASE("weighted median bound") {
    const WeightSpec one(parse("1"), Interval(0, 1));
    CHECK(weighted_median_bound(parse("t"), one, 3.0) == doctest::Approx(0.75).epsilon(1e-12));
    const WeightSpec wt(parse("t"), Interval(0, 1));
    CHECK(weighted_median_bound(parse("t"), wt, 2.0) == doctest::Approx(4.0 / 3.0 * (1 - kInvSqrt2)).epsilon(1e-10));
    for (const char* g : {"t", "exp(t)", "t^3 + t"}) {
        const FunctionSpec f = parse(g);
        const double x0 = find_weight_median(wt);
        CHECK(weighted_lhs(f, wt, x0) <= weighted_median_bound(f, wt, 1.0) * (1 + 1e-9) + 1e-12);
    }
}

TEST_CASE("property: unit weight reduces to the unweighted bounds") {
    Rng rng(50);
    for (int i = 0; i < 50; ++i) {
        const auto fn = random_function(rng);
        const double a = rng.uniform(0.1, 2.0);
        const Interval iv(a, a + rng.uniform(0.2, 3.0));
        const double x = rng.uniform(iv.a, iv.b);
        const WeightSpec one(parse("1"), iv);
        const FunctionSpec g = parse("exp(t)");
        const double n = rng.uniform(0, 3);
        CHECK(oracle::rel_close(weighted_bound(g, one, x, n), general_bound(g, iv, x, n), 1e-10, 1e-300));
        CHECK(oracle::rel_close(weighted_split_bound(g, one, x, n, 2 * n), split_bound(g, iv, x, n, 2 * n), 1e-10,
                                1e-300));
        const FunctionSpec f = fn.spec();
        CHECK(oracle::rel_close(weighted_lhs(f, one, x), ostrowski_lhs(f, iv, x), 1e-10, 1e-13));
        CHECK(oracle::rel_close(weighted_median_bound(g, one, n), midpoint_bound(g, iv, n), 1e-10, 1e-300));
    }
}

TEST_CASE("property: equal split norms reproduce the weighted bound") {
    Rng rng(9);
    for (const char* wt : {"t", "1 + t^2", "exp(-t)"}) {
        const Interval iv(0.3, 2.0);
        const WeightSpec w(parse(wt), iv);
        const FunctionSpec g = parse("ln(t)");
        for (int i = 0; i < 10; ++i) {
            const double x = rng.uniform(iv.a, iv.b);
            CHECK(oracle::rel_close(weighted_split_bound(g, w, x, 1.7, 1.7), weighted_bound(g, w, x, 1.7), 1e-10));
        }
    }
}

TEST_CASE("property: weighted rhs equals the weighted absolute-difference integral") {
    struct W {
        const char* text;
        double (*fn)(double);
    };
    const W weights[] = {{"1", [](double) { return 1.0; }},
                         {"t", [](double t) { return t; }},
                         {"1 + t^2", [](double t) { return 1 + t * t; }},
                         {"exp(-t)", [](double t) { return std::exp(-t); }}};
    for (const auto& wd : weights) {
        const Interval iv(0.5, 2.5);
        const WeightSpec w(parse(wd.text), iv);
        const double M = oracle::simpson(wd.fn, iv.a, iv.b);
        for (double x : {0.5, 0.9, 1.5, 2.2, 2.5}) {
            const double ref =
                oracle::simpson_split([&](double t) { return wd.fn(t) * std::fabs(std::sqrt(x) - std::sqrt(t)); },
                                      {iv.a, x, iv.b}) /
                M;
            CHECK(oracle::rel_close(weighted_bound(parse("sqrt(t)"), w, x, 1.0), ref, 1e-8));
        }
    }
}

TEST_CASE("property: monotone f = g is an equality at the endpoints") {
    const WeightSpec w(parse("1 + t^2"), Interval(0.5, 2.0));
    for (const char* text : {"exp(t)", "ln(t)", "t^3"}) {
        const FunctionSpec f = parse(text);
        for (double x : {0.5, 2.0}) {
            CHECK(oracle::rel_close(weighted_lhs(f, w, x), weighted_bound(f, w, x, 1.0), 1e-10));
        }
    }
}
