#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ostrowski/bounds.hpp"
#include "ostrowski/corpus.hpp"
#include "ostrowski/error.hpp"

using namespace ostrowski;
using std::numbers::e;
using std::numbers::pi;

namespace {

// (1/(b-a)) * int |g(x) - g(t)| dt with a cut at x and any extra cuts.
double abs_diff_oracle(double (*g)(double), double x, double a, double b, std::vector<double> extra = {}) {
    std::vector<double> cuts{a, x};
    cuts.insert(cuts.end(), extra.begin(), extra.end());
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    return oracle::simpson_split([&](double t) { return std::fabs(g(x) - g(t)); }, cuts) / (b - a);
}

}  // namespace

TEST_CASE("classic Ostrowski examples") {
    CHECK(classic_ostrowski(1.0, Interval(0, 1), 0.5) == doctest::Approx(0.25).epsilon(1e-15));
    const double rhs0 = classic_ostrowski(1.0, Interval(0, 1), 0.0);
    CHECK(rhs0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ostrowski_lhs(parse("t"), Interval(0, 1), 0.0) == doctest::Approx(rhs0).epsilon(1e-14));
    CHECK(classic_ostrowski(2.0, Interval(0, 1), 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    // f = t^2, average 1/3 by Simpson
    const double avg = oracle::simpson([](double t) { return t * t; }, 0.0, 1.0);
    CHECK(ostrowski_lhs(parse("t^2"), Interval(0, 1), 0.5) == doctest::Approx(std::fabs(0.25 - avg)).epsilon(1e-12));
    CHECK(ostrowski_lhs(parse("t^2"), Interval(0, 1), 0.5) == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("general bound examples") {
    CHECK(general_bound(parse("t"), Interval(0, 1), 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
    const double rhs = general_bound(parse("exp(t)"), Interval(0, 1), 0.0, 1.0);
    CHECK(rhs == doctest::Approx(e - 2.0).epsilon(1e-13));
    CHECK(ostrowski_lhs(parse("exp(t)"), Interval(0, 1), 0.0) == doctest::Approx(rhs).epsilon(1e-12));

    const double s = general_bound(parse("t"), Interval(0, pi), pi / 2, 1.0);
    CHECK(s == doctest::Approx(0.25 * pi).epsilon(1e-13));
    const double lhs = ostrowski_lhs(parse("sin(t)"), Interval(0, pi), pi / 2);
    const double avg = oracle::simpson([](double t) { return std::sin(t); }, 0.0, pi) / pi;
    CHECK(lhs == doctest::Approx(std::fabs(1.0 - avg)).epsilon(1e-11));
    CHECK(lhs == doctest::Approx(0.36338).epsilon(1e-4));
}

TEST_CASE("midpoint bound examples") {
    CHECK(midpoint_bound(parse("t"), Interval(0, 1), 3.0) == doctest::Approx(0.75).epsilon(1e-13));
    const double m = midpoint_bound(parse("exp(t)"), Interval(0, 1), 1.0);
    CHECK(m == doctest::Approx(abs_diff_oracle([](double t) { return std::exp(t); }, 0.5, 0, 1)).epsilon(1e-11));
    CHECK(m == doctest::Approx(e - 2 * std::sqrt(e) + 1).epsilon(1e-13));
    CHECK(ostrowski_lhs(parse("4"), Interval(0, 1), 0.5) == 0.0);
}

TEST_CASE("power bound examples") {
    CHECK(power_bound(Interval(1, 2), 1.5, 1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    // f' = 1/t^2 gives K_{-1} = 1 and g = 1/t
    const double r = power_bound(Interval(1, 2), 1.5, -1.0, 1.0);
    CHECK(r == doctest::Approx(abs_diff_oracle([](double t) { return 1.0 / t; }, 1.5, 1, 2)).epsilon(1e-11));
    CHECK(r == doctest::Approx(std::log(1.125)).epsilon(1e-13));
    CHECK(power_bound(Interval(1, 2), 1.2, 2.0, 0.0) == 0.0);
    CHECK_THROWS_AS(power_bound(Interval(1, 2), 1.5, 0.0, 1.0), PreconditionError);
    CHECK_THROWS_AS(power_bound(Interval(-1, 2), 1.5, 2.0, 1.0), PreconditionError);
}

TEST_CASE("log bound examples") {
    const double r = log_bound(Interval(1, e), 1.0, 1.0);
    CHECK(r == doctest::Approx(1.0 / (e - 1.0)).epsilon(1e-13));
    CHECK(ostrowski_lhs(parse("ln(t)"), Interval(1, e), 1.0) == doctest::Approx(r).epsilon(1e-12));
    const double r2 = log_bound(Interval(1, 2), 1.5, 2.0);
    CHECK(r2 ==
          doctest::Approx(2.0 * abs_diff_oracle([](double t) { return std::log(t); }, 1.5, 1, 2)).epsilon(1e-11));
    CHECK_THROWS_AS(log_bound(Interval(0, 1), 0.5, 1.0), PreconditionError);
}

TEST_CASE("exponential and trigonometric bounds") {
    CHECK(exp_bound(Interval(0, 1), 0.0, 1.0) == doctest::Approx(e - 2.0).epsilon(1e-14));
    CHECK(exp_midpoint_bound(Interval(0, 1), 1.0) == doctest::Approx(e - 2 * std::sqrt(e) + 1).epsilon(1e-13));

    const double c = cos_bound(Interval(0.2, 1.2), 0.7, 1.0);
    CHECK(c == doctest::Approx(abs_diff_oracle([](double t) { return std::sin(t); }, 0.7, 0.2, 1.2)).epsilon(1e-11));
    CHECK(c == doctest::Approx(2 * std::cos(0.7) - std::cos(0.2) - std::cos(1.2)).epsilon(1e-13));
    CHECK(c == doctest::Approx(0.1871).epsilon(1e-3));
    const double lhs = ostrowski_lhs(parse("sin(t)"), Interval(0.2, 1.2), 0.7);
    CHECK(lhs == doctest::Approx(0.0265).epsilon(1e-2));
    CHECK(lhs <= c);

    const double A = 0.75;
    const double s = sin_midpoint_bound(Interval(0.1, 1.4), 1.0);
    CHECK(s > 0.0);
    CHECK(s == doctest::Approx(abs_diff_oracle([](double t) { return std::cos(t); }, A, 0.1, 1.4)).epsilon(1e-11));
    CHECK(cos_midpoint_bound(Interval(0.1, 1.4), 1.0) ==
          doctest::Approx(abs_diff_oracle([](double t) { return std::sin(t); }, A, 0.1, 1.4)).epsilon(1e-11));
    CHECK(sin_bound(Interval(0.1, 1.4), 0.3, 2.0) ==
          doctest::Approx(2 * abs_diff_oracle([](double t) { return std::cos(t); }, 0.3, 0.1, 1.4)).epsilon(1e-11));
    CHECK_THROWS_AS(cos_bound(Interval(0.2, 2.0), 0.7, 1.0), PreconditionError);
    CHECK_THROWS_AS(sin_bound(Interval(-0.2, 1.0), 0.7, 1.0), PreconditionError);
}

TEST_CASE("split bounds") {
    // g' changes sign only at x
    const FunctionSpec g = parse("abs(t - 0.5)");
    CHECK(split_bound(g, Interval(0, 1), 0.5, 2.0, 4.0) == doctest::Approx(0.125 * 2 + 0.125 * 4).epsilon(1e-12));
    CHECK_THROWS(sup_ratio(parse("t"), g, Interval(0, 1)));

    Rng rng(4);
    const FunctionSpec ge = parse("exp(t)");
    for (int i = 0; i < 20; ++i) {
        const double a = rng.uniform(-2, 1);
        const Interval iv(a, a + rng.uniform(0.2, 3));
        const double x = rng.uniform(iv.a, iv.b);
        const double n = rng.uniform(0, 3);
        CHECK(split_bound(ge, iv, x, n, n) == doctest::Approx(general_bound(ge, iv, x, n)).epsilon(1e-12));
    }
    CHECK(split_midpoint_bound(ge, Interval(0, 2), 1.5, 0.5) ==
          doctest::Approx(split_bound(ge, Interval(0, 2), 1.0, 1.5, 0.5)).epsilon(1e-13));
    CHECK(split_midpoint_bound(parse("t"), Interval(1, 4), 2.0, 3.0) == doctest::Approx(3.0 * 5.0 / 8.0).epsilon(1e-13));
}

TEST_CASE("local power bounds") {
    CHECK(local_power_bound(Interval(0, 1), 0.3, 1.0, 1.0, 1.0) == doctest::Approx(0.29).epsilon(1e-14));
    CHECK(ostrowski_lhs(parse("t"), Interval(0, 1), 0.3) == doctest::Approx(0.2).epsilon(1e-13));
    for (double x : {0.1, 0.5, 0.8}) {
        CHECK(local_power_bound(Interval(0, 2), x, 1.0, 1.5, 1.5) ==
              doctest::Approx(classic_ostrowski(1.5, Interval(0, 2), x)).epsilon(1e-13));
    }
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
        const Interval iv(0.5, 2.0);
        const double A = iv.midpoint();
        const double mid = local_power_midpoint_bound(iv, p, 1.3, 1.3);
        CHECK(mid == doctest::Approx(std::pow(1.5, p) * 2.6 / (std::pow(2.0, p + 1) * p * (p + 1))).epsilon(1e-13));
        CHECK(mid == doctest::Approx(symmetric_local_power_bound(iv, A, p, 1.3)).epsilon(1e-13));
        // M (1/(b-a)) int |x - t|^p / p, with |x - t| = s^2 so the integrand is smooth
        const double half = oracle::simpson([&](double s) { return std::pow(s, 2 * p) * 2 * s / p; }, 0.0,
                                            std::sqrt(A - iv.a));
        const double brute = 1.3 * 2 * half / 1.5;
        CHECK(mid == doctest::Approx(brute).epsilon(1e-9));
    }
    CHECK_THROWS_AS(local_power_bound(Interval(0, 1), 0.3, 0.0, 1.0, 1.0), PreconditionError);
}

TEST_CASE("midpoint comparison-function bounds against split-midpoint quadrature") {
    const Interval iv(1, 2);
    CHECK(midpoint_reciprocal_bound(iv, 1.0, 1.0) ==
          doctest::Approx(split_midpoint_bound(parse("1/t"), iv, 1.0, 1.0)).epsilon(1e-10));
    CHECK(midpoint_reciprocal_bound(iv, 0.7, 2.0) ==
          doctest::Approx(split_midpoint_bound(parse("1/t"), iv, 0.7, 2.0)).epsilon(1e-10));
    const Interval iv4(1, 4);
    const double lg = midpoint_log_bound(iv4, 1.0, 1.0);
    CHECK(lg == doctest::Approx(split_midpoint_bound(parse("ln(t)"), iv4, 1.0, 1.0)).epsilon(1e-10));
    CHECK(midpoint_log_bound_geometric_form(iv4, 1.0, 1.0) == doctest::Approx(lg).epsilon(1e-12));
    CHECK(midpoint_log_bound_geometric_form(iv4, 0.4, 1.7) ==
          doctest::Approx(midpoint_log_bound(iv4, 0.4, 1.7)).epsilon(1e-12));
    for (double p : {-2.0, -0.5, 0.5, 2.0, 3.0}) {
        const std::string g = p < 0 ? "t^(" + std::to_string(p) + ")" : "t^" + std::to_string(p);
        CHECK(midpoint_power_bound(iv4, p, 1.0, 2.0) ==
              doctest::Approx(split_midpoint_bound(parse(g), iv4, 1.0 / std::fabs(p), 2.0 / std::fabs(p)))
                  .epsilon(1e-10));
    }
    CHECK(midpoint_linear_bound(iv4, 1.0, 2.0) == doctest::Approx(3.0 * 3.0 / 8.0).epsilon(1e-14));
    CHECK(midpoint_reciprocal_bound(iv, 0, 0) == 0.0);
    CHECK(midpoint_log_bound(iv, 0, 0) == 0.0);
    CHECK(midpoint_power_bound(iv, 2.0, 0, 0) == 0.0);
    CHECK_THROWS_AS(midpoint_power_bound(iv, -1.0, 1, 1), PreconditionError);
    CHECK_THROWS_AS(midpoint_log_bound(Interval(-1, 1), 1, 1), PreconditionError);
}

TEST_CASE("property: g = t reduces to the classic bound") {
    Rng rng(100);
    const FunctionSpec g = parse("t");
    for (int i = 0; i < 100; ++i) {
        const double a = rng.uniform(-5, 5);
        const Interval iv(a, a + rng.uniform(0.01, 5));
        const double x = rng.uniform(iv.a, iv.b);
        const double m = rng.uniform(0, 4);
        CHECK(oracle::rel_close(general_bound(g, iv, x, m), classic_ostrowski(m, iv, x), 1e-12, 1e-300));
    }
}

TEST_CASE("property: the classic bound is minimised at the midpoint") {
    Rng rng(6);
    for (int k = 0; k < 20; ++k) {
        const double a = rng.uniform(-3, 3);
        const Interval iv(a, a + rng.uniform(0.1, 4));
        const double x = oracle::dense_argmin([&](double s) { return classic_ostrowski(1.0, iv, s); }, iv.a, iv.b, 1000);
        const double h = iv.length() / 1000.0;
        CHECK(std::fabs(x - iv.midpoint()) <= 0.5 * h + 1e-12);
    }
}

TEST_CASE("property: monotone f = g is an equality at the endpoints") {
    for (const char* text : {"exp(t)", "t^3 + t", "ln(t)", "sqrt(t)", "-1/t"}) {
        const FunctionSpec f = parse(text);
        const Interval iv(0.5, 2.5);
        for (double x : {iv.a, iv.b}) {
            const double lhs = ostrowski_lhs(f, iv, x);
            const double rhs = general_bound(f, iv, x, 1.0);
            CHECK(oracle::rel_close(lhs, rhs, 1e-10));
        }
    }
}

TEST_CASE("make_report ratio semantics") {
    const SupEstimate s = SupEstimate::analytic(1.0, Interval(0, 1));
    BoundReport r = make_report("1.1", 0.2, 0.4, s, 0.5, Interval(0, 1));
    CHECK(r.ratio == doctest::Approx(0.5));
    CHECK(r.slack == doctest::Approx(0.2));
    CHECK(r.passes());
    r = make_report("1.1", 0.0, 0.0, s, 0.5, Interval(0, 1));
    CHECK(r.ratio == 0.0);
    CHECK(r.passes());
    r = make_report("1.1", 1e-3, 0.0, s, 0.5, Interval(0, 1));
    CHECK(std::isinf(r.ratio));
    CHECK_FALSE(r.passes());
    r = make_report("1.1", 1.0 + 5e-10, 1.0, s, 0.5, Interval(0, 1));
    CHECK(r.passes());
    CHECK_FALSE(r.passes(Tolerance{0.0, 0.0}));
}

TEST_CASE("envelope checks warn but do not throw") {
    auto env = [](double t) { return std::exp(t); };
    CHECK(check_envelope(parse("exp(t)"), Interval(0, 1), env, 1.0, "exp").empty());
    CHECK_FALSE(check_envelope(parse("exp(t)"), Interval(0, 1), env, 0.5, "exp").empty());
    CHECK_FALSE(check_envelope(parse("2*t"), Interval(0, 1), [](double) { return 1.0; }, 1.0, "const").empty());
}

TEST_CASE("precondition errors") {
    CHECK_THROWS_AS(classic_ostrowski(1.0, Interval(0, 1), 1.5), PreconditionError);
    CHECK_THROWS_AS(classic_ostrowski(-1.0, Interval(0, 1), 0.5), PreconditionError);
    CHECK_THROWS_AS(general_bound(parse("t"), Interval(0, 1), -0.1, 1.0), PreconditionError);
    CHECK_THROWS_AS(Interval(1, 1), PreconditionError);
    CHECK_THROWS_AS(ostrowski_lhs(parse("ln(t)"), Interval(-1, 1), 0.5), DomainError);
}
