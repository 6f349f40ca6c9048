#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "ostrowski/error.hpp"
#include "ostrowski/harness.hpp"

using namespace ostrowski;
using std::numbers::pi;

namespace {

CaseSpec make_case(const std::string& id, const std::string& f, double a, double b, const std::string& x) {
    CaseSpec c;
    c.name = "t-" + id;
    c.bound_id = id;
    c.f = f;
    c.a = a;
    c.b = b;
    c.x = x;
    return c;
}

bool same_bits(double u, double v) { return std::memcmp(&u, &v, sizeof u) == 0; }

}  // namespace

TEST_CASE("check_case examples") {
    CaseSpec c = make_case("1.1", "t", 0, 1, "0");
    c.norm = 1.0;
    auto r = check_case(c);
    REQUIRE(r.size() == 1);
    CHECK(r[0].status == CaseStatus::Pass);
    CHECK(r[0].report->ratio == doctest::Approx(1.0).epsilon(1e-12));

    CaseSpec s = make_case("2.2", "sin(t)", 0, pi, "1.5707963267948966");
    s.g = "t";
    r = check_case(s);
    REQUIRE(r.size() == 1);
    CHECK(r[0].status == CaseStatus::Pass);
    // (1 - 2/pi) / (pi/4)
    CHECK(r[0].report->ratio == doctest::Approx((1 - 2 / pi) / (pi / 4)).epsilon(1e-9));
    CHECK(r[0].report->ratio == doctest::Approx(0.4627).epsilon(1e-3));

    c.norm = 0.5;
    r = check_case(c);
    CHECK(r[0].status == CaseStatus::Fail);
    CHECK(r[0].violation > 0.2);
    CHECK(summarize(r).max_violation == r[0].violation);
}

TEST_CASE("evaluation errors become error status") {
    CaseSpec c = make_case("1.3", "ln(t)", -1, 1, "0.5");
    auto r = check_case(c);
    REQUIRE(r.size() == 1);
    CHECK(r[0].status == CaseStatus::Error);
    CHECK_FALSE(r[0].error.empty());
    CaseSpec u = make_case("9.9", "t", 0, 1, "0.5");
    CHECK(check_case(u)[0].status == CaseStatus::Error);
    const SuiteSummary s = summarize(r);
    CHECK(s.errors == 1);
    CHECK(s.failed == 1);
    CHECK_FALSE(s.all_passed());
}

TEST_CASE("resolve_x") {
    CaseSpec c = make_case("2.2", "t", 1, 3, "sweep:5");
    CHECK(resolve_x(c, 1) == std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0});
    c.x = "a";
    CHECK(resolve_x(c, 1) == std::vector<double>{1.0});
    c.x = "b";
    CHECK(resolve_x(c, 1) == std::vector<double>{3.0});
    c.x = "midpoint";
    CHECK(resolve_x(c, 1) == std::vector<double>{2.0});
    c.x = "random:4";
    const auto xs = resolve_x(c, 9);
    CHECK(xs.size() == 4);
    CHECK(resolve_x(c, 9) == xs);
    CHECK(resolve_x(c, 10) != xs);
    for (double x : xs) CHECK((x >= 1.0 && x <= 3.0));
    c.x = "3.5";
    CHECK_THROWS_AS(resolve_x(c, 1), PreconditionError);
    c.x = "median";
    CHECK_THROWS_AS(resolve_x(c, 1), PreconditionError);
    // fixed-node bounds ignore x
    CaseSpec m = make_case("2.5", "t", 1, 3, "a");
    CHECK(resolve_x(m, 1) == std::vector<double>{2.0});
    CaseSpec w = make_case("4.6", "t", 0, 1, "a");
    w.w = "t";
    CHECK(resolve_x(w, 1)[0] == doctest::Approx(0.7071067811865476).epsilon(1e-10));
}

TEST_CASE("summary invariants") {
    const auto cases = inequality_cases(3, 4, 3);
    const SuiteResult suite = run_suite(cases);
    const SuiteSummary& s = suite.summary;
    CHECK(s.total == suite.results.size());
    CHECK(s.passed + s.failed == s.total);
    CHECK(s.errors <= s.failed);
    for (const auto& r : suite.results) {
        if (r.report) CHECK(r.report->ratio <= s.worst_ratio);
    }
}

TEST_CASE("property: suites are deterministic and independent of the thread count") {
    const auto cases = inequality_cases(42, 5, 4);
    RunConfig one;
    RunConfig four;
    four.jobs = 4;
    const SuiteResult a = run_suite(cases, one);
    const SuiteResult b = run_suite(cases, one);
    const SuiteResult c = run_suite(cases, four);
    REQUIRE(a.results.size() == c.results.size());
    for (const SuiteResult* other : {&b, &c}) {
        CHECK(a.summary.total == other->summary.total);
        CHECK(a.summary.passed == other->summary.passed);
        CHECK(same_bits(a.summary.worst_ratio, other->summary.worst_ratio));
        CHECK(a.summary.worst_case == other->summary.worst_case);
        CHECK(same_bits(a.summary.max_violation, other->summary.max_violation));
        for (std::size_t i = 0; i < a.results.size(); ++i) {
            CHECK(a.results[i].name == other->results[i].name);
            if (a.results[i].report && other->results[i].report) {
                CHECK(same_bits(a.results[i].report->lhs, other->results[i].report->lhs));
                CHECK(same_bits(a.results[i].report->rhs, other->results[i].report->rhs));
            }
        }
    }
}

TEST_CASE("sharpness scans") {
    const auto r11 = sharpness_scan("1.1", builtin_family("1.1"), 200);
    CHECK(std::fabs(r11.max_ratio - 1.0) <= 1e-12);
    CHECK(r11.suite.summary.all_passed());
    const auto r22 = sharpness_scan("2.2", builtin_family("2.2"), 100);
    CHECK(r22.max_ratio == doctest::Approx(1.0).epsilon(1e-9));
    const auto r14 = sharpness_scan("1.4", builtin_family("1.4"), 40);
    CHECK(r14.max_ratio > 0.0);
    CHECK(r14.max_ratio <= 1.0 + 1e-9);
    CHECK_FALSE(r14.argmax_case.empty());
    CHECK_THROWS_AS(builtin_family("3.7"), PreconditionError);
    const auto ids = builtin_family_ids();
    CHECK(std::find(ids.begin(), ids.end(), "4.2") != ids.end());
}

TEST_CASE("consistency suite: closed forms match the quadrature oracle") {
    const ConsistencyResult r = consistency_suite(1e-8);
    CHECK(r.summary.total == r.items.size());
    CHECK(r.summary.all_passed());
    CHECK(r.max_rel_error <= 1e-8);
    std::set<std::string> ids;
    for (const auto& it : r.items) ids.insert(it.bound_id);
    for (const auto& id : bound_ids()) CHECK(ids.count(id) == 1);
    CHECK(consistency_exponents() == std::vector<double>{-2, -1, -0.5, 0.5, 1, 2, 3});
}

TEST_CASE("best_node examples") {
    const Interval iv(0, 1);
    const NodeResult c = best_node([&](double x) { return classic_ostrowski(1.0, iv, x); }, iv);
    CHECK(c.x == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(c.rhs == doctest::Approx(0.25).epsilon(1e-14));

    CaseSpec w = make_case("4.2", "t", 0, 1, "a");
    w.w = "t";
    w.g = "t";
    w.norm = 1.0;
    const NodeResult nw = best_node(w);
    const double scan = oracle::dense_argmin(
        [&](double x) {
            return oracle::simpson_split([x](double t) { return t * std::fabs(x - t); }, {0.0, x, 1.0}, 200);
        },
        0.0, 1.0, 100000);
    CHECK(std::fabs(nw.x - scan) <= 1e-5);
    CHECK(std::fabs(nw.x - 1 / std::sqrt(2.0)) <= 1e-6);

    // For increasing g the rhs has derivative g'(x)(2x - a - b): the minimiser is the midpoint.
    CaseSpec e = make_case("2.7", "exp(t)", 0, 1, "a");
    e.norm = 1.0;
    const NodeResult ne = best_node(e);
    const double escan = oracle::dense_argmin([&](double x) { return exp_bound(iv, x, 1.0); }, 0.0, 1.0);
    CHECK(std::fabs(ne.x - escan) <= 1e-5);
    CHECK(std::fabs(ne.x - 0.5) <= 1e-6);
}

TEST_CASE("property: best_node argmin is stable under grid halving") {
    Rng rng(12);
    for (int k = 0; k < 20; ++k) {
        const Interval iv = random_interval(rng);
        const double m = rng.uniform(0.5, 2);
        auto fn = [&](double x) { return std::fabs(std::sin(x)) + m * (x - iv.a) * (x - iv.b) + 3 * x; };
        const NodeResult coarse = best_node(fn, iv, 250);
        const NodeResult fine = best_node(fn, iv, 500);
        CHECK(std::fabs(coarse.x - fine.x) <= iv.length() / 250 + 1e-12);
    }
}

TEST_CASE("property: falsification control flips equality cases") {
    const auto cases = equality_cases();
    REQUIRE_FALSE(cases.empty());
    for (const auto& c : cases) {
        for (const auto& r : check_case(c)) {
            REQUIRE(r.report);
            CHECK(r.status == CaseStatus::Pass);
            CHECK(r.report->ratio == doctest::Approx(1.0).epsilon(1e-9));
            const BoundReport& rep = *r.report;
            const BoundReport bad = make_report(rep.bound_id, rep.lhs, 0.9 * rep.rhs, rep.seminorm, rep.x,
                                                Interval(rep.a, rep.b));
            CHECK_FALSE(bad.passes(c.tol));
        }
    }
}

TEST_CASE("property: corpus sups agree with a dense scan") {
    Rng rng(5);
    for (const auto& fn : make_corpus(77, 60)) {
        const Interval iv = random_interval(rng);
        if (!fn.defined_on(iv)) continue;
        const double exact = fn.sup_abs_derivative(iv.a, iv.b);
        const auto scan = oracle::dense_max([&](double t) { return fn.derivative(t); }, iv.a, iv.b, 200000);
        CHECK(exact >= scan.value * (1 - 1e-14));
        CHECK(exact == doctest::Approx(scan.value).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("property: random-corpus inequalities hold") {
    const auto cases = inequality_cases(42, 10, 5);
    const SuiteResult suite = run_suite(cases);
    CHECK(suite.summary.errors == 0);
    CHECK(suite.summary.failed == 0);
    CHECK(suite.summary.max_violation == 0.0);
    CHECK(suite.summary.worst_ratio <= 1.0 + 1e-9);
}
