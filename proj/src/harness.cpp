#include "ostrowski/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <thread>

#include "ostrowski/bounds.hpp"
#include "ostrowski/error.hpp"
#include "ostrowski/quadrature.hpp"
#include "ostrowski/weighted.hpp"

namespace ostrowski {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string point_name(const CaseSpec& c, std::size_t case_index, std::size_t point, std::size_t points) {
    std::string base = c.name.empty() ? "case" + std::to_string(case_index) : c.name;
    if (points > 1) base += "#" + std::to_string(point);
    return base;
}

bool worse(double ratio, std::size_t index, double best_ratio, std::size_t best_index) {
    if (std::isnan(ratio)) return false;
    if (ratio != best_ratio) return ratio > best_ratio;
    return index < best_index;
}

}  // namespace

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Fail: return "fail";
        case CaseStatus::Error: return "error";
    }
    return "?";
}

double violation(const BoundReport& r, const Tolerance& tol) {
    if (!std::isfinite(r.lhs) || std::isnan(r.rhs)) return std::numeric_limits<double>::infinity();
    return std::max(0.0, r.lhs - r.rhs * (1.0 + tol.rel) - tol.abs);
}

std::vector<CaseResult> check_case(const CaseSpec& c, const RunConfig& config, std::size_t case_index) {
    std::vector<CaseResult> out;
    const EvalSettings settings = config.settings();
    std::vector<double> xs;
    try {
        if (!is_known_bound(c.bound_id)) throw PreconditionError("unknown bound id '" + c.bound_id + "'");
        xs = resolve_x(c, mix_seed(config.seed, case_index), settings);
    } catch (const std::exception& e) {
        CaseResult r;
        r.case_index = case_index;
        r.name = point_name(c, case_index, 0, 1);
        r.bound_id = c.bound_id;
        r.status = CaseStatus::Error;
        r.error = e.what();
        out.push_back(std::move(r));
        return out;
    }
    for (std::size_t k = 0; k < xs.size(); ++k) {
        CaseResult r;
        r.case_index = case_index;
        r.point_index = k;
        r.name = point_name(c, case_index, k, xs.size());
        r.bound_id = c.bound_id;
        try {
            BoundReport rep = evaluate_bound(c, xs[k], settings);
            rep.inputs["case"] = r.name;
            r.violation = violation(rep, c.tol);
            r.status = rep.passes(c.tol) ? CaseStatus::Pass : CaseStatus::Fail;
            r.report = std::move(rep);
        } catch (const std::exception& e) {
            r.status = CaseStatus::Error;
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

SuiteSummary summarize(const std::vector<CaseResult>& results) {
    SuiteSummary s;
    std::size_t worst_index = std::numeric_limits<std::size_t>::max();
    std::size_t violation_index = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const CaseResult& r = results[i];
        ++s.total;
        if (r.status == CaseStatus::Pass) {
            ++s.passed;
        } else {
            ++s.failed;
            if (r.status == CaseStatus::Error) ++s.errors;
        }
        if (r.report && worse(r.report->ratio, i, s.worst_ratio, worst_index)) {
            s.worst_ratio = r.report->ratio;
            s.worst_case = r.name;
            worst_index = i;
        }
        if (r.status == CaseStatus::Fail && worse(r.violation, i, s.max_violation, violation_index)) {
            s.max_violation = r.violation;
            s.max_violation_case = r.name;
            violation_index = i;
        }
    }
    return s;
}

SuiteResult run_suite(const std::vector<CaseSpec>& cases, const RunConfig& config) {
    std::vector<std::vector<CaseResult>> per_case(cases.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(cases.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) per_case[i] = check_case(cases[i], config, i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < cases.size(); i = next++) {
                    per_case[i] = check_case(cases[i], config, i);
                }
            });
        }
        for (auto& w : workers) w.join();
    }
    SuiteResult out;
    for (auto& v : per_case) {
        for (auto& r : v) out.results.push_back(std::move(r));
    }
    out.summary = summarize(out.results);
    return out;
}

std::vector<std::string> builtin_family_ids() { return {"1.1", "1.4", "2.2", "4.2"}; }

CaseFamily builtin_family(const std::string& bound_id) {
    if (bound_id == "1.1") {
        return [](std::size_t i, Rng& rng) {
            const Interval iv = random_interval(rng, -5.0, 5.0, 0.05);
            CaseSpec c;
            c.name = "f=t#" + std::to_string(i);
            c.bound_id = "1.1";
            c.f = "t";
            c.a = iv.a;
            c.b = iv.b;
            c.x = i % 2 == 0 ? "a" : "b";
            c.norm = 1.0;
            return c;
        };
    }
    if (bound_id == "2.2" || bound_id == "4.2") {
        return [bound_id](std::size_t i, Rng& rng) {
            static const char* const kMonotone[] = {"exp(t)", "ln(t)", "t^3 + t", "sqrt(t)", "1/t"};
            const Interval iv = random_interval(rng, 0.1, 5.0, 0.05);
            CaseSpec c;
            c.bound_id = bound_id;
            c.g = kMonotone[rng.index(5)];
            c.f = c.g;
            c.name = "f=g=" + c.g + "#" + std::to_string(i);
            if (bound_id == "4.2") c.w = rng.index(2) == 0 ? "t" : "1 + t^2";
            c.a = iv.a;
            c.b = iv.b;
            c.x = i % 2 == 0 ? "a" : "b";
            return c;
        };
    }
    if (bound_id == "1.4") {
        return [](std::size_t i, Rng& rng) {
            static const double kP[] = {0.5, 1.0, 2.0, 3.0};
            const Interval iv = random_interval(rng, 0.1, 5.0, 0.05);
            const double x = iv.a + iv.length() * rng.uniform(0.05, 0.95);
            CaseSpec c;
            c.bound_id = "1.4";
            c.p = kP[rng.index(4)];
            c.f = "abs(t - " + fmt(x) + ")^" + fmt(c.p);
            c.name = "f=|t-x|^p#" + std::to_string(i);
            c.a = iv.a;
            c.b = iv.b;
            c.x = fmt(x);
            return c;
        };
    }
    std::string known;
    for (const auto& id : builtin_family_ids()) known += (known.empty() ? "" : ", ") + id;
    throw PreconditionError("no sharpness family for bound " + bound_id + " (available: " + known + ")");
}

SharpnessResult sharpness_scan(const std::string& bound_id, const CaseFamily& family, std::size_t n,
                               const RunConfig& config) {
    Rng rng(config.seed);
    std::vector<CaseSpec> cases;
    cases.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        CaseSpec c = family(i, rng);
        c.bound_id = bound_id;
        cases.push_back(std::move(c));
    }
    SharpnessResult out;
    out.suite = run_suite(cases, config);
    out.max_ratio = out.suite.summary.worst_ratio;
    out.argmax_case = out.suite.summary.worst_case;
    return out;
}

const std::vector<double>& consistency_exponents() {
    static const std::vector<double> ps{-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0};
    return ps;
}

ConsistencyResult consistency_suite(double pass_rel_tol) {
    ConsistencyResult out;
    constexpr double kNorm = 1.3;
    constexpr double kLeft = 0.7;
    constexpr double kRight = 1.9;
    constexpr double kQuad = 1e-14;
    const std::vector<Interval> positive{{0.5, 1.5}, {1.0, 3.0}, {0.2, 4.0}, {2.0, 2.5}};
    const std::vector<Interval> quarter{{0.1, 1.4}, {0.3, 0.9}, {0.05, 1.5}};
    const std::vector<double> fractions{0.0, 0.2, 0.5, 0.77, 1.0};
    const std::vector<std::string> comparisons{"t^3 + t", "exp(t)", "ln(t)", "sqrt(t)"};
    const std::vector<std::string> weights{"1", "t", "1 + t^2", "exp(-t)"};

    auto record = [&](const std::string& id, const std::string& label, double closed, double oracle) {
        ConsistencyItem it;
        it.bound_id = id;
        it.label = id + " " + label;
        it.closed_form = closed;
        it.oracle = oracle;
        const double scale = std::max(std::fabs(oracle), std::numeric_limits<double>::min());
        it.rel_error = std::fabs(closed - oracle) / scale;
        it.pass = it.rel_error <= pass_rel_tol;
        out.max_rel_error = std::max(out.max_rel_error, it.rel_error);
        out.items.push_back(std::move(it));
    };
    auto abs_diff = [&](const FunctionSpec& g, double x, double lo, double hi) {
        if (!(lo < hi)) return 0.0;
        return integrate_abs_diff(g, x, lo, hi, kQuad).value;
    };
    auto where = [](const Interval& iv, double x) {
        return "[" + fmt(iv.a) + "," + fmt(iv.b) + "] x=" + fmt(x);
    };

    const FunctionSpec t = FunctionSpec::parse("t");
    const FunctionSpec ln = FunctionSpec::parse("ln(t)");
    const FunctionSpec et = FunctionSpec::parse("exp(t)");
    const FunctionSpec sine = FunctionSpec::parse("sin(t)");
    const FunctionSpec cosine = FunctionSpec::parse("cos(t)");
    const FunctionSpec recip = FunctionSpec::parse("1/t");

    for (const Interval& iv : positive) {
        const double L = iv.length();
        const double A = iv.midpoint();
        for (double fr : fractions) {
            const double x = fr == 1.0 ? iv.b : iv.a + fr * L;
            const std::string at = where(iv, x);
            record("1.1", at, classic_ostrowski(kNorm, iv, x), kNorm * abs_diff(t, x, iv.a, iv.b) / L);
            for (double p : consistency_exponents()) {
                const FunctionSpec gp = FunctionSpec::parse("t^" + fmt(p));
                record("1.2", at + " p=" + fmt(p), power_bound(iv, x, p, kNorm),
                       kNorm / std::fabs(p) * abs_diff(gp, x, iv.a, iv.b) / L);
                if (p > 0.0) {
                    const FunctionSpec gl = FunctionSpec::parse("abs(t - " + fmt(x) + ")^" + fmt(p));
                    record("1.4", at + " p=" + fmt(p), symmetric_local_power_bound(iv, x, p, kNorm),
                           kNorm / p * abs_diff(gl, x, iv.a, iv.b) / L);
                    record("2.21", at + " p=" + fmt(p), local_power_bound(iv, x, p, kLeft, kRight),
                           (kLeft / p * abs_diff(gl, x, iv.a, x) + kRight / p * abs_diff(gl, x, x, iv.b)) / L);
                }
            }
            record("1.3", at, log_bound(iv, x, kNorm), kNorm * abs_diff(ln, x, iv.a, iv.b) / L);
            record("2.7", at, exp_bound(iv, x, kNorm), kNorm * abs_diff(et, x, iv.a, iv.b) / L);
            for (const auto& gs : comparisons) {
                const FunctionSpec g = FunctionSpec::parse(gs);
                record("2.2", at + " g=" + gs, general_bound(g, iv, x, kNorm, kQuad),
                       kNorm * abs_diff(g, x, iv.a, iv.b) / L);
                record("2.15", at + " g=" + gs, split_bound(g, iv, x, kLeft, kRight, kQuad),
                       (kLeft * abs_diff(g, x, iv.a, x) + kRight * abs_diff(g, x, x, iv.b)) / L);
            }
            for (const auto& ws : weights) {
                const FunctionSpec w = FunctionSpec::parse(ws);
                const WeightSpec W(w, iv);
                const double M = W.total_mass();
                for (const auto& gs : comparisons) {
                    const FunctionSpec g = FunctionSpec::parse(gs);
                    const std::string lab = at + " g=" + gs + " w=" + ws;
                    auto wdiff = [&](double lo, double hi) {
                        if (!(lo < hi)) return 0.0;
                        return integrate_weighted_abs_diff(g, w, x, lo, hi, kQuad).value;
                    };
                    record("4.2", lab, weighted_bound(g, W, x, kNorm), kNorm * wdiff(iv.a, iv.b) / M);
                    record("4.7", lab, weighted_split_bound(g, W, x, kLeft, kRight),
                           (kLeft * wdiff(iv.a, x) + kRight * wdiff(x, iv.b)) / M);
                }
            }
        }

        // Fixed-node forms.
        const std::string at = where(iv, A);
        record("2.23", at + " p=1", local_power_midpoint_bound(iv, 1.0, kLeft, kRight),
               local_power_bound(iv, A, 1.0, kLeft, kRight));
        for (double p : consistency_exponents()) {
            if (p > 0.0) {
                const FunctionSpec gl = FunctionSpec::parse("abs(t - " + fmt(A) + ")^" + fmt(p));
                record("2.23", at + " p=" + fmt(p), local_power_midpoint_bound(iv, p, kLeft, kRight),
                       (kLeft / p * abs_diff(gl, A, iv.a, A) + kRight / p * abs_diff(gl, A, A, iv.b)) / L);
            }
            if (p == -1.0) continue;
            const FunctionSpec gp = FunctionSpec::parse("t^" + fmt(p));
            record("3.1", at + " p=" + fmt(p), midpoint_power_bound(iv, p, kLeft, kRight),
                   (kLeft * abs_diff(gp, A, iv.a, A) + kRight * abs_diff(gp, A, A, iv.b)) / (std::fabs(p) * L));
        }
        record("3.3", at, midpoint_linear_bound(iv, kLeft, kRight),
               (kLeft * abs_diff(t, A, iv.a, A) + kRight * abs_diff(t, A, A, iv.b)) / L);
        record("3.5", at, midpoint_reciprocal_bound(iv, kLeft, kRight),
               (kLeft * abs_diff(recip, A, iv.a, A) + kRight * abs_diff(recip, A, A, iv.b)) / L);
        record("3.7", at, midpoint_log_bound(iv, kLeft, kRight),
               (kLeft * abs_diff(ln, A, iv.a, A) + kRight * abs_diff(ln, A, A, iv.b)) / L);
        record("3.7", at + " geometric form", midpoint_log_bound_geometric_form(iv, kLeft, kRight),
               midpoint_log_bound(iv, kLeft, kRight));
        for (const auto& gs : comparisons) {
            const FunctionSpec g = FunctionSpec::parse(gs);
            record("2.5", at + " g=" + gs, midpoint_bound(g, iv, kNorm, kQuad), kNorm * abs_diff(g, A, iv.a, iv.b) / L);
            record("2.19", at + " g=" + gs, split_midpoint_bound(g, iv, kLeft, kRight, kQuad),
                   (kLeft * abs_diff(g, A, iv.a, A) + kRight * abs_diff(g, A, A, iv.b)) / L);
        }
        record("2.7", at + " midpoint form", exp_midpoint_bound(iv, kNorm), exp_bound(iv, A, kNorm));
        for (const auto& ws : weights) {
            const FunctionSpec w = FunctionSpec::parse(ws);
            const WeightSpec W(w, iv);
            const double x0 = find_weight_median(W);
            for (const auto& gs : comparisons) {
                const FunctionSpec g = FunctionSpec::parse(gs);
                record("4.6", where(iv, x0) + " g=" + gs + " w=" + ws, weighted_median_bound(g, W, kNorm),
                       kNorm * integrate_weighted_abs_diff(g, w, x0, iv.a, iv.b, kQuad).value / W.total_mass());
            }
        }
    }

    for (const Interval& iv : quarter) {
        const double L = iv.length();
        for (double fr : fractions) {
            const double x = fr == 1.0 ? iv.b : iv.a + fr * L;
            const std::string at = where(iv, x);
            record("2.10", at, cos_bound(iv, x, kNorm), kNorm * abs_diff(sine, x, iv.a, iv.b) / L);
            record("2.13", at, sin_bound(iv, x, kNorm), kNorm * abs_diff(cosine, x, iv.a, iv.b) / L);
        }
        const double A = iv.midpoint();
        record("2.10", where(iv, A) + " midpoint form", cos_midpoint_bound(iv, kNorm), cos_bound(iv, A, kNorm));
        record("2.13", where(iv, A) + " midpoint form", sin_midpoint_bound(iv, kNorm), sin_bound(iv, A, kNorm));
    }

    for (const auto& it : out.items) {
        ++out.summary.total;
        if (it.pass) {
            ++out.summary.passed;
        } else {
            ++out.summary.failed;
            if (it.rel_error > out.summary.max_violation) {
                out.summary.max_violation = it.rel_error;
                out.summary.max_violation_case = it.label;
            }
        }
        if (it.rel_error > out.summary.worst_ratio) {
            out.summary.worst_ratio = it.rel_error;
            out.summary.worst_case = it.label;
        }
    }
    return out;
}

NodeResult best_node(const std::function<double(double)>& rhs_of_x, const Interval& interval, std::size_t grid) {
    if (grid < 2) grid = 2;
    const double len = interval.length();
    auto node = [&](std::size_t i) {
        return i == grid ? interval.b : interval.a + len * static_cast<double>(i) / static_cast<double>(grid);
    };
    std::size_t best_i = 0;
    double best = rhs_of_x(node(0));
    for (std::size_t i = 1; i <= grid; ++i) {
        const double v = rhs_of_x(node(i));
        if (v < best) {
            best = v;
            best_i = i;
        }
    }
    NodeResult res{node(best_i), best};
    double lo = node(best_i == 0 ? 0 : best_i - 1);
    double hi = node(best_i == grid ? grid : best_i + 1);
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = rhs_of_x(x1);
    double f2 = rhs_of_x(x2);
    const double tol = 1e-12 * std::max(len, std::fabs(interval.a) + std::fabs(interval.b));
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = rhs_of_x(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = rhs_of_x(x2);
        }
    }
    const double xm = f1 <= f2 ? x1 : x2;
    const double fm = std::min(f1, f2);
    if (fm < res.rhs) res = {xm, fm};
    return res;
}

NodeResult best_node(const CaseSpec& c, const RunConfig& config, std::size_t grid) {
    const Interval iv(c.a, c.b);
    const EvalSettings settings = config.settings();
    CaseSpec frozen = c;
    frozen.check_hypothesis = false;
    const std::string& id = c.bound_id;
    const bool x_dependent_norm = id == "1.4" || id == "2.21" || id == "2.23";
    if (!x_dependent_norm && !c.norm && !c.norm_left && !c.norm_right) {
        const BoundReport r = evaluate_bound(c, iv.midpoint(), settings);
        double n = r.seminorm.value;
        if (r.seminorm_right) n = std::max(n, r.seminorm_right->value);
        frozen.norm = n;
    }
    return best_node([&](double x) { return evaluate_rhs(frozen, x, settings); }, iv, grid);
}

std::vector<CaseSpec> inequality_cases(std::uint64_t seed, std::size_t n_functions, std::size_t n_points) {
    Rng rng(seed);
    std::vector<CaseSpec> cases;
    static const double kPowers[] = {-2.0, -1.0, -0.5, 0.5, 2.0, 3.0};
    static const char* const kWeights[] = {"1", "t", "1 + t^2", "exp(-t)"};
    for (std::size_t i = 0; i < n_functions; ++i) {
        const CorpusFunction fn = random_function(rng);
        const Interval iv = random_interval(rng, 0.1, 5.0, 0.05);
        const Interval qt = random_interval(rng, 0.1, 1.5, 0.05);
        const double p = kPowers[i % 6];
        const char* w = kWeights[i % 4];
        const std::string tag = "fn" + std::to_string(i);
        const double A = iv.midpoint();

        auto base = [&](const std::string& id, const Interval& on, const std::string& suffix) {
            CaseSpec c;
            c.name = tag + " " + id + suffix;
            c.bound_id = id;
            c.f = fn.text;
            c.a = on.a;
            c.b = on.b;
            return c;
        };
        auto sup = [&](double lo, double hi) { return lo < hi ? fn.sup_abs_derivative(lo, hi) : 0.0; };
        auto analytic = [&](CaseSpec c) {
            c.check_hypothesis = false;
            return c;
        };

        for (std::size_t k = 0; k < n_points; ++k) {
            const double frac = n_points == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(n_points - 1);
            const double x = k + 1 == n_points && n_points > 1 ? iv.b : iv.a + iv.length() * frac;
            const double xq = k + 1 == n_points && n_points > 1 ? qt.b : qt.a + qt.length() * frac;
            const std::string sx = fmt(x);
            const std::string at = " x=" + sx;

            CaseSpec c = analytic(base("1.1", iv, at));
            c.x = sx;
            c.norm = sup(iv.a, iv.b);
            cases.push_back(c);

            c = analytic(base("2.2", iv, " g=t" + at));
            c.x = sx;
            c.norm = sup(iv.a, iv.b);
            cases.push_back(c);

            c = analytic(base("2.15", iv, " g=t" + at));
            c.x = sx;
            c.norm_left = sup(iv.a, x);
            c.norm_right = sup(x, iv.b);
            cases.push_back(c);

            c = analytic(base("1.4", iv, " p=1" + at));
            c.x = sx;
            c.p = 1.0;
            c.norm = sup(iv.a, iv.b);
            cases.push_back(c);

            c = analytic(base("2.21", iv, " p=1" + at));
            c.x = sx;
            c.p = 1.0;
            c.norm_left = sup(iv.a, x);
            c.norm_right = sup(x, iv.b);
            cases.push_back(c);

            c = analytic(base("4.2", iv, std::string(" g=t w=") + w + at));
            c.x = sx;
            c.w = w;
            c.norm = sup(iv.a, iv.b);
            cases.push_back(c);

            c = analytic(base("4.7", iv, std::string(" g=t w=") + w + at));
            c.x = sx;
            c.w = w;
            c.norm_left = sup(iv.a, x);
            c.norm_right = sup(x, iv.b);
            cases.push_back(c);

            c = base("1.2", iv, " p=" + fmt(p) + at);
            c.x = sx;
            c.p = p;
            cases.push_back(c);

            c = base("1.3", iv, at);
            c.x = sx;
            cases.push_back(c);

            c = base("2.2", iv, " g=exp(t)" + at);
            c.x = sx;
            c.g = "exp(t)";
            cases.push_back(c);

            c = base("2.7", iv, at);
            c.x = sx;
            cases.push_back(c);

            c = base("1.4", iv, " p=0.5" + at);
            c.x = sx;
            c.p = 0.5;
            cases.push_back(c);

            c = base("2.10", qt, " x=" + fmt(xq));
            c.x = fmt(xq);
            cases.push_back(c);

            c = base("2.13", qt, " x=" + fmt(xq));
            c.x = fmt(xq);
            cases.push_back(c);
        }

        // Fixed-node bounds, once per function.
        CaseSpec c = analytic(base("2.5", iv, " g=t"));
        c.norm = sup(iv.a, iv.b);
        cases.push_back(c);

        c = analytic(base("2.19", iv, " g=t"));
        c.norm_left = sup(iv.a, A);
        c.norm_right = sup(A, iv.b);
        cases.push_back(c);

        c = analytic(base("2.23", iv, " p=1"));
        c.p = 1.0;
        c.norm_left = sup(iv.a, A);
        c.norm_right = sup(A, iv.b);
        cases.push_back(c);

        c = analytic(base("3.3", iv, ""));
        c.norm_left = sup(iv.a, A);
        c.norm_right = sup(A, iv.b);
        cases.push_back(c);

        c = analytic(base("4.6", iv, std::string(" g=t w=") + w));
        c.w = w;
        c.norm = sup(iv.a, iv.b);
        cases.push_back(c);

        const double p31 = p == -1.0 ? 0.5 : p;
        c = base("3.1", iv, " p=" + fmt(p31));
        c.p = p31;
        cases.push_back(c);

        cases.push_back(base("3.5", iv, ""));
        cases.push_back(base("3.7", iv, ""));
    }
    return cases;
}

std::vector<CaseSpec> equality_cases() {
    std::vector<CaseSpec> out;
    auto add = [&](CaseSpec c) { out.push_back(std::move(c)); };
    const std::vector<std::pair<double, double>> ivs{{0.0, 1.0}, {-2.0, 3.0}, {0.5, 4.0}};
    for (const auto& [a, b] : ivs) {
        for (const char* x : {"a", "b"}) {
            CaseSpec c;
            c.bound_id = "1.1";
            c.name = "equality 1.1 f=t [" + fmt(a) + "," + fmt(b) + "] x=" + x;
            c.f = "t";
            c.a = a;
            c.b = b;
            c.x = x;
            c.norm = 1.0;
            add(c);
        }
    }
    for (const char* g : {"exp(t)", "t^3 + t", "ln(t)"}) {
        for (const char* x : {"a", "b"}) {
            CaseSpec c;
            c.bound_id = "2.2";
            c.name = std::string("equality 2.2 f=g=") + g + " x=" + x;
            c.f = g;
            c.g = g;
            c.a = 0.5;
            c.b = 2.0;
            c.x = x;
            c.norm = 1.0;
            add(c);
        }
    }
    return out;
}

}  // namespace ostrowski
