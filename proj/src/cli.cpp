#include "ostrowski/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ostrowski/error.hpp"
#include "ostrowski/io.hpp"
#include "ostrowski/means.hpp"
#include "ostrowski/weighted.hpp"

namespace ostrowski::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CaseFlags {
    std::string id;
    std::string f = "t";
    std::string g;
    std::string weight;
    double a = 0.0;
    double b = 1.0;
    std::string x = "midpoint";
    double p = 1.0;
    std::optional<double> norm;
    std::optional<double> norm_left;
    std::optional<double> norm_right;
    double tol_rel = 1e-9;
    double tol_abs = 1e-12;
};

void add_case_flags(CLI::App* sub, CaseFlags& cf) {
    sub->add_option("--id", cf.id, "bound id")->required();
    sub->add_option("--f", cf.f, "function f(t)");
    sub->add_option("--g", cf.g, "comparison function g(t)");
    sub->add_option("--weight", cf.weight, "weight w(t) for 4.x bounds");
    sub->add_option("--a", cf.a, "left endpoint")->required();
    sub->add_option("--b", cf.b, "right endpoint")->required();
    sub->add_option("--x", cf.x, "node: number, a, b, midpoint, median, sweep:n, random:n");
    sub->add_option("--p", cf.p, "exponent for 1.2, 1.4, 2.21, 2.23, 3.1");
    auto* m = sub->add_option("--M,--gamma,--norm", cf.norm, "analytic seminorm (otherwise sampled)");
    sub->add_option("--norm-left", cf.norm_left, "analytic seminorm on [a,x]")->excludes(m);
    sub->add_option("--norm-right", cf.norm_right, "analytic seminorm on [x,b]")->excludes(m);
    sub->add_option("--tol-rel", cf.tol_rel, "pass tolerance, relative");
    sub->add_option("--tol-abs", cf.tol_abs, "pass tolerance, absolute");
}

CaseSpec to_case(const CaseFlags& cf) {
    if (!is_known_bound(cf.id)) throw UsageError("unknown bound id '" + cf.id + "'");
    CaseSpec c;
    c.bound_id = cf.id;
    c.f = cf.f;
    c.g = cf.g;
    c.w = cf.weight;
    c.a = cf.a;
    c.b = cf.b;
    c.x = cf.x;
    c.p = cf.p;
    c.norm = cf.norm;
    c.norm_left = cf.norm_left;
    c.norm_right = cf.norm_right;
    c.tol.rel = cf.tol_rel;
    c.tol.abs = cf.tol_abs;
    return c;
}

std::uint64_t parse_seed(const std::string& s, const char* source) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw UsageError(std::string("invalid seed from ") + source + ": '" + s + "'");
    }
    return v;
}

void emit_results(std::ostream& out, const std::vector<CaseResult>& results, const RunConfig& config) {
    if (config.format == "csv") {
        SuiteResult s{summarize(results), results};
        write_csv(out, s, config);
        return;
    }
    if (config.format == "text") {
        for (const auto& r : results) {
            out << r.name << " " << to_string(r.status);
            if (r.report) {
                out << " lhs=" << fmt(r.report->lhs) << " rhs=" << fmt(r.report->rhs)
                    << " ratio=" << fmt(r.report->ratio) << " x=" << fmt(r.report->x);
            }
            if (!r.error.empty()) out << " error=" << r.error;
            out << "\n";
        }
        return;
    }
    auto one = [&](const CaseResult& r) {
        json j = to_json(*r.report);
        j["status"] = to_string(r.status);
        j["config"] = to_json(config);
        return j;
    };
    if (results.size() == 1) {
        out << one(results.front()).dump(2) << "\n";
    } else {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(one(r));
        out << arr.dump(2) << "\n";
    }
}

int status_exit(const std::vector<CaseResult>& results) {
    for (const auto& r : results) {
        if (r.status != CaseStatus::Pass) return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace

std::string usage_text() {
    std::ostringstream os;
    os << "Expression grammar (variable t):\n"
          "  expr   := term (('+' | '-') term)*\n"
          "  term   := unary (('*' | '/') unary)*\n"
          "  unary  := '-' unary | power\n"
          "  power  := atom ('^' unary)?        right-associative, binds tighter than unary minus\n"
          "  atom   := number | 't' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'\n"
          "  name   := sin | cos | exp | ln | abs | sqrt\n"
          "\n"
          "Flags:\n"
          "  --f, --g, --weight <expr>     function, comparison function, weight\n"
          "  --a, --b <real>               interval endpoints (a < b)\n"
          "  --x <node>                    number | a | b | midpoint | median | sweep:n | random:n\n"
          "  --p <real>                    exponent\n"
          "  --M, --gamma, --norm <real>   analytic seminorm; sampled when omitted\n"
          "  --norm-left, --norm-right     analytic seminorms on [a,x] and [x,b]\n"
          "  --id <bound id>               one of:\n";
    for (const auto& id : bound_ids()) os << "      " << id << std::string(6 - id.size(), ' ') << describe_bound(id) << "\n";
    os << "  --seed <uint64>               default 42; OSTROWSKI_SEED overrides the default, --seed overrides both\n"
          "  --format json|csv|text        default json (text for mean and median)\n"
          "  --rel-tol <real>              quadrature relative tolerance, default 1e-13\n"
          "  --grid <int>                  sup sampling grid, default 4096\n"
          "  --jobs <int>                  worker threads for verify and sharpness, default 1\n"
          "\n"
          "Subcommands:\n"
          "  mean --kind A|L|Lp|I|E|C|S|G [--p] --x --y\n"
          "  sup --kind ratio|abs|power|log|local --f [--g] --a --b [--p] [--x]\n"
          "  bound --id ... --f ... --a --b [--x] [seminorm flags]\n"
          "  median --weight --a --b [--tol]\n"
          "  verify --suite cases.jsonl [--report out.json|out.csv]\n"
          "  sharpness --id 1.1|1.4|2.2|4.2 [--n 1000]\n"
          "  optimal-node --id ... --f ... --a --b [--nodes 1000] [seminorm flags]\n"
          "\n"
          "Exit codes: 0 ok, 1 verification failure, 2 usage or domain error.\n";
    return os.str();
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return dispatch(args, out, err);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ostrowski-type bounds: evaluate, verify and scan"};
    app.name("ostrowski");
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::optional<std::uint64_t> seed_flag;
    std::optional<std::string> format_flag;
    app.add_option("--seed", seed_flag, "random seed");
    app.add_option("--format", format_flag, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--rel-tol", config.rel_tol, "quadrature relative tolerance");
    app.add_option("--grid", config.grid, "sup sampling grid")->check(CLI::Range(kMinSupGrid, std::size_t{1} << 24));
    app.add_option("--jobs", config.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    std::string mean_kind;
    double mean_p = 1.0;
    double mean_x = 0.0;
    double mean_y = 0.0;
    auto* mean = app.add_subcommand("mean", "evaluate a special mean");
    mean->add_option("--kind", mean_kind, "A, L, Lp, I, E, C, S or G")->required();
    mean->add_option("--p", mean_p, "exponent for Lp");
    mean->add_option("--x", mean_x)->required();
    mean->add_option("--y", mean_y)->required();

    std::string sup_kind = "abs";
    std::string sup_f = "t";
    std::string sup_g = "t";
    double sup_a = 0.0;
    double sup_b = 1.0;
    double sup_p = 1.0;
    std::optional<double> sup_x;
    auto* sup = app.add_subcommand("sup", "sampled seminorm");
    sup->add_option("--kind", sup_kind, "ratio (|f'/g'|), abs (|f'|), power, log, local")
        ->check(CLI::IsMember({"ratio", "abs", "power", "log", "local"}));
    sup->add_option("--f", sup_f);
    sup->add_option("--g", sup_g);
    sup->add_option("--a", sup_a)->required();
    sup->add_option("--b", sup_b)->required();
    sup->add_option("--p", sup_p);
    sup->add_option("--x", sup_x, "split point for local");

    CaseFlags bound_flags;
    auto* bound = app.add_subcommand("bound", "evaluate one bound");
    add_case_flags(bound, bound_flags);

    std::string median_weight;
    double median_a = 0.0;
    double median_b = 1.0;
    double median_tol = 1e-13;
    auto* median = app.add_subcommand("median", "weight median");
    median->add_option("--weight", median_weight)->required();
    median->add_option("--a", median_a)->required();
    median->add_option("--b", median_b)->required();
    median->add_option("--tol", median_tol);

    std::string suite_path;
    std::string report_path;
    auto* verify = app.add_subcommand("verify", "check a JSONL suite of cases");
    verify->add_option("--suite", suite_path, "line-delimited CaseSpec file")->required();
    verify->add_option("--report", report_path, "write all reports to out.json or out.csv");

    std::string sharp_id;
    std::size_t sharp_n = 1000;
    auto* sharpness = app.add_subcommand("sharpness", "max lhs/rhs over an equality family");
    sharpness->add_option("--id", sharp_id)->required();
    sharpness->add_option("--n", sharp_n)->check(CLI::PositiveNumber);

    CaseFlags node_flags;
    std::size_t nodes = 1000;
    auto* optimal = app.add_subcommand("optimal-node", "node x minimising the bound");
    add_case_flags(optimal, node_flags);
    optimal->add_option("--nodes", nodes, "scan grid")->check(CLI::Range(2, 1 << 24));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help() << "\n" << usage_text();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << usage_text();
        return kExitUsage;
    }

    try {
        if (const char* env = std::getenv("OSTROWSKI_SEED"); env && *env) {
            config.seed = parse_seed(env, "OSTROWSKI_SEED");
        }
        if (seed_flag) config.seed = *seed_flag;
        const bool text_default = mean->parsed() || median->parsed();
        config.format = format_flag.value_or(text_default ? "text" : "json");

        if (mean->parsed()) {
            const double v = evaluate_mean(MeanKind::from_name(mean_kind, mean_p), mean_x, mean_y);
            if (config.format == "json") {
                out << json{{"kind", mean_kind}, {"p", mean_p}, {"x", mean_x}, {"y", mean_y},
                            {"value", number_json(v)}, {"config", to_json(config)}}
                           .dump(2)
                    << "\n";
            } else if (config.format == "csv") {
                out << "kind,p,x,y,value\n"
                    << mean_kind << "," << fmt(mean_p) << "," << fmt(mean_x) << "," << fmt(mean_y) << "," << fmt(v)
                    << "\n";
            } else {
                out << fmt(v) << "\n";
            }
            return kExitOk;
        }

        if (sup->parsed()) {
            const Interval iv(sup_a, sup_b);
            const FunctionSpec f = FunctionSpec::parse(sup_f);
            json j;
            if (sup_kind == "local") {
                if (!sup_x) throw UsageError("sup --kind local needs --x");
                auto [l, r] = local_power_seminorms(f, iv, *sup_x, sup_p, config.grid);
                j = json{{"left", to_json(l)}, {"right", to_json(r)}};
            } else {
                SupEstimate s;
                if (sup_kind == "ratio") {
                    s = sup_ratio(f, FunctionSpec::parse(sup_g), iv, config.grid);
                } else if (sup_kind == "abs") {
                    s = sup_abs_derivative(f, iv, config.grid);
                } else if (sup_kind == "power") {
                    s = power_seminorm(f, iv, sup_p, config.grid);
                } else {
                    s = log_seminorm(f, iv, config.grid);
                }
                j = to_json(s);
            }
            j["kind"] = sup_kind;
            j["config"] = to_json(config);
            if (config.format == "text") {
                out << (j.contains("value") ? j["value"].dump() : j.dump()) << "\n";
            } else {
                out << j.dump(2) << "\n";
            }
            return kExitOk;
        }

        if (bound->parsed()) {
            const CaseSpec c = to_case(bound_flags);
            const std::vector<CaseResult> results = check_case(c, config, 0);
            for (const auto& r : results) {
                if (r.status == CaseStatus::Error) {
                    err << "error: " << r.error << "\n";
                    return kExitUsage;
                }
            }
            emit_results(out, results, config);
            return status_exit(results);
        }

        if (median->parsed()) {
            const Interval iv(median_a, median_b);
            const WeightSpec w(FunctionSpec::parse(median_weight), iv, config.rel_tol);
            const double x0 = find_weight_median(w, median_tol);
            if (config.format == "json") {
                out << json{{"median", x0},
                            {"cumulative", w.cumulative(x0)},
                            {"mass", w.total_mass()},
                            {"a", median_a},
                            {"b", median_b},
                            {"weight", median_weight},
                            {"config", to_json(config)}}
                           .dump(2)
                    << "\n";
            } else {
                out << fmt(x0) << "\n";
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            std::ifstream in(suite_path);
            if (!in) throw UsageError("cannot open suite file '" + suite_path + "'");
            const std::vector<CaseSpec> cases = read_suite(in);
            const SuiteResult suite = run_suite(cases, config);
            if (!report_path.empty()) {
                std::ofstream rep(report_path, std::ios::binary);
                if (!rep) throw UsageError("cannot write report '" + report_path + "'");
                const bool csv = report_path.size() >= 4 && report_path.substr(report_path.size() - 4) == ".csv";
                if (csv) {
                    write_csv(rep, suite, config);
                } else {
                    rep << suite_report(suite, config).dump(2) << "\n";
                }
                out << json{{"summary", to_json(suite.summary)}, {"report", report_path}, {"config", to_json(config)}}
                           .dump(2)
                    << "\n";
            } else if (config.format == "csv") {
                write_csv(out, suite, config);
            } else if (config.format == "text") {
                emit_results(out, suite.results, config);
                out << "total=" << suite.summary.total << " passed=" << suite.summary.passed
                    << " failed=" << suite.summary.failed << " errors=" << suite.summary.errors << "\n";
            } else {
                out << suite_report(suite, config).dump(2) << "\n";
            }
            return suite.summary.all_passed() ? kExitOk : kExitVerificationFailed;
        }

        if (sharpness->parsed()) {
            if (!is_known_bound(sharp_id)) throw UsageError("unknown bound id '" + sharp_id + "'");
            const SharpnessResult r = sharpness_scan(sharp_id, builtin_family(sharp_id), sharp_n, config);
            json j{{"bound_id", sharp_id},
                   {"n", sharp_n},
                   {"max_ratio", number_json(r.max_ratio)},
                   {"argmax_case", r.argmax_case},
                   {"summary", to_json(r.suite.summary)},
                   {"config", to_json(config)}};
            if (config.format == "text") {
                out << "max_ratio=" << fmt(r.max_ratio) << " case=" << r.argmax_case << "\n";
            } else {
                out << j.dump(2) << "\n";
            }
            return r.suite.summary.all_passed() ? kExitOk : kExitVerificationFailed;
        }

        if (optimal->parsed()) {
            const CaseSpec c = to_case(node_flags);
            const NodeResult n = best_node(c, config, nodes);
            if (config.format == "text") {
                out << fmt(n.x) << " " << fmt(n.rhs) << "\n";
            } else {
                out << json{{"bound_id", c.bound_id}, {"x", n.x},   {"rhs", number_json(n.rhs)}, {"a", c.a},
                            {"b", c.b},               {"nodes", nodes}, {"config", to_json(config)}}
                           .dump(2)
                    << "\n";
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n\n" << usage_text();
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << usage_text();
    return kExitUsage;
}

}  // namespace ostrowski::cli
