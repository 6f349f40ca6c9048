#include "ostrowski/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>

#include "ostrowski/error.hpp"

namespace ostrowski {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

json number_json(double v) {
    if (std::isfinite(v)) return v;
    return fmt(v);
}

double json_number(const json& j, const std::string& key) {
    const json& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf") return INFINITY;
        if (s == "-inf") return -INFINITY;
        if (s == "nan") return NAN;
    }
    throw PreconditionError("field '" + key + "' must be a number");
}

json to_json(const SupEstimate& s) {
    return json{{"value", number_json(s.value)},
                {"argmax", number_json(s.argmax)},
                {"provenance", to_string(s.provenance)},
                {"interval", json::array({number_json(s.interval.a), number_json(s.interval.b)})}};
}

json to_json(const BoundReport& r) {
    json j{{"bound_id", r.bound_id}, {"lhs", number_json(r.lhs)},     {"rhs", number_json(r.rhs)},
           {"slack", number_json(r.slack)}, {"ratio", number_json(r.ratio)}, {"seminorm", to_json(r.seminorm)},
           {"x", number_json(r.x)},       {"a", number_json(r.a)},         {"b", number_json(r.b)}};
    if (r.seminorm_right) j["seminorm_right"] = to_json(*r.seminorm_right);
    j["inputs"] = r.inputs;
    j["warnings"] = r.warnings;
    return j;
}

json to_json(const RunConfig& c) {
    return json{{"seed", c.seed},
                {"rel_tol", number_json(c.rel_tol)},
                {"grid", c.grid},
                {"format", c.format},
                {"jobs", c.jobs}};
}

json to_json(const SuiteSummary& s) {
    return json{{"total", s.total},
                {"passed", s.passed},
                {"failed", s.failed},
                {"errors", s.errors},
                {"worst_ratio", number_json(s.worst_ratio)},
                {"worst_case", s.worst_case},
                {"max_violation", number_json(s.max_violation)},
                {"max_violation_case", s.max_violation_case}};
}

json to_json(const CaseResult& r) {
    json j{{"case", r.name}, {"bound_id", r.bound_id}, {"status", to_string(r.status)}};
    if (r.report) {
        j["report"] = to_json(*r.report);
        j["violation"] = number_json(r.violation);
    }
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

json to_json(const CaseSpec& c) {
    json j{{"bound_id", c.bound_id}, {"f", c.f}, {"a", c.a}, {"b", c.b}, {"x", c.x}, {"p", c.p},
           {"tol_rel", c.tol.rel},   {"tol_abs", c.tol.abs}};
    if (!c.name.empty()) j["name"] = c.name;
    if (!c.g.empty()) j["g"] = c.g;
    if (!c.w.empty()) j["w"] = c.w;
    if (c.norm) j["norm"] = *c.norm;
    if (c.norm_left) j["norm_left"] = *c.norm_left;
    if (c.norm_right) j["norm_right"] = *c.norm_right;
    if (c.rel_tol) j["rel_tol"] = *c.rel_tol;
    if (c.grid) j["grid"] = *c.grid;
    if (!c.check_hypothesis) j["check_hypothesis"] = false;
    return j;
}

CaseSpec case_from_json(const json& j) {
    if (!j.is_object()) throw PreconditionError("case must be a JSON object");
    static const std::set<std::string> known{"name",  "bound_id",   "id",         "f",       "g",       "w",
                                             "weight", "a",         "b",          "x",       "p",       "norm",
                                             "M",      "gamma",     "norm_left",  "norm_right", "tol_rel", "tol_abs",
                                             "rel_tol", "grid",     "check_hypothesis"};
    for (const auto& [k, v] : j.items()) {
        if (!known.count(k)) throw PreconditionError("unknown case field '" + k + "'");
    }
    auto str = [&](const char* k) {
        const json& v = j.at(k);
        if (!v.is_string()) throw PreconditionError(std::string("field '") + k + "' must be a string");
        return v.get<std::string>();
    };
    CaseSpec c;
    if (j.contains("bound_id")) {
        c.bound_id = str("bound_id");
    } else if (j.contains("id")) {
        c.bound_id = str("id");
    } else {
        throw PreconditionError("case is missing 'bound_id'");
    }
    if (j.contains("name")) c.name = str("name");
    if (j.contains("f")) c.f = str("f");
    if (j.contains("g")) c.g = str("g");
    if (j.contains("w")) c.w = str("w");
    if (j.contains("weight")) c.w = str("weight");
    if (!j.contains("a") || !j.contains("b")) throw PreconditionError("case needs 'a' and 'b'");
    c.a = json_number(j, "a");
    c.b = json_number(j, "b");
    if (j.contains("x")) {
        const json& x = j.at("x");
        if (x.is_number()) {
            c.x = fmt(x.get<double>());
        } else if (x.is_string()) {
            c.x = x.get<std::string>();
        } else {
            throw PreconditionError("field 'x' must be a number or string");
        }
    }
    if (j.contains("p")) c.p = json_number(j, "p");
    for (const char* k : {"norm", "M", "gamma"}) {
        if (j.contains(k)) {
            if (c.norm) throw PreconditionError("give only one of norm, M, gamma");
            c.norm = json_number(j, k);
        }
    }
    if (j.contains("norm_left")) c.norm_left = json_number(j, "norm_left");
    if (j.contains("norm_right")) c.norm_right = json_number(j, "norm_right");
    if (j.contains("tol_rel")) c.tol.rel = json_number(j, "tol_rel");
    if (j.contains("tol_abs")) c.tol.abs = json_number(j, "tol_abs");
    if (j.contains("rel_tol")) c.rel_tol = json_number(j, "rel_tol");
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (!g.is_number_unsigned()) throw PreconditionError("field 'grid' must be a positive integer");
        c.grid = g.get<std::size_t>();
    }
    if (j.contains("check_hypothesis")) {
        if (!j.at("check_hypothesis").is_boolean()) throw PreconditionError("check_hypothesis must be boolean");
        c.check_hypothesis = j.at("check_hypothesis").get<bool>();
    }
    return c;
}

std::vector<CaseSpec> read_suite(std::istream& in) {
    std::vector<CaseSpec> cases;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            cases.push_back(case_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw PreconditionError("suite line " + std::to_string(lineno) + ": " + e.what());
        } catch (const Error& e) {
            throw PreconditionError("suite line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cases;
}

json suite_report(const SuiteResult& suite, const RunConfig& config) {
    json results = json::array();
    for (const auto& r : suite.results) results.push_back(to_json(r));
    return json{{"config", to_json(config)}, {"summary", to_json(suite.summary)}, {"results", results}};
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols{"case",
                                               "status",
                                               "bound_id",
                                               "lhs",
                                               "rhs",
                                               "slack",
                                               "ratio",
                                               "seminorm_value",
                                               "seminorm_argmax",
                                               "seminorm_provenance",
                                               "seminorm_right_value",
                                               "seminorm_right_argmax",
                                               "seminorm_right_provenance",
                                               "x",
                                               "a",
                                               "b",
                                               "violation",
                                               "warnings",
                                               "error"};
    return cols;
}

std::string csv_header(const RunConfig& config) {
    return "# ostrowski report seed=" + std::to_string(config.seed) + " rel_tol=" + fmt(config.rel_tol) +
           " grid=" + std::to_string(config.grid) + "\n" + join(csv_columns(), ",") + "\n";
}

std::string csv_row(const CaseResult& r) {
    std::vector<std::string> f;
    f.push_back(csv_field(r.name));
    f.push_back(to_string(r.status));
    f.push_back(csv_field(r.bound_id));
    if (r.report) {
        const BoundReport& b = *r.report;
        for (double v : {b.lhs, b.rhs, b.slack, b.ratio, b.seminorm.value, b.seminorm.argmax}) f.push_back(fmt(v));
        f.push_back(to_string(b.seminorm.provenance));
        if (b.seminorm_right) {
            f.push_back(fmt(b.seminorm_right->value));
            f.push_back(fmt(b.seminorm_right->argmax));
            f.push_back(to_string(b.seminorm_right->provenance));
        } else {
            f.insert(f.end(), 3, "");
        }
        for (double v : {b.x, b.a, b.b, r.violation}) f.push_back(fmt(v));
        f.push_back(csv_field(join(b.warnings, "; ")));
    } else {
        f.insert(f.end(), 15, "");
    }
    f.push_back(csv_field(r.error));
    return join(f, ",") + "\n";
}

void write_csv(std::ostream& out, const SuiteResult& suite, const RunConfig& config) {
    out << csv_header(config);
    for (const auto& r : suite.results) out << csv_row(r);
}

}  // namespace ostrowski
