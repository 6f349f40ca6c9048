#pragma once

// JSON and CSV forms of cases and reports. JSON field names match the struct
// field names; non-finite numbers are written as the strings "inf", "-inf", "nan".

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ostrowski/harness.hpp"

namespace ostrowski {

nlohmann::json number_json(double v);
double json_number(const nlohmann::json& j, const std::string& key);

nlohmann::json to_json(const SupEstimate& s);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const RunConfig& c);
nlohmann::json to_json(const SuiteSummary& s);
nlohmann::json to_json(const CaseResult& r);
nlohmann::json to_json(const CaseSpec& c);

/// Accepted keys: name, bound_id (or id), f, g, w (or weight), a, b, x, p,
/// norm (or M, gamma), norm_left, norm_right, tol_rel, tol_abs, rel_tol, grid,
/// check_hypothesis. Unknown keys are rejected.
CaseSpec case_from_json(const nlohmann::json& j);

/// One CaseSpec per non-blank line; the error names the offending line.
std::vector<CaseSpec> read_suite(std::istream& in);

/// Full suite report: config, summary and one entry per evaluated point.
nlohmann::json suite_report(const SuiteResult& suite, const RunConfig& config);

/// Column order of CSV reports.
const std::vector<std::string>& csv_columns();
std::string csv_header(const RunConfig& config);
std::string csv_row(const CaseResult& r);
void write_csv(std::ostream& out, const SuiteResult& suite, const RunConfig& config);

}  // namespace ostrowski
