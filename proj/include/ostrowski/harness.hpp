#pragma once

// Batch verification of the catalogue: suites of CaseSpecs, sharpness scans,
// closed-form versus quadrature consistency, and bound-minimising nodes.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ostrowski/catalog.hpp"
#include "ostrowski/corpus.hpp"

namespace ostrowski {

struct RunConfig {
    std::uint64_t seed = 42;
    double rel_tol = 1e-13;
    std::size_t grid = kDefaultSupGrid;
    /// json, csv or text.
    std::string format = "json";
    /// Worker threads for suites; results do not depend on it.
    unsigned jobs = 1;

    EvalSettings settings() const { return {rel_tol, grid}; }
};

enum class CaseStatus { Pass, Fail, Error };

std::string to_string(CaseStatus s);

struct CaseResult {
    std::size_t case_index = 0;
    std::size_t point_index = 0;
    std::string name;
    std::string bound_id;
    CaseStatus status = CaseStatus::Error;
    std::optional<BoundReport> report;
    std::string error;
    /// max(0, lhs - rhs (1 + tol_rel) - tol_abs).
    double violation = 0.0;
};

/// Errors count as failures; `errors` says how many of them were errors.
struct SuiteSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;
    double worst_ratio = 0.0;
    std::string worst_case;
    double max_violation = 0.0;
    std::string max_violation_case;

    bool all_passed() const { return failed == 0; }
};

struct SuiteResult {
    SuiteSummary summary;
    std::vector<CaseResult> results;
};

double violation(const BoundReport& r, const Tolerance& tol);

/// One result per resolved evaluation point of c.
std::vector<CaseResult> check_case(const CaseSpec& c, const RunConfig& config = {}, std::size_t case_index = 0);

SuiteSummary summarize(const std::vector<CaseResult>& results);

/// Evaluates every case (optionally on config.jobs threads); results keep suite order.
SuiteResult run_suite(const std::vector<CaseSpec>& cases, const RunConfig& config = {});

using CaseFamily = std::function<CaseSpec(std::size_t index, Rng& rng)>;

/// Families with a known equality witness: 1.1 (f = t, x in {a, b}), 1.4
/// (f = |t - x|^p), 2.2 and 4.2 (f = g, x in {a, b}).
CaseFamily builtin_family(const std::string& bound_id);
std::vector<std::string> builtin_family_ids();

struct SharpnessResult {
    SuiteResult suite;
    double max_ratio = 0.0;
    std::string argmax_case;
};

SharpnessResult sharpness_scan(const std::string& bound_id, const CaseFamily& family, std::size_t n,
                               const RunConfig& config = {});

struct ConsistencyItem {
    std::string label;
    std::string bound_id;
    double closed_form = 0.0;
    double oracle = 0.0;
    double rel_error = 0.0;
    bool pass = false;
};

struct ConsistencyResult {
    SuiteSummary summary;
    std::vector<ConsistencyItem> items;
    double max_rel_error = 0.0;
};

/// The p values of the consistency grid.
const std::vector<double>& consistency_exponents();

/// Each closed form against seminorm * (1/M) * integral of w |g(x) - g(t)|,
/// split forms summing one such term per half.
ConsistencyResult consistency_suite(double pass_rel_tol = 1e-8);

struct NodeResult {
    double x = 0.0;
    double rhs = 0.0;
};

/// Grid scan over grid + 1 points followed by golden-section refinement.
NodeResult best_node(const std::function<double(double)>& rhs_of_x, const Interval& interval,
                     std::size_t grid = 1000);

/// best_node over the case's bound. Seminorms that do not depend on x are
/// evaluated once and held fixed.
NodeResult best_node(const CaseSpec& c, const RunConfig& config = {}, std::size_t grid = 1000);

/// Random-corpus inequality suite: n_functions corpus functions, each checked
/// against every applicable bound at n_points nodes (once for fixed-node bounds).
/// Seminorms with a closed form in the corpus are supplied analytically.
std::vector<CaseSpec> inequality_cases(std::uint64_t seed, std::size_t n_functions, std::size_t n_points);

/// Cases where lhs = rhs exactly, for falsification controls.
std::vector<CaseSpec> equality_cases();

}  // namespace ostrowski
