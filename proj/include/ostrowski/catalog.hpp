#pragma once

// Bound-id driven evaluation: a CaseSpec names a bound, the functions involved
// and how the seminorm is obtained; evaluate_bound turns it into a BoundReport.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ostrowski/bounds.hpp"
#include "ostrowski/supnorm.hpp"

namespace ostrowski {

struct CaseSpec {
    std::string name;
    std::string bound_id;
    std::string f = "t";
    /// Comparison function; empty selects the bound's own (t for the general forms).
    std::string g;
    /// Weight for 4.x bounds; empty means w = 1.
    std::string w;
    double a = 0.0;
    double b = 1.0;
    /// A number, "a", "b", "midpoint", "median", "sweep:n" or "random:n".
    std::string x = "midpoint";
    double p = 1.0;
    /// Analytic seminorm overrides; when absent the seminorm is sampled.
    std::optional<double> norm;
    std::optional<double> norm_left;
    std::optional<double> norm_right;
    Tolerance tol;
    std::optional<double> rel_tol;
    std::optional<std::size_t> grid;
    /// Sample the hypothesis |f'| <= norm * envelope when a norm is supplied.
    bool check_hypothesis = true;
};

struct EvalSettings {
    double rel_tol = 1e-13;
    std::size_t grid = kDefaultSupGrid;
};

const std::vector<std::string>& bound_ids();
bool is_known_bound(const std::string& id);
bool is_weighted_bound(const std::string& id);
bool is_split_bound(const std::string& id);
/// Bounds evaluated at a fixed node (midpoint or weight median) regardless of x.
std::optional<std::string> forced_node(const std::string& id);
/// One-line description used in usage text.
std::string describe_bound(const std::string& id);

/// Concrete evaluation points for a case; `seed` drives "random:n".
std::vector<double> resolve_x(const CaseSpec& c, std::uint64_t seed, const EvalSettings& settings = {});

BoundReport evaluate_bound(const CaseSpec& c, double x, const EvalSettings& settings = {});

/// Right-hand side only, at node x, with the seminorms currently implied by c.
double evaluate_rhs(const CaseSpec& c, double x, const EvalSettings& settings = {});

}  // namespace ostrowski
