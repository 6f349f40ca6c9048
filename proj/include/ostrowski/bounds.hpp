#pragma once

// Closed-form right-hand sides for one-point approximations of the average
// (1/(b-a)) * integral of f over [a, b], together with the left-hand side
// |f(x) - average| they bound.
//
// Each bound comes from comparing f with a strictly monotone function g:
// |f(x) - f(t)| <= ||f'/g'|| |g(x) - g(t)|, integrated over [a, b]. Choosing
// g = t, t^p, ln t, e^t, sin t, cos t, |x - t|^p gives the specialisations.
//
// Conventions:
//  * local_power_bound divides by (b - a); the midpoint form uses (b - a)^p.
//    Both follow from the symmetric form with envelope |f'| <= M |x - t|^{p-1}.
//  * exp_bound assumes |f'(t)| <= gamma e^t (the envelope that matches g = e^t).
//  * sin_bound / cos_bound and their midpoint forms are wrapped in |.|; with
//    g = cos the unsigned expression is negative.
//  * midpoint_power_bound uses the envelope |f'| <= M t^{p-1} and the factor
//    1/(2|p|); midpoint_linear_bound uses a constant envelope N.
//  * midpoint_log_bound is ln G(.,.) with G the geometric mean.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ostrowski/expr.hpp"
#include "ostrowski/interval.hpp"
#include "ostrowski/quadrature.hpp"
#include "ostrowski/supnorm.hpp"

namespace ostrowski {

struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;
};

struct BoundReport {
    std::string bound_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double ratio = 0.0;
    SupEstimate seminorm;
    /// Second (right-half) seminorm for split bounds.
    std::optional<SupEstimate> seminorm_right;
    double x = 0.0;
    double a = 0.0;
    double b = 1.0;
    std::map<std::string, std::string> inputs;
    std::vector<std::string> warnings;

    bool passes(const Tolerance& tol = {}) const;
};

/// Fills slack and ratio from lhs and rhs (ratio 0 for 0/0, +inf for lhs > 0 = rhs).
BoundReport make_report(std::string bound_id, double lhs, double rhs, const SupEstimate& seminorm, double x,
                        const Interval& interval);

/// |f(x) - (1/(b-a)) * integral of f over [a, b]|.
double ostrowski_lhs(const FunctionSpec& f, const Interval& interval, double x, double rel_tol = 1e-13);

double classic_ostrowski(double sup_derivative, const Interval& interval, double x);

/// |2 (x-A)/(b-a) g(x) + (int_x^b g - int_a^x g)/(b-a)| * norm.
double general_bound(const FunctionSpec& g, const Interval& interval, double x, double norm,
                     double rel_tol = 1e-13);
double midpoint_bound(const FunctionSpec& g, const Interval& interval, double norm, double rel_tol = 1e-13);

/// Comparison function t^p on a positive interval; `seminorm` is sup u^{1-p} |f'(u)|.
double power_bound(const Interval& interval, double x, double p, double seminorm);
/// Comparison function ln t; `seminorm` is sup |u f'(u)|.
double log_bound(const Interval& interval, double x, double seminorm);

double exp_bound(const Interval& interval, double x, double gamma);
double exp_midpoint_bound(const Interval& interval, double gamma);
/// |f'| <= gamma cos t on an interval inside (0, pi/2).
double cos_bound(const Interval& interval, double x, double gamma);
double cos_midpoint_bound(const Interval& interval, double gamma);
/// |f'| <= gamma sin t on an interval inside (0, pi/2).
double sin_bound(const Interval& interval, double x, double gamma);
double sin_midpoint_bound(const Interval& interval, double gamma);

double split_bound(const FunctionSpec& g, const Interval& interval, double x, double norm_left, double norm_right,
                   double rel_tol = 1e-13);
double split_midpoint_bound(const FunctionSpec& g, const Interval& interval, double norm_left, double norm_right,
                            double rel_tol = 1e-13);

double local_power_bound(const Interval& interval, double x, double p, double m_left, double m_right);
double local_power_midpoint_bound(const Interval& interval, double p, double m_left, double m_right);
/// The symmetric form [(x-a)^{p+1} + (b-x)^{p+1}] M / (p (p+1) (b-a)).
double symmetric_local_power_bound(const Interval& interval, double x, double p, double m);

double midpoint_power_bound(const Interval& interval, double p, double m_left, double m_right);
double midpoint_linear_bound(const Interval& interval, double n_left, double n_right);
double midpoint_reciprocal_bound(const Interval& interval, double m_left, double m_right);
double midpoint_log_bound(const Interval& interval, double m_left, double m_right);
/// The same value written as ln G([A/I(a,A)]^{m_left}, [I(A,b)/A]^{m_right}).
double midpoint_log_bound_geometric_form(const Interval& interval, double m_left, double m_right);

/// Samples |f'(t)| <= gamma * envelope(t) at 4096 points; returns a warning per violation run.
std::vector<std::string> check_envelope(const FunctionSpec& f, const Interval& interval,
                                        const std::function<double(double)>& envelope, double gamma,
                                        const std::string& label);

}  // namespace ostrowski
