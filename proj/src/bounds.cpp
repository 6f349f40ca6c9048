#include "ostrowski/bounds.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "ostrowski/error.hpp"
#include "ostrowski/means.hpp"

namespace ostrowski {

namespace {

void require_seminorm(double m, const char* what) {
    if (!std::isfinite(m) || m < 0.0) {
        throw PreconditionError(std::string(what) + ": seminorm constants must be finite and non-negative");
    }
}

// int_lo^hi (g(t) - c) dt; subtracting g's value at the node first keeps the
// small differences these bounds are made of.
double centered(const FunctionSpec& g, double c, double lo, double hi, double rel_tol) {
    if (lo == hi) return 0.0;
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    opts.abs_floor = 0.0;
    return integrate([&](double t) { return g.eval(t) - c; }, lo, hi, opts).value;
}

}  // namespace

bool BoundReport::passes(const Tolerance& tol) const {
    if (!std::isfinite(lhs) || std::isnan(rhs)) return false;
    return lhs <= rhs * (1.0 + tol.rel) + tol.abs;
}

BoundReport make_report(std::string bound_id, double lhs, double rhs, const SupEstimate& seminorm, double x,
                        const Interval& interval) {
    BoundReport r;
    r.bound_id = std::move(bound_id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    if (rhs == 0.0) {
        r.ratio = lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
        r.ratio = lhs / rhs;
    }
    r.seminorm = seminorm;
    r.x = x;
    r.a = interval.a;
    r.b = interval.b;
    return r;
}

double ostrowski_lhs(const FunctionSpec& f, const Interval& interval, double x, double rel_tol) {
    interval.require_contains(x, "ostrowski_lhs");
    const std::array<double, 1> kink{x};
    const double average = integrate(f, interval.a, interval.b, rel_tol, kink).value / interval.length();
    return std::fabs(f.eval(x) - average);
}

double classic_ostrowski(double sup_derivative, const Interval& interval, double x) {
    require_seminorm(sup_derivative, "classic_ostrowski");
    interval.require_contains(x, "classic_ostrowski");
    const double len = interval.length();
    const double offset = (x - interval.midpoint()) / len;
    return (0.25 + offset * offset) * len * sup_derivative;
}

double general_bound(const FunctionSpec& g, const Interval& interval, double x, double norm, double rel_tol) {
    require_seminorm(norm, "general_bound");
    interval.require_contains(x, "general_bound");
    const double len = interval.length();
    const double gx = g.eval(x);
    const double core = (centered(g, gx, x, interval.b, rel_tol) - centered(g, gx, interval.a, x, rel_tol)) / len;
    return std::fabs(core) * norm;
}

double midpoint_bound(const FunctionSpec& g, const Interval& interval, double norm, double rel_tol) {
    require_seminorm(norm, "midpoint_bound");
    const double mid = interval.midpoint();
    const double gm = g.eval(mid);
    const double right = centered(g, gm, mid, interval.b, rel_tol);
    const double left = centered(g, gm, interval.a, mid, rel_tol);
    return std::fabs(right - left) / interval.length() * norm;
}

double power_bound(const Interval& interval, double x, double p, double seminorm) {
    interval.require_positive("power_bound");
    interval.require_contains(x, "power_bound");
    require_seminorm(seminorm, "power_bound");
    if (!std::isfinite(p) || p == 0.0) throw PreconditionError("power_bound requires finite p != 0");

    const double a = interval.a;
    const double b = interval.b;
    const double shift = x - interval.midpoint();
    double branch;
    if (p == -1.0) {
        branch = (x - a) * means::inverse_logarithmic(x, a) - (b - x) * means::inverse_logarithmic(b, x) -
                 (2.0 / x) * shift;
    } else {
        const double increasing = 2.0 * std::pow(x, p) * shift + (b - x) * means::p_logarithmic_pow(p, b, x) -
                                  (x - a) * means::p_logarithmic_pow(p, x, a);
        branch = p > 0.0 ? increasing : -increasing;
    }
    return seminorm / (std::fabs(p) * interval.length()) * branch;
}

double log_bound(const Interval& interval, double x, double seminorm) {
    interval.require_positive("log_bound");
    interval.require_contains(x, "log_bound");
    require_seminorm(seminorm, "log_bound");
    const double a = interval.a;
    const double b = interval.b;
    const double right = x < b ? (b - x) * means::log_identric(x, b) : 0.0;
    const double left = x > a ? (x - a) * means::log_identric(a, x) : 0.0;
    return seminorm / interval.length() * (right - left + 2.0 * (x - interval.midpoint()) * std::log(x));
}

double exp_bound(const Interval& interval, double x, double gamma) {
    interval.require_contains(x, "exp_bound");
    require_seminorm(gamma, "exp_bound");
    const double a = interval.a;
    const double b = interval.b;
    const double len = interval.length();
    const double core = 2.0 * ((x - interval.midpoint()) / len) * std::exp(x) +
                        ((b - x) * means::exponential(x, b) - (x - a) * means::exponential(a, x)) / len;
    return gamma * std::fabs(core);
}

double exp_midpoint_bound(const Interval& interval, double gamma) {
    require_seminorm(gamma, "exp_midpoint_bound");
    const double mid = interval.midpoint();
    return 0.5 * std::fabs(means::exponential(mid, interval.b) - means::exponential(interval.a, mid)) * gamma;
}

double cos_bound(const Interval& interval, double x, double gamma) {
    interval.require_quarter_turn("cos_bound");
    interval.require_contains(x, "cos_bound");
    require_seminorm(gamma, "cos_bound");
    const double a = interval.a;
    const double b = interval.b;
    const double len = interval.length();
    const double core = 2.0 * ((x - interval.midpoint()) / len) * std::sin(x) +
                        ((x - a) * means::cos_mean(a, x) - (b - x) * means::cos_mean(x, b)) / len;
    return gamma * std::fabs(core);
}

double cos_midpoint_bound(const Interval& interval, double gamma) {
    interval.require_quarter_turn("cos_midpoint_bound");
    require_seminorm(gamma, "cos_midpoint_bound");
    const double mid = interval.midpoint();
    return 0.5 * std::fabs(means::cos_mean(interval.a, mid) - means::cos_mean(mid, interval.b)) * gamma;
}

double sin_bound(const Interval& interval, double x, double gamma) {
    interval.require_quarter_turn("sin_bound");
    interval.require_contains(x, "sin_bound");
    require_seminorm(gamma, "sin_bound");
    const double a = interval.a;
    const double b = interval.b;
    const double len = interval.length();
    const double core = 2.0 * ((x - interval.midpoint()) / len) * std::cos(x) +
                        ((b - x) * means::sin_mean(x, b) - (x - a) * means::sin_mean(a, x)) / len;
    return gamma * std::fabs(core);
}

double sin_midpoint_bound(const Interval& interval, double gamma) {
    interval.require_quarter_turn("sin_midpoint_bound");
    require_seminorm(gamma, "sin_midpoint_bound");
    const double mid = interval.midpoint();
    return 0.5 * std::fabs(means::sin_mean(mid, interval.b) - means::sin_mean(interval.a, mid)) * gamma;
}

double split_bound(const FunctionSpec& g, const Interval& interval, double x, double norm_left, double norm_right,
                   double rel_tol) {
    interval.require_contains(x, "split_bound");
    require_seminorm(norm_left, "split_bound");
    require_seminorm(norm_right, "split_bound");
    const double gx = g.eval(x);
    const double left = std::fabs(centered(g, gx, interval.a, x, rel_tol));
    const double right = std::fabs(centered(g, gx, x, interval.b, rel_tol));
    return (left * norm_left + right * norm_right) / interval.length();
}

double split_midpoint_bound(const FunctionSpec& g, const Interval& interval, double norm_left, double norm_right,
                            double rel_tol) {
    require_seminorm(norm_left, "split_midpoint_bound");
    require_seminorm(norm_right, "split_midpoint_bound");
    const double mid = interval.midpoint();
    const double gm = g.eval(mid);
    const double scale = 2.0 / interval.length();
    const double left = scale * std::fabs(centered(g, gm, interval.a, mid, rel_tol));
    const double right = scale * std::fabs(centered(g, gm, mid, interval.b, rel_tol));
    return 0.5 * (left * norm_left + right * norm_right);
}

double local_power_bound(const Interval& interval, double x, double p, double m_left, double m_right) {
    interval.require_contains(x, "local_power_bound");
    require_seminorm(m_left, "local_power_bound");
    require_seminorm(m_right, "local_power_bound");
    if (!std::isfinite(p) || !(p > 0.0)) throw PreconditionError("local_power_bound requires p > 0");
    const double lhs_part = m_left * std::pow(x - interval.a, p + 1.0);
    const double rhs_part = m_right * std::pow(interval.b - x, p + 1.0);
    return (lhs_part + rhs_part) / (p * (p + 1.0) * interval.length());
}

double local_power_midpoint_bound(const Interval& interval, double p, double m_left, double m_right) {
    require_seminorm(m_left, "local_power_midpoint_bound");
    require_seminorm(m_right, "local_power_midpoint_bound");
    if (!std::isfinite(p) || !(p > 0.0)) throw PreconditionError("local_power_midpoint_bound requires p > 0");
    return std::pow(interval.length(), p) * (m_left + m_right) / (std::pow(2.0, p + 1.0) * p * (p + 1.0));
}

double symmetric_local_power_bound(const Interval& interval, double x, double p, double m) {
    interval.require_contains(x, "symmetric_local_power_bound");
    require_seminorm(m, "symmetric_local_power_bound");
    if (!std::isfinite(p) || !(p > 0.0)) throw PreconditionError("symmetric_local_power_bound requires p > 0");
    const double spread = std::pow(x - interval.a, p + 1.0) + std::pow(interval.b - x, p + 1.0);
    return spread * m / (p * (p + 1.0) * interval.length());
}

double midpoint_power_bound(const Interval& interval, double p, double m_left, double m_right) {
    interval.require_positive("midpoint_power_bound");
    require_seminorm(m_left, "midpoint_power_bound");
    require_seminorm(m_right, "midpoint_power_bound");
    if (!std::isfinite(p) || p == 0.0 || p == -1.0) {
        throw PreconditionError("midpoint_power_bound requires p not in {-1, 0}");
    }
    const double mid = interval.midpoint();
    const double mid_pow = std::pow(mid, p);
    const double left = std::fabs(mid_pow - means::p_logarithmic_pow(p, interval.a, mid));
    const double right = std::fabs(means::p_logarithmic_pow(p, mid, interval.b) - mid_pow);
    return (m_left * left + m_right * right) / (2.0 * std::fabs(p));
}

double midpoint_linear_bound(const Interval& interval, double n_left, double n_right) {
    require_seminorm(n_left, "midpoint_linear_bound");
    require_seminorm(n_right, "midpoint_linear_bound");
    return (n_left + n_right) * interval.length() / 8.0;
}

double midpoint_reciprocal_bound(const Interval& interval, double m_left, double m_right) {
    interval.require_positive("midpoint_reciprocal_bound");
    require_seminorm(m_left, "midpoint_reciprocal_bound");
    require_seminorm(m_right, "midpoint_reciprocal_bound");
    const double mid = interval.midpoint();
    const double l_left = means::logarithmic(interval.a, mid);
    const double l_right = means::logarithmic(mid, interval.b);
    return 0.5 * (m_left * (mid - l_left) / (l_left * mid) + m_right * (l_right - mid) / (l_right * mid));
}

double midpoint_log_bound(const Interval& interval, double m_left, double m_right) {
    interval.require_positive("midpoint_log_bound");
    require_seminorm(m_left, "midpoint_log_bound");
    require_seminorm(m_right, "midpoint_log_bound");
    const double mid = interval.midpoint();
    const double log_mid = std::log(mid);
    return 0.5 * (m_left * (log_mid - means::log_identric(interval.a, mid)) +
                  m_right * (means::log_identric(mid, interval.b) - log_mid));
}

double midpoint_log_bound_geometric_form(const Interval& interval, double m_left, double m_right) {
    interval.require_positive("midpoint_log_bound");
    const double mid = interval.midpoint();
    const double lower = std::pow(mid / means::identric(interval.a, mid), m_left);
    const double upper = std::pow(means::identric(mid, interval.b) / mid, m_right);
    return std::log(means::geometric(lower, upper));
}

std::vector<std::string> check_envelope(const FunctionSpec& f, const Interval& interval,
                                        const std::function<double(double)>& envelope, double gamma,
                                        const std::string& label) {
    constexpr int kSamples = 4096;
    std::vector<std::string> warnings;
    int violations = 0;
    double first = 0.0;
    double worst_excess = 0.0;
    for (int i = 0; i <= kSamples; ++i) {
        double t = interval.a + interval.length() * i / kSamples;
        if (i == 0) t += 1e-9 * interval.length();
        if (i == kSamples) t = interval.b - 1e-9 * interval.length();
        double fp;
        try {
            fp = std::fabs(f.derivative(t));
        } catch (const Error&) {
            continue;
        }
        const double cap = gamma * envelope(t);
        if (fp > cap * (1.0 + 1e-9) + 1e-12) {
            if (violations == 0) first = t;
            ++violations;
            worst_excess = std::max(worst_excess, fp - cap);
        }
    }
    if (violations > 0) {
        std::ostringstream os;
        os.precision(17);
        os << "hypothesis " << label << " violated at " << violations << " of " << kSamples + 1
           << " samples (first at t=" << first << ", worst excess " << worst_excess << ")";
        warnings.push_back(os.str());
    }
    return warnings;
}

}  // namespace ostrowski
