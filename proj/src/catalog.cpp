#include "ostrowski/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "ostrowski/error.hpp"
#include "ostrowski/weighted.hpp"

namespace ostrowski {

namespace {

struct BoundInfo {
    const char* id;
    const char* summary;
    bool weighted;
    bool split;
    const char* node;  // nullptr, "midpoint" or "median"
};

const BoundInfo kBounds[] = {
    {"1.1", "classic: sup|f'| (b-a) [1/4 + ((x-A)/(b-a))^2]", false, false, nullptr},
    {"1.2", "g = t^p on a positive interval; seminorm sup u^{1-p}|f'(u)|", false, false, nullptr},
    {"1.3", "g = ln t on a positive interval; seminorm sup |u f'(u)|", false, false, nullptr},
    {"1.4", "local power, p > 0; seminorm sup |x-u|^{1-p}|f'(u)|", false, false, nullptr},
    {"2.2", "general comparison function g; seminorm sup |f'/g'|", false, false, nullptr},
    {"2.5", "general g at the midpoint", false, false, "midpoint"},
    {"2.7", "g = e^t; seminorm sup |f'(t)| e^{-t}", false, false, nullptr},
    {"2.10", "g = sin t inside (0, pi/2); seminorm sup |f'|/cos t", false, false, nullptr},
    {"2.13", "g = cos t inside (0, pi/2); seminorm sup |f'|/sin t", false, false, nullptr},
    {"2.15", "general g with separate seminorms on [a,x] and [x,b]", false, true, nullptr},
    {"2.19", "split general g at the midpoint", false, true, "midpoint"},
    {"2.21", "local power split, p > 0", false, true, nullptr},
    {"2.23", "local power split at the midpoint", false, true, "midpoint"},
    {"3.1", "midpoint, envelope M t^{p-1} on each half", false, true, "midpoint"},
    {"3.3", "midpoint, constant envelope on each half", false, true, "midpoint"},
    {"3.5", "midpoint, envelope M t^{-2} on each half", false, true, "midpoint"},
    {"3.7", "midpoint, envelope M t^{-1} on each half", false, true, "midpoint"},
    {"4.2", "weighted, general g", true, false, nullptr},
    {"4.6", "weighted, at the weight median", true, false, "median"},
    {"4.7", "weighted split", true, true, nullptr},
};

const BoundInfo& info(const std::string& id) {
    for (const auto& b : kBounds) {
        if (id == b.id) return b;
    }
    throw PreconditionError("unknown bound id '" + id + "'");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw PreconditionError("invalid x value '" + text + "'");
    }
    return v;
}

std::size_t parse_count(const std::string& text, const std::string& spec) {
    std::size_t n = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || n == 0) {
        throw PreconditionError("invalid x value '" + spec + "'");
    }
    return n;
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

using Envelope = std::function<double(double)>;

class Evaluator {
public:
    Evaluator(const CaseSpec& c, const EvalSettings& s)
        : c_(c),
          iv_(c.a, c.b),
          f_(FunctionSpec::parse(c.f)),
          rel_tol_(c.rel_tol.value_or(s.rel_tol)),
          grid_(c.grid.value_or(s.grid)) {}

    BoundReport run(double x) {
        const BoundInfo& bi = info(c_.bound_id);
        iv_.require_contains(x, "bound evaluation point");
        if (bi.weighted) {
            weight_.emplace(FunctionSpec::parse(c_.w.empty() ? "1" : c_.w), iv_, rel_tol_);
            if (bi.node && std::string(bi.node) == "median") x = find_weight_median(*weight_);
        } else if (bi.node) {
            x = iv_.midpoint();
        }
        const std::string& id = c_.bound_id;
        double rhs = 0.0;

        if (id == "1.1") {
            left_ = single([&] { return sup_abs_derivative(f_, iv_, grid_); }, one(), "|f'| <= M");
            rhs = classic_ostrowski(left_->value, iv_, x);
        } else if (id == "1.2") {
            iv_.require_positive("bound 1.2");
            const double p = c_.p;
            left_ = single([&] { return power_seminorm(f_, iv_, p, grid_); },
                           [p](double t) { return std::pow(t, p - 1.0); }, "|f'(t)| <= K t^{p-1}");
            rhs = power_bound(iv_, x, p, left_->value);
        } else if (id == "1.3") {
            iv_.require_positive("bound 1.3");
            left_ = single([&] { return log_seminorm(f_, iv_, grid_); }, [](double t) { return 1.0 / t; },
                           "|f'(t)| <= P/t");
            rhs = log_bound(iv_, x, left_->value);
        } else if (id == "1.4") {
            require_local_p();
            if (c_.norm) {
                left_ = single([] { return SupEstimate{}; }, local_envelope(x), "|f'(t)| <= M |x-t|^{p-1}");
            } else {
                std::optional<SupEstimate> lo = local_side(iv_.a, x, x);
                std::optional<SupEstimate> hi = local_side(x, iv_.b, x);
                if (lo && (!hi || lo->value >= hi->value)) {
                    left_ = lo;
                } else {
                    left_ = hi;
                }
                left_->interval = iv_;
            }
            rhs = symmetric_local_power_bound(iv_, x, c_.p, left_->value);
        } else if (id == "2.2" || id == "2.5") {
            const FunctionSpec g = comparison();
            left_ = single([&] { return sup_ratio(f_, g, iv_, grid_); }, abs_derivative(g), "|f'| <= norm |g'|");
            rhs = id == "2.2" ? general_bound(g, iv_, x, left_->value, rel_tol_)
                              : midpoint_bound(g, iv_, left_->value, rel_tol_);
        } else if (id == "2.7") {
            fixed_comparison("exp(t)");
            const FunctionSpec g = FunctionSpec::parse("exp(t)");
            left_ = single([&] { return sup_ratio(f_, g, iv_, grid_); }, [](double t) { return std::exp(t); },
                           "|f'(t)| <= gamma e^t");
            rhs = exp_bound(iv_, x, left_->value);
        } else if (id == "2.10") {
            iv_.require_quarter_turn("bound 2.10");
            fixed_comparison("sin(t)");
            const FunctionSpec g = FunctionSpec::parse("sin(t)");
            left_ = single([&] { return sup_ratio(f_, g, iv_, grid_); }, [](double t) { return std::cos(t); },
                           "|f'(t)| <= gamma cos t");
            rhs = cos_bound(iv_, x, left_->value);
        } else if (id == "2.13") {
            iv_.require_quarter_turn("bound 2.13");
            fixed_comparison("cos(t)");
            const FunctionSpec g = FunctionSpec::parse("cos(t)");
            left_ = single([&] { return sup_ratio(f_, g, iv_, grid_); }, [](double t) { return std::sin(t); },
                           "|f'(t)| <= gamma sin t");
            rhs = sin_bound(iv_, x, left_->value);
        } else if (id == "2.15" || id == "2.19") {
            const FunctionSpec g = comparison();
            halves(x, [&](const Interval& part) { return sup_ratio(f_, g, part, grid_); }, abs_derivative(g),
                   "|f'| <= norm |g'|");
            rhs = id == "2.15" ? split_bound(g, iv_, x, left_->value, right_->value, rel_tol_)
                               : split_midpoint_bound(g, iv_, left_->value, right_->value, rel_tol_);
        } else if (id == "2.21" || id == "2.23") {
            require_local_p();
            if (c_.norm || c_.norm_left || c_.norm_right) {
                halves(x, [](const Interval&) { return SupEstimate{}; }, local_envelope(x),
                       "|f'(t)| <= M |x-t|^{p-1}");
            } else {
                left_ = local_side(iv_.a, x, x);
                right_ = local_side(x, iv_.b, x);
                if (!left_) left_ = SupEstimate{0.0, x, Provenance::Analytic, iv_};
                if (!right_) right_ = SupEstimate{0.0, x, Provenance::Analytic, iv_};
            }
            rhs = id == "2.21" ? local_power_bound(iv_, x, c_.p, left_->value, right_->value)
                               : local_power_midpoint_bound(iv_, c_.p, left_->value, right_->value);
        } else if (id == "3.1") {
            iv_.require_positive("bound 3.1");
            const double p = c_.p;
            if (!std::isfinite(p) || p == 0.0) throw PreconditionError("bound 3.1 requires finite p != 0");
            halves(x, [&](const Interval& part) { return power_seminorm(f_, part, p, grid_); },
                   [p](double t) { return std::pow(t, p - 1.0); }, "|f'(t)| <= M t^{p-1}");
            rhs = midpoint_power_bound(iv_, p, left_->value, right_->value);
        } else if (id == "3.3") {
            halves(x, [&](const Interval& part) { return sup_abs_derivative(f_, part, grid_); }, one(),
                   "|f'| <= N");
            rhs = midpoint_linear_bound(iv_, left_->value, right_->value);
        } else if (id == "3.5") {
            iv_.require_positive("bound 3.5");
            halves(x, [&](const Interval& part) { return power_seminorm(f_, part, -1.0, grid_); },
                   [](double t) { return 1.0 / (t * t); }, "|f'(t)| <= M t^{-2}");
            rhs = midpoint_reciprocal_bound(iv_, left_->value, right_->value);
        } else if (id == "3.7") {
            iv_.require_positive("bound 3.7");
            halves(x, [&](const Interval& part) { return log_seminorm(f_, part, grid_); },
                   [](double t) { return 1.0 / t; }, "|f'(t)| <= M/t");
            rhs = midpoint_log_bound(iv_, left_->value, right_->value);
        } else if (id == "4.2" || id == "4.6") {
            const FunctionSpec g = comparison();
            left_ = single([&] { return sup_ratio(f_, g, iv_, grid_); }, abs_derivative(g), "|f'| <= norm |g'|");
            rhs = id == "4.2" ? weighted_bound(g, *weight_, x, left_->value)
                              : weighted_median_bound(g, *weight_, left_->value);
        } else if (id == "4.7") {
            const FunctionSpec g = comparison();
            halves(x, [&](const Interval& part) { return sup_ratio(f_, g, part, grid_); }, abs_derivative(g),
                   "|f'| <= norm |g'|");
            rhs = weighted_split_bound(g, *weight_, x, left_->value, right_->value);
        }

        const double lhs = weight_ ? weighted_lhs(f_, *weight_, x) : ostrowski_lhs(f_, iv_, x, rel_tol_);
        BoundReport r = make_report(c_.bound_id, lhs, rhs, *left_, x, iv_);
        r.seminorm_right = right_;
        r.warnings = std::move(warnings_);
        r.inputs = inputs();
        return r;
    }

private:
    static Envelope one() {
        return [](double) { return 1.0; };
    }

    Envelope abs_derivative(const FunctionSpec& g) const {
        return [g](double t) { return std::fabs(g.derivative(t)); };
    }

    Envelope local_envelope(double x) const {
        const double e = c_.p - 1.0;
        return [x, e](double t) { return std::pow(std::fabs(x - t), e); };
    }

    FunctionSpec comparison() const { return FunctionSpec::parse(c_.g.empty() ? "t" : c_.g); }

    void fixed_comparison(const char* g) {
        if (!c_.g.empty() && FunctionSpec::parse(c_.g).serialize() != FunctionSpec::parse(g).serialize()) {
            warnings_.push_back(std::string("bound ") + c_.bound_id + " uses g = " + g + "; supplied g ignored");
        }
        effective_g_ = g;
    }

    void require_local_p() const {
        if (!std::isfinite(c_.p) || !(c_.p > 0.0)) {
            throw PreconditionError("bound " + c_.bound_id + " requires p > 0");
        }
    }

    std::optional<SupEstimate> local_side(double lo, double hi, double x) const {
        if (!(lo < hi)) return std::nullopt;
        const double e = 1.0 - c_.p;
        return sampled_sup([&](double t) { return f_.derivative(t) * std::pow(std::fabs(x - t), e); },
                           Interval(lo, hi), grid_);
    }

    std::optional<SupEstimate> single(const std::function<SupEstimate()>& sampler, const Envelope& envelope,
                                      const std::string& label) {
        if (!c_.norm) return sampler();
        SupEstimate est = SupEstimate::analytic(*c_.norm, iv_);
        if (c_.check_hypothesis) append(check_envelope(f_, iv_, envelope, *c_.norm, label));
        return est;
    }

    void halves(double x, const std::function<SupEstimate(const Interval&)>& sampler, const Envelope& envelope,
                const std::string& label) {
        const std::optional<double> lo_norm = c_.norm_left ? c_.norm_left : c_.norm;
        const std::optional<double> hi_norm = c_.norm_right ? c_.norm_right : c_.norm;
        left_ = half(iv_.a, x, x, lo_norm, sampler, envelope, label + " on [a,x]");
        right_ = half(x, iv_.b, x, hi_norm, sampler, envelope, label + " on [x,b]");
    }

    SupEstimate half(double lo, double hi, double x, const std::optional<double>& norm,
                     const std::function<SupEstimate(const Interval&)>& sampler, const Envelope& envelope,
                     const std::string& label) {
        if (!(lo < hi)) {
            return SupEstimate{norm.value_or(0.0), x, Provenance::Analytic, iv_};
        }
        const Interval part(lo, hi);
        if (!norm) return sampler(part);
        SupEstimate est = SupEstimate::analytic(*norm, part);
        if (c_.check_hypothesis) append(check_envelope(f_, part, envelope, *norm, label));
        return est;
    }

    void append(std::vector<std::string> w) {
        for (auto& s : w) warnings_.push_back(std::move(s));
    }

    std::map<std::string, std::string> inputs() const {
        std::map<std::string, std::string> in;
        in["f"] = c_.f;
        const BoundInfo& bi = info(c_.bound_id);
        if (effective_g_) {
            in["g"] = *effective_g_;
        } else if (c_.bound_id.rfind("2.", 0) == 0 || bi.weighted) {
            if (c_.bound_id != "2.21" && c_.bound_id != "2.23") in["g"] = c_.g.empty() ? "t" : c_.g;
        }
        if (bi.weighted) in["w"] = c_.w.empty() ? "1" : c_.w;
        const std::string& id = c_.bound_id;
        if (id == "1.2" || id == "1.4" || id == "2.21" || id == "2.23" || id == "3.1") in["p"] = fmt(c_.p);
        in["x_spec"] = c_.x;
        const bool analytic = c_.norm || c_.norm_left || c_.norm_right;
        in["seminorm_mode"] = analytic ? "analytic" : "sampled";
        if (c_.norm) in["norm"] = fmt(*c_.norm);
        if (c_.norm_left) in["norm_left"] = fmt(*c_.norm_left);
        if (c_.norm_right) in["norm_right"] = fmt(*c_.norm_right);
        in["grid"] = std::to_string(grid_);
        in["rel_tol"] = fmt(rel_tol_);
        if (!c_.name.empty()) in["name"] = c_.name;
        return in;
    }

    const CaseSpec& c_;
    Interval iv_;
    FunctionSpec f_;
    double rel_tol_;
    std::size_t grid_;
    std::optional<WeightSpec> weight_;
    std::optional<SupEstimate> left_;
    std::optional<SupEstimate> right_;
    std::optional<std::string> effective_g_;
    std::vector<std::string> warnings_;
};

}  // namespace

const std::vector<std::string>& bound_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& b : kBounds) v.emplace_back(b.id);
        return v;
    }();
    return ids;
}

bool is_known_bound(const std::string& id) {
    return std::find(bound_ids().begin(), bound_ids().end(), id) != bound_ids().end();
}

bool is_weighted_bound(const std::string& id) { return info(id).weighted; }
bool is_split_bound(const std::string& id) { return info(id).split; }

std::optional<std::string> forced_node(const std::string& id) {
    const BoundInfo& bi = info(id);
    if (!bi.node) return std::nullopt;
    return std::string(bi.node);
}

std::string describe_bound(const std::string& id) { return info(id).summary; }

std::vector<double> resolve_x(const CaseSpec& c, std::uint64_t seed, const EvalSettings& settings) {
    const Interval iv(c.a, c.b);
    const BoundInfo& bi = info(c.bound_id);
    if (bi.node) {
        if (std::string(bi.node) == "midpoint") return {iv.midpoint()};
        const WeightSpec w(FunctionSpec::parse(c.w.empty() ? "1" : c.w), iv, c.rel_tol.value_or(settings.rel_tol));
        return {find_weight_median(w)};
    }
    const std::string& s = c.x;
    if (s == "midpoint") return {iv.midpoint()};
    if (s == "a") return {iv.a};
    if (s == "b") return {iv.b};
    if (s == "median") {
        if (!bi.weighted) throw PreconditionError("x = median needs a weighted bound");
        const WeightSpec w(FunctionSpec::parse(c.w.empty() ? "1" : c.w), iv, c.rel_tol.value_or(settings.rel_tol));
        return {find_weight_median(w)};
    }
    if (s.rfind("sweep:", 0) == 0) {
        const std::size_t n = parse_count(s.substr(6), s);
        if (n == 1) return {iv.midpoint()};
        std::vector<double> xs(n);
        for (std::size_t k = 0; k < n; ++k) {
            xs[k] = k + 1 == n ? iv.b : iv.a + iv.length() * static_cast<double>(k) / static_cast<double>(n - 1);
        }
        return xs;
    }
    if (s.rfind("random:", 0) == 0) {
        const std::size_t n = parse_count(s.substr(7), s);
        std::mt19937_64 rng(seed);
        std::vector<double> xs(n);
        for (auto& x : xs) x = std::min(iv.b, iv.a + iv.length() * unit_uniform(rng));
        return xs;
    }
    const double x = parse_number(s);
    iv.require_contains(x, "x");
    return {x};
}

BoundReport evaluate_bound(const CaseSpec& c, double x, const EvalSettings& settings) {
    Evaluator ev(c, settings);
    return ev.run(x);
}

double evaluate_rhs(const CaseSpec& c, double x, const EvalSettings& settings) {
    return evaluate_bound(c, x, settings).rhs;
}

}  // namespace ostrowski
