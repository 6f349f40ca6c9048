#pragma once

// Two-argument special means used by the closed-form bounds.
//
//   A(x,y)   = (x+y)/2
//   L(x,y)   = (y-x)/(ln y - ln x)
//   L_p(x,y) = [(y^{p+1} - x^{p+1}) / ((p+1)(y-x))]^{1/p},   p not in {-1, 0}
//   I(x,y)   = (1/e) (y^y / x^x)^{1/(y-x)}
//   E(x,y)   = (e^x - e^y)/(x-y)
//   C(x,y)   = (cos x - cos y)/(x-y)
//   S(x,y)   = (sin x - sin y)/(x-y)
//   G(x,y)   = sqrt(x y)
//
// All are symmetric; on the diagonal they take their limits
// L = L_p = I = G = x, E = e^x, C = -sin x, S = cos x.

#include <string>
#include <string_view>

namespace ostrowski {

enum class MeanTag { Arithmetic, Logarithmic, PLogarithmic, Identric, Exponential, CosMean, SinMean, Geometric };

class MeanKind {
public:
    static MeanKind arithmetic() { return MeanKind(MeanTag::Arithmetic); }
    static MeanKind logarithmic() { return MeanKind(MeanTag::Logarithmic); }
    /// Throws PreconditionError for p in {-1, 0} or non-finite p.
    static MeanKind p_logarithmic(double p);
    static MeanKind identric() { return MeanKind(MeanTag::Identric); }
    static MeanKind exponential() { return MeanKind(MeanTag::Exponential); }
    static MeanKind cos_mean() { return MeanKind(MeanTag::CosMean); }
    static MeanKind sin_mean() { return MeanKind(MeanTag::SinMean); }
    static MeanKind geometric() { return MeanKind(MeanTag::Geometric); }

    /// Accepts A, L, Lp, I, E, C, S, G (case-sensitive), p used only by Lp.
    static MeanKind from_name(std::string_view name, double p = 1.0);

    MeanTag tag() const noexcept { return tag_; }
    double p() const noexcept { return p_; }
    std::string name() const;

private:
    explicit MeanKind(MeanTag tag, double p = 0.0) : tag_(tag), p_(p) {}

    MeanTag tag_;
    double p_;
};

/// Below this separation the closed forms switch to their diagonal expansions.
double diagonal_switch(double x, double y);

double evaluate_mean(const MeanKind& kind, double x, double y);

/// L_p evaluated through a formula that stays accurate as p -> 0 (towards I)
/// and p -> -1 (towards L). p = 0 and p = -1 return I and L exactly.
double mean_limit_check(double p, double x, double y);

namespace means {

double arithmetic(double x, double y);
double logarithmic(double x, double y);
double identric(double x, double y);
double exponential(double x, double y);
double cos_mean(double x, double y);
double sin_mean(double x, double y);
double geometric(double x, double y);
double p_logarithmic(double p, double x, double y);

/// ln I(x,y), i.e. the average of ln t over [x,y].
double log_identric(double x, double y);
/// L_p(x,y)^p, i.e. the average of t^p over [x,y]; valid for every p != -1.
double p_logarithmic_pow(double p, double x, double y);
/// 1/L(x,y), the average of 1/t over [x,y].
double inverse_logarithmic(double x, double y);

}  // namespace means

}  // namespace ostrowski
