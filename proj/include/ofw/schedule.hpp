#pragma once

#include <optional>

#include "ofw/errors.hpp"

namespace ofw {

// Analytic constants of one cost family on a given domain.
struct CostMetadata {
    double L = 0.0;                   // Lipschitz constant, > 0
    std::optional<double> beta;       // smoothness bound, f(x+y) <= f(x) + grad.y + beta|y|^2
    std::optional<double> sigma;      // strong-convexity modulus, same normalization
    int dim = 0;                      // ambient dimension n

    void validate() const;
};

enum class Setting { StochSmooth, StochNonsmooth, Adversarial };

const char* setting_name(Setting s);
Setting setting_from_name(const std::string& name);

// The per-setting parameter bundle: f_t is B t^{-b}-smooth and
// S t^{-s}-strongly convex, the gap obeys Delta_t <= C t^{-d}, and the
// step size is alpha_t = t^{-a}.
struct Schedule {
    double B = 0.0;
    double b = 0.0;
    double S = 0.0;
    double s = 0.0;
    double C = 0.0;
    double d = 0.0;
    double a = 0.0;
    double L = 0.0;
    double D = 0.0;

    // Eager validation; throws ConfigError on any violated range or bound.
    void validate() const;

    double step(int t) const;  // alpha_t = t^{-a}
    double gap_bound(int t) const;  // C t^{-d}
};

// Parameter bundles per setting:
//   StochSmooth:    b=0, d=1/2, a=1/2, C=max{9 D^2 beta, 3 L D}
//   StochNonsmooth: B=sqrt(n) L / D, b=-1/3, d=1/3, a=2/3, C=9 sqrt(n) L D
//   Adversarial:    B=S=L/D, b=s=1/4, d=3/4, a=1/4, C=36 L D
Schedule schedule_from_setting(const CostMetadata& meta, double D, Setting setting);

}  // namespace ofw
