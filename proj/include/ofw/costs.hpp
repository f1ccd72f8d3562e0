#pragma once

#include <cstdint>
#include <variant>

#include "ofw/atoms.hpp"
#include "ofw/schedule.hpp"

namespace ofw {

// f(x) = |x - target|^2
struct QuadraticCost {
    VectorXd target;
};

// f(x) = sum_i |x_i - target_i|
struct AbsoluteCost {
    VectorXd target;
};

// f(x) = grad . x
struct LinearCost {
    VectorXd grad;
};

// f(X) = (X(row, col) - rating)^2 on an m x n matrix domain; cols is kept
// so the cost can be evaluated on a row-major flattened point.
struct MatrixEntryCost {
    Index row = 0;
    Index col = 0;
    double rating = 0.0;
    Index cols = 0;
};

using CostEvent = std::variant<QuadraticCost, AbsoluteCost, LinearCost, MatrixEntryCost>;

double cost_value(const CostEvent& f, const VectorXd& x);
// Subgradient; the kink of |.| gets 0.
VectorXd cost_subgradient(const CostEvent& f, const VectorXd& x);

// --- delta-smoothing, f_hat(x) = E_{u in unit ball}[f(x + delta u)] ---

// 1D closed forms for the absolute value (exact ball smoothing in 1D).
double smoothed_abs_value_1d(double z, double delta);
double smoothed_abs_grad_1d(double z, double delta);  // clamp(z/delta, -1, 1)

// Per-coordinate closed-form smoothing of the Absolute family.
double smoothed_abs_value(const VectorXd& x, const VectorXd& target, double delta);
VectorXd smoothed_abs_grad(const VectorXd& x, const VectorXd& target, double delta);

// Monte Carlo smoothed value with u uniform in the unit ball; the
// Absolute family uses its closed form instead of sampling.
double smoothed_value(const CostEvent& f, const VectorXd& x, double delta, int samples,
                      std::uint64_t seed);

// delta_t = sqrt(n) D t^{-1/3} and a seed for any sampling the smoothed
// path needs.
struct SmoothingConfig {
    int dim = 0;
    double D = 0.0;
    int mc_samples = 64;
    std::uint64_t seed = 0;

    double delta(int t) const;
};

}  // namespace ofw
