#include "ofw/costs.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ofw {
namespace {

double sign_or_zero(double z) { return z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0); }

// Uniform point in the unit ball: Gaussian direction times U^{1/n} radius.
VectorXd sample_unit_ball(Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    VectorXd u(n);
    double norm2 = 0.0;
    do {
        for (Index i = 0; i < n; ++i) u[i] = gauss(rng);
        norm2 = u.squaredNorm();
    } while (norm2 == 0.0);
    const double radius = std::pow(unif(rng), 1.0 / static_cast<double>(n));
    return u * (radius / std::sqrt(norm2));
}

}  // namespace

double cost_value(const CostEvent& f, const VectorXd& x) {
    return std::visit(
        [&](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, QuadraticCost>) {
                return (x - c.target).squaredNorm();
            } else if constexpr (std::is_same_v<T, AbsoluteCost>) {
                return (x - c.target).cwiseAbs().sum();
            } else if constexpr (std::is_same_v<T, LinearCost>) {
                return c.grad.dot(x);
            } else {
                const double e = x[c.row * c.cols + c.col] - c.rating;
                return e * e;
            }
        },
        f);
}

VectorXd cost_subgradient(const CostEvent& f, const VectorXd& x) {
    return std::visit(
        [&](const auto& c) -> VectorXd {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, QuadraticCost>) {
                return 2.0 * (x - c.target);
            } else if constexpr (std::is_same_v<T, AbsoluteCost>) {
                VectorXd g(x.size());
                for (Index i = 0; i < x.size(); ++i) g[i] = sign_or_zero(x[i] - c.target[i]);
                return g;
            } else if constexpr (std::is_same_v<T, LinearCost>) {
                return c.grad;
            } else {
                VectorXd g = VectorXd::Zero(x.size());
                const Index idx = c.row * c.cols + c.col;
                g[idx] = 2.0 * (x[idx] - c.rating);
                return g;
            }
        },
        f);
}

double smoothed_abs_value_1d(double z, double delta) {
    if (!(delta > 0.0)) throw ParamError("smoothing: delta must be > 0");
    const double az = std::abs(z);
    if (az <= delta) return (z * z + delta * delta) / (2.0 * delta);
    return az;
}

double smoothed_abs_grad_1d(double z, double delta) {
    if (!(delta > 0.0)) throw ParamError("smoothing: delta must be > 0");
    return std::clamp(z / delta, -1.0, 1.0);
}

double smoothed_abs_value(const VectorXd& x, const VectorXd& target, double delta) {
    double v = 0.0;
    for (Index i = 0; i < x.size(); ++i) v += smoothed_abs_value_1d(x[i] - target[i], delta);
    return v;
}

VectorXd smoothed_abs_grad(const VectorXd& x, const VectorXd& target, double delta) {
    VectorXd g(x.size());
    for (Index i = 0; i < x.size(); ++i) g[i] = smoothed_abs_grad_1d(x[i] - target[i], delta);
    return g;
}

double smoothed_value(const CostEvent& f, const VectorXd& x, double delta, int samples,
                      std::uint64_t seed) {
    if (!(delta > 0.0)) throw ParamError("smoothed_value: delta must be > 0");
    if (samples < 1) throw ParamError("smoothed_value: samples must be >= 1");
    if (const auto* abs = std::get_if<AbsoluteCost>(&f))
        return smoothed_abs_value(x, abs->target, delta);
    std::mt19937_64 rng(seed);
    double acc = 0.0;
    for (int s = 0; s < samples; ++s) {
        VectorXd u = sample_unit_ball(x.size(), rng);
        acc += cost_value(f, x + delta * u);
    }
    return acc / static_cast<double>(samples);
}

double SmoothingConfig::delta(int t) const {
    if (t < 1) throw ParamError("SmoothingConfig: t must be >= 1");
    return std::sqrt(static_cast<double>(dim)) * D *
           std::pow(static_cast<double>(t), -1.0 / 3.0);
}

}  // namespace ofw
