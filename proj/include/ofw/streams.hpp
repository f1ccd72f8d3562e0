#pragma once

#include <optional>

#include "ofw/costs.hpp"
#include "ofw/oracles.hpp"

namespace ofw {

enum class StreamFamily { Quadratic, Absolute, LinearAdversarial, MatrixEntry };
enum class AdvPattern { Alternating, RandomSign, Drifting };

AdvPattern pattern_from_name(const std::string& name);

struct StreamSpec {
    StreamFamily family = StreamFamily::Quadratic;
    int horizon = 0;
    std::uint64_t seed = 0;

    // Quadratic: targets uniform in a ball of target_radius around center
    // (center defaults to zero, sized from the domain).
    double target_radius = 0.5;
    VectorXd center;
    // When set, quadratic targets are instead uniform on {+two_point, -two_point}.
    VectorXd two_point;

    // Absolute: target coordinates are +abs_level with probability
    // abs_bias, else -abs_level, i.i.d. A bias != 1/2 gives f* a unique
    // minimizer (the per-coordinate median +abs_level).
    double abs_level = 0.5;
    double abs_bias = 0.7;

    // LinearAdversarial: |g_t| = grad_norm.
    AdvPattern pattern = AdvPattern::Alternating;
    double grad_norm = 1.0;

    // MatrixEntry: planted rank-`rank` matrix with N(0,1) factors.
    int rank = 5;
};

struct GeneratedStream {
    std::vector<CostEvent> events;
    CostMetadata meta;  // constants valid on the generating domain

    // Closed-form description of f* = E[f_t] for the stochastic families.
    std::optional<VectorXd> mean_target;  // Quadratic: E[y]
    std::optional<double> target_var;     // Quadratic: E|y - E[y]|^2
    std::optional<double> abs_level;      // Absolute
    std::optional<double> abs_bias;       // Absolute: P(coordinate = +abs_level)

    MatrixXd planted;          // MatrixEntry: the planted matrix
    double planted_trace = 0;  // its trace norm

    // f*(x) for the stochastic families; throws for the others.
    double fstar(const VectorXd& x) const;
};

// Minimizer of f* over a ball domain, in closed form.
VectorXd fstar_argmin(const GeneratedStream& gen, const DomainSpec& domain);

// Deterministic event sequence given the seed; the declared metadata is
// consistent with the closed forms on the given domain.
GeneratedStream gen_stream(const StreamSpec& spec, const DomainSpec& domain);

struct Comparator {
    VectorXd x;
    double value = 0.0;  // F_T(x)
    double gap = 0.0;    // Frank-Wolfe gap bound; value - gap lower-bounds min F_T
};

// Minimizer of F_T over the domain: closed form where one exists
// (quadratic/ball, linear/any), otherwise offline Frank-Wolfe with the
// classic 2/(k+2) step for `iters` iterations (default 10 sqrt(T)).
Comparator best_in_hindsight(const DomainSpec& domain, const std::vector<CostEvent>& prefix,
                             int iters = 0);

// min over the domain of c . x, via the LMO.
double linear_min_value(const DomainSpec& domain, const VectorXd& c);

// Cumulative sum of per-round (loss - comparator loss); fixed comparator.
std::vector<double> regret_of(const std::vector<double>& losses,
                              const std::vector<double>& comparator_losses);

// R_t = sum_{tau<=t} loss_tau - prefix_min_t, where prefix_min_t is the
// best fixed total over the first t rounds.
std::vector<double> regret_of_prefix(const std::vector<double>& losses,
                                     const std::vector<double>& prefix_min_totals);

// Least-squares slope of log(series) vs log(t) over t in [t_lo, t_hi].
double loglog_slope(const std::vector<double>& series, int t_lo, int t_hi);

}  // namespace ofw
