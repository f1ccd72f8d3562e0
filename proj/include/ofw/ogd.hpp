#pragma once

#include <functional>

#include "ofw/costs.hpp"
#include "ofw/oracles.hpp"
#include "ofw/trace.hpp"

namespace ofw {

// Online Gradient Descent with projections; the comparison baseline.
// Projection oracles exist for simplex, ball, and trace-norm domains only.
struct OgdConfig {
    int T = 0;
    CostMetadata meta;
    // Step size; empty means the default eta_t = D / (L sqrt(t)).
    std::function<double(int)> eta;
    bool record_iterates = false;
};

// Euclidean projection onto the domain (simplex / ball); flow and matroid
// polytopes have no projection oracle here.
VectorXd project_domain(const DomainSpec& domain, const VectorXd& y);

// x_{t+1} = project(x_t - eta_t g_t).
VectorXd ogd_round(const DomainSpec& domain, const VectorXd& x_t, const VectorXd& g_t,
                   double eta_t);

struct OgdResult {
    RegretTrace trace;
    VectorXd final_point;             // flattened row-major for matrix domains
    std::vector<VectorXd> iterates;   // dense x_t, when recorded
};

// Mirror of run_ofw with per-round gradients of the instantaneous cost.
// The trace-norm path stores a dense matrix iterate and does one full SVD
// per round; that cost is the point of the comparison.
OgdResult run_ogd(const DomainSpec& domain, const std::vector<CostEvent>& stream,
                  const OgdConfig& config);

}  // namespace ofw
