#pragma once

#include <optional>
#include <random>

#include "ofw/aggregate.hpp"
#include "ofw/trace.hpp"

namespace ofw {

struct RunConfig {
    int T = 0;
    std::uint64_t seed = 0;
    int mc_samples = 64;
    CostMetadata meta;
    double power_tol = 1e-5;      // trace-norm LMO tolerance
    bool record_iterates = false;  // keep dense x_t history (vector domains)
    // When > 0 on trace-norm domains: every that many rounds, compare 20
    // random cached entries against iterate_entry (untimed; throws on drift).
    int cache_check_every = 0;
};

struct RoundResult {
    SparseIterate x_next;
    BoundaryAtom v;
    double alpha = 0.0;
};

// One Frank-Wolfe step: v = lmo(grad), alpha = t^{-a}, mix.
RoundResult ofw_round(const SparseIterate& x, const VectorXd& grad, const Schedule& schedule,
                      const DomainSpec& domain);

struct SurrogateTerm {
    VectorXd grad;
    double sigma = 0.0;
};

// grad . x + sigma_t |x - x1|^2 with sigma_t = (L/D) t^{-1/4}. Throws
// ContractError if |grad| exceeds the declared Lipschitz constant.
SurrogateTerm make_adversarial_surrogate(const VectorXd& g_t, int t, double L, double D);

// Lazy sampling of the played boundary point: with probability t^{-a} the
// current point is replaced by the round's new vertex. At t = 1 the new
// vertex is always taken.
BoundaryAtom sample_play(const std::optional<BoundaryAtom>& prev_atom,
                         const BoundaryAtom& v_new, int t, const Schedule& schedule,
                         std::mt19937_64& rng);

struct OfwResult {
    RegretTrace trace;
    SparseIterate iterate;               // x_{T+1}
    Schedule schedule;
    std::vector<BoundaryAtom> vertices;  // v_t per round (sampler replay)
    std::vector<double> alphas;          // alpha_t per round
    std::vector<VectorXd> iterates;      // dense x_t, when recorded
};

// The full loop: play x_t, observe f_t, absorb (smoothing the costs in
// the non-smooth setting, replacing them by surrogates in the adversarial
// one), take the Frank-Wolfe step. x1 is the LMO of the all-ones
// direction. cum_regret in the trace is left at zero; the harness fills
// it against its comparator.
OfwResult run_ofw(const DomainSpec& domain, const std::vector<CostEvent>& stream,
                  Setting setting, const RunConfig& config);

}  // namespace ofw
