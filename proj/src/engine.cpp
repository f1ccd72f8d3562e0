#include "ofw/engine.hpp"

#include <chrono>
#include <cmath>

namespace ofw {
namespace {

using Clock = std::chrono::steady_clock;

BoundaryAtom initial_vertex(const DomainSpec& domain, double power_tol, std::uint64_t seed) {
    if (const auto* tb = std::get_if<TraceNormBall>(&domain)) {
        DenseMap ones(MatrixXd::Ones(tb->m, tb->n));
        return lmo_trace_ball(*tb, ones, power_tol, seed);
    }
    return lmo_vector_domain(domain, VectorXd::Ones(domain_dim(domain)));
}

AggregateState::Mode mode_for(const CostEvent& first, Setting setting) {
    if (setting == Setting::Adversarial) return AggregateState::Mode::Surrogate;
    if (std::holds_alternative<QuadraticCost>(first)) return AggregateState::Mode::QuadraticMean;
    if (std::holds_alternative<LinearCost>(first)) return AggregateState::Mode::LinearMean;
    if (std::holds_alternative<MatrixEntryCost>(first)) return AggregateState::Mode::MatrixEntry;
    if (std::holds_alternative<AbsoluteCost>(first)) {
        if (setting != Setting::StochNonsmooth)
            throw ConfigError("run_ofw: absolute costs need the non-smooth setting");
        return AggregateState::Mode::SmoothedAbsolute;
    }
    throw ConfigError("run_ofw: unsupported cost family");
}

// Closed-form minimizer gap on the ball, where it exists.
std::optional<double> gap_on_ball(const AggregateState& agg, const DomainSpec& domain,
                                  const VectorXd& x) {
    const auto* ball = std::get_if<Ball>(&domain);
    if (!ball) return std::nullopt;
    if (agg.mode() == AggregateState::Mode::QuadraticMean) {
        const VectorXd xstar = project_ball(agg.mean_target(), ball->radius);
        return agg.quadratic_F(x) - agg.quadratic_F(xstar);
    }
    if (agg.mode() == AggregateState::Mode::Surrogate && agg.mean_sigma() > 0.0) {
        // F_hat is an isotropic quadratic centered at anchor - g/(2 sigma).
        const VectorXd center = agg.anchor() - agg.mean_grad() / (2.0 * agg.mean_sigma());
        const VectorXd xstar = project_ball(center, ball->radius);
        return agg.surrogate_F(x) - agg.surrogate_F(xstar);
    }
    return std::nullopt;
}

}  // namespace

RoundResult ofw_round(const SparseIterate& x, const VectorXd& grad, const Schedule& schedule,
                      const DomainSpec& domain) {
    const int t = x.round;
    const double alpha = schedule.step(t);
    BoundaryAtom v = lmo_vector_domain(domain, grad);
    return RoundResult{iterate_mix(x, v, alpha), std::move(v), alpha};
}

SurrogateTerm make_adversarial_surrogate(const VectorXd& g_t, int t, double L, double D) {
    if (t < 1) throw ParamError("make_adversarial_surrogate: t must be >= 1");
    if (!(L > 0.0 && D > 0.0)) throw ParamError("make_adversarial_surrogate: need L, D > 0");
    if (g_t.norm() > L * (1.0 + 1e-6))
        throw ContractError("make_adversarial_surrogate: subgradient exceeds declared L");
    const double sigma = (L / D) * std::pow(static_cast<double>(t), -0.25);
    return SurrogateTerm{g_t, sigma};
}

BoundaryAtom sample_play(const std::optional<BoundaryAtom>& prev_atom,
                         const BoundaryAtom& v_new, int t, const Schedule& schedule,
                         std::mt19937_64& rng) {
    if (t == 1 || !prev_atom) return v_new;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    return unif(rng) < schedule.step(t) ? v_new : *prev_atom;
}

OfwResult run_ofw(const DomainSpec& domain, const std::vector<CostEvent>& stream,
                  Setting setting, const RunConfig& config) {
    validate_domain(domain);
    if (config.T < 1) throw ConfigError("run_ofw: T must be >= 1");
    if (static_cast<int>(stream.size()) < config.T)
        throw InputError("run_ofw: stream shorter than the horizon T");

    const double D = domain_diameter(domain);
    OfwResult result;
    result.schedule = schedule_from_setting(config.meta, D, setting);
    const Schedule& sch = result.schedule;

    const bool matrix_domain = std::holds_alternative<TraceNormBall>(domain);
    std::mt19937_64 rng(config.seed);

    AggregateState agg =
        matrix_domain
            ? AggregateState(std::get<TraceNormBall>(domain).m, std::get<TraceNormBall>(domain).n)
            : AggregateState(mode_for(stream.front(), setting), domain_dim(domain));

    SmoothingConfig smoothing;
    if (setting == Setting::StochNonsmooth) {
        smoothing.dim = static_cast<int>(domain_dim(domain));
        smoothing.D = D;
        smoothing.mc_samples = config.mc_samples;
        smoothing.seed = config.seed;
    }

    SparseIterate x = SparseIterate::Single(initial_vertex(domain, config.power_tol, rng()));
    VectorXd x_dense;
    if (!matrix_domain) {
        x_dense = x.atoms.front().densify();
        if (setting == Setting::Adversarial) agg.set_anchor(x_dense);
    }

    result.trace.records.reserve(static_cast<std::size_t>(config.T));
    result.vertices.reserve(static_cast<std::size_t>(config.T));
    result.alphas.reserve(static_cast<std::size_t>(config.T));

    const auto* tb = std::get_if<TraceNormBall>(&domain);

    for (int t = 1; t <= config.T; ++t) {
        const CostEvent& f_t = stream[static_cast<std::size_t>(t - 1)];
        TraceRecord rec;
        rec.t = t;
        rec.support_size = static_cast<int>(x.atoms.size());
        if (config.record_iterates && !matrix_domain) result.iterates.push_back(x_dense);

        const auto tic = Clock::now();
        double loss = 0.0;
        BoundaryAtom v = x.atoms.front();  // placeholder, overwritten below
        VectorXd x_played;
        const double alpha = sch.step(t);

        if (matrix_domain) {
            const auto& mc = std::get<MatrixEntryCost>(f_t);
            const double x_ij = iterate_entry(x, mc.row, mc.col);
            const double err = x_ij - mc.rating;
            loss = err * err;
            agg.absorb(f_t);
            agg.observe_entry_value(x_ij);
            SparseEntryMap grad = agg.matrix_gradient();
            v = lmo_trace_ball(*tb, grad, config.power_tol, rng());
            agg.on_mix(v, alpha);
            x = iterate_mix(x, v, alpha);
        } else {
            loss = cost_value(f_t, x_dense);
            if (setting == Setting::Adversarial) {
                const SurrogateTerm term = make_adversarial_surrogate(
                    cost_subgradient(f_t, x_dense), t, config.meta.L, D);
                agg.absorb_surrogate(term.grad, term.sigma);
            } else if (setting == Setting::StochNonsmooth) {
                agg.absorb(f_t, smoothing.delta(t));
            } else {
                agg.absorb(f_t);
            }
            const VectorXd grad = agg.gradient(x_dense);
            v = lmo_vector_domain(domain, grad);
            x = iterate_mix(x, v, alpha);
            x_played = x_dense;
            x_dense = (1.0 - alpha) * x_dense + alpha * v.densify();
        }
        const auto toc = Clock::now();
        if (matrix_domain && config.cache_check_every > 0 && t % config.cache_check_every == 0) {
            // Dedicated rng so the check never perturbs the run's randomness.
            std::mt19937_64 check_rng(config.seed ^ 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(t));
            agg.spot_check_cache(x, 20, check_rng);
        }
        // Gap of the played point against the round's averaged objective,
        // where the minimizer has a closed form. Diagnostic; untimed.
        if (!matrix_domain) rec.delta_t = gap_on_ball(agg, domain, x_played);

        rec.loss = loss;
        rec.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(toc - tic).count();
        result.trace.records.push_back(std::move(rec));
        result.vertices.push_back(v);
        result.alphas.push_back(alpha);
    }
    result.iterate = std::move(x);
    return result;
}

}  // namespace ofw
