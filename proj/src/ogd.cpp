#include "ofw/ogd.hpp"

#include <chrono>
#include <cmath>

namespace ofw {
namespace {

using Clock = std::chrono::steady_clock;

VectorXd initial_point(const DomainSpec& domain) {
    if (const auto* s = std::get_if<Simplex>(&domain))
        return VectorXd::Constant(s->n, 1.0 / static_cast<double>(s->n));
    if (std::holds_alternative<Ball>(domain))
        return VectorXd::Zero(domain_dim(domain));
    if (std::holds_alternative<TraceNormBall>(domain))
        return VectorXd::Zero(domain_dim(domain));
    throw ConfigError("run_ogd: no projection oracle for this domain");
}

}  // namespace

VectorXd project_domain(const DomainSpec& domain, const VectorXd& y) {
    if (std::holds_alternative<Simplex>(domain)) return project_simplex(y);
    if (const auto* b = std::get_if<Ball>(&domain)) return project_ball(y, b->radius);
    throw ConfigError("project_domain: no projection oracle for this domain");
}

VectorXd ogd_round(const DomainSpec& domain, const VectorXd& x_t, const VectorXd& g_t,
                   double eta_t) {
    if (!(eta_t > 0.0)) throw ParamError("ogd_round: eta must be > 0");
    return project_domain(domain, x_t - eta_t * g_t);
}

OgdResult run_ogd(const DomainSpec& domain, const std::vector<CostEvent>& stream,
                  const OgdConfig& config) {
    validate_domain(domain);
    if (config.T < 1) throw ConfigError("run_ogd: T must be >= 1");
    if (static_cast<int>(stream.size()) < config.T)
        throw InputError("run_ogd: stream shorter than the horizon T");
    config.meta.validate();

    const double D = domain_diameter(domain);
    const double L = config.meta.L;
    auto eta = config.eta ? config.eta : [L, D](int t) {
        return D / (L * std::sqrt(static_cast<double>(t)));
    };

    const auto* tb = std::get_if<TraceNormBall>(&domain);
    OgdResult result;
    result.trace.records.reserve(static_cast<std::size_t>(config.T));

    if (tb) {
        MatrixXd X = MatrixXd::Zero(tb->m, tb->n);
        for (int t = 1; t <= config.T; ++t) {
            const auto& mc = std::get<MatrixEntryCost>(stream[static_cast<std::size_t>(t - 1)]);
            TraceRecord rec;
            rec.t = t;
            const auto tic = Clock::now();
            const double err = X(mc.row, mc.col) - mc.rating;
            const double loss = err * err;
            X(mc.row, mc.col) -= eta(t) * 2.0 * err;
            X = project_trace_ball(X, tb->tau);
            const auto toc = Clock::now();
            rec.loss = loss;
            rec.elapsed_ns =
                std::chrono::duration_cast<std::chrono::nanoseconds>(toc - tic).count();
            result.trace.records.push_back(rec);
        }
        result.final_point = VectorXd::Map(MatrixXd(X.transpose()).data(), X.size());
        return result;
    }

    VectorXd x = initial_point(domain);
    for (int t = 1; t <= config.T; ++t) {
        const CostEvent& f_t = stream[static_cast<std::size_t>(t - 1)];
        TraceRecord rec;
        rec.t = t;
        if (config.record_iterates) result.iterates.push_back(x);
        const auto tic = Clock::now();
        const double loss = cost_value(f_t, x);
        x = ogd_round(domain, x, cost_subgradient(f_t, x), eta(t));
        const auto toc = Clock::now();
        rec.loss = loss;
        rec.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(toc - tic).count();
        result.trace.records.push_back(rec);
    }
    result.final_point = x;
    return result;
}

}  // namespace ofw
