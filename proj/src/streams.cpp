#include "ofw/streams.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace ofw {
namespace {

VectorXd sample_ball_point(Index n, double radius, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    VectorXd u(n);
    double norm = 0.0;
    do {
        for (Index i = 0; i < n; ++i) u[i] = gauss(rng);
        norm = u.norm();
    } while (norm == 0.0);
    return u * (radius * std::pow(unif(rng), 1.0 / static_cast<double>(n)) / norm);
}

GeneratedStream gen_quadratic(const StreamSpec& spec, const DomainSpec& domain) {
    const auto* ball = std::get_if<Ball>(&domain);
    const Index n = domain_dim(domain);
    GeneratedStream out;
    VectorXd center = spec.center.size() == n ? spec.center : VectorXd::Zero(n);
    if (ball && center.norm() + spec.target_radius > ball->radius)
        throw ConfigError("gen_stream: quadratic targets leave the ball");
    std::mt19937_64 rng(spec.seed);
    out.events.reserve(static_cast<std::size_t>(spec.horizon));
    double max_target_norm = 0.0;
    if (spec.two_point.size() == n) {
        if (ball && spec.two_point.norm() > ball->radius)
            throw ConfigError("gen_stream: quadratic targets leave the ball");
        std::bernoulli_distribution coin(0.5);
        for (int t = 0; t < spec.horizon; ++t) {
            VectorXd y = coin(rng) ? spec.two_point : VectorXd(-spec.two_point);
            out.events.push_back(QuadraticCost{std::move(y)});
        }
        max_target_norm = spec.two_point.norm();
        out.mean_target = VectorXd::Zero(n);
        out.target_var = spec.two_point.squaredNorm();
    } else {
        for (int t = 0; t < spec.horizon; ++t) {
            VectorXd y = center + sample_ball_point(n, spec.target_radius, rng);
            max_target_norm = std::max(max_target_norm, y.norm());
            out.events.push_back(QuadraticCost{std::move(y)});
        }
        out.mean_target = center;
        // E|y - c|^2 for the uniform-ball target law is r^2 n/(n+2).
        out.target_var =
            spec.target_radius * spec.target_radius * static_cast<double>(n) / (n + 2.0);
    }
    out.meta.dim = static_cast<int>(n);
    out.meta.beta = 1.0;
    const double domain_reach = ball ? ball->radius : 1.0;
    out.meta.L = 2.0 * (domain_reach + max_target_norm);
    return out;
}

GeneratedStream gen_absolute(const StreamSpec& spec, const DomainSpec& domain) {
    const Index n = domain_dim(domain);
    GeneratedStream out;
    if (!(spec.abs_bias > 0.0 && spec.abs_bias < 1.0))
        throw ConfigError("gen_stream: abs_bias must be in (0,1)");
    std::mt19937_64 rng(spec.seed);
    std::bernoulli_distribution coin(spec.abs_bias);
    out.events.reserve(static_cast<std::size_t>(spec.horizon));
    for (int t = 0; t < spec.horizon; ++t) {
        VectorXd y(n);
        for (Index i = 0; i < n; ++i) y[i] = coin(rng) ? spec.abs_level : -spec.abs_level;
        out.events.push_back(AbsoluteCost{std::move(y)});
    }
    out.abs_level = spec.abs_level;
    out.abs_bias = spec.abs_bias;
    out.meta.dim = static_cast<int>(n);
    out.meta.L = std::sqrt(static_cast<double>(n));
    return out;
}

GeneratedStream gen_adversarial(const StreamSpec& spec, const DomainSpec& domain) {
    const Index n = domain_dim(domain);
    const double L = spec.grad_norm;
    GeneratedStream out;
    std::mt19937_64 rng(spec.seed);
    std::bernoulli_distribution coin(0.5);
    out.events.reserve(static_cast<std::size_t>(spec.horizon));
    VectorXd u0 = VectorXd::Zero(n), u1 = VectorXd::Zero(n);
    u0[0] = 1.0;
    u1[n > 1 ? 1 : 0] = 1.0;
    for (int t = 1; t <= spec.horizon; ++t) {
        VectorXd g(n);
        switch (spec.pattern) {
            case AdvPattern::Alternating:
                g = VectorXd::Zero(n);
                g[(t - 1) % n] = L;
                break;
            case AdvPattern::RandomSign: {
                const double mag = L / std::sqrt(static_cast<double>(n));
                for (Index i = 0; i < n; ++i) g[i] = coin(rng) ? mag : -mag;
                break;
            }
            case AdvPattern::Drifting: {
                const double theta = 2.0 * std::numbers::pi * static_cast<double>(t) /
                                     static_cast<double>(spec.horizon);
                if (n > 1) {
                    g = L * (std::cos(theta) * u0 + std::sin(theta) * u1);
                } else {
                    g = L * std::cos(theta) * u0;
                }
                break;
            }
        }
        out.events.push_back(LinearCost{std::move(g)});
    }
    out.meta.dim = static_cast<int>(n);
    out.meta.L = L;
    out.meta.beta = 0.0;  // linear costs are 0-smooth
    return out;
}

GeneratedStream gen_matrix_entry(const StreamSpec& spec, const DomainSpec& domain) {
    const auto* tb = std::get_if<TraceNormBall>(&domain);
    if (!tb) throw ConfigError("gen_stream: matrix_entry needs a trace-norm domain");
    GeneratedStream out;
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixXd U(tb->m, spec.rank), V(tb->n, spec.rank);
    for (Index i = 0; i < U.size(); ++i) U.data()[i] = gauss(rng);
    for (Index i = 0; i < V.size(); ++i) V.data()[i] = gauss(rng);
    out.planted = U * V.transpose() / std::sqrt(static_cast<double>(spec.rank));
    out.planted_trace =
        Eigen::BDCSVD<MatrixXd>(out.planted).singularValues().sum();
    std::uniform_int_distribution<Index> row(0, tb->m - 1), col(0, tb->n - 1);
    double max_abs_rating = 0.0;
    out.events.reserve(static_cast<std::size_t>(spec.horizon));
    for (int t = 0; t < spec.horizon; ++t) {
        const Index i = row(rng), j = col(rng);
        const double y = out.planted(i, j);
        max_abs_rating = std::max(max_abs_rating, std::abs(y));
        out.events.push_back(MatrixEntryCost{i, j, y, tb->n});
    }
    out.meta.dim = static_cast<int>(tb->m * tb->n);
    out.meta.beta = 1.0;
    out.meta.L = 2.0 * (tb->tau + max_abs_rating);
    return out;
}

}  // namespace

AdvPattern pattern_from_name(const std::string& name) {
    if (name == "alternating") return AdvPattern::Alternating;
    if (name == "random_sign") return AdvPattern::RandomSign;
    if (name == "drifting") return AdvPattern::Drifting;
    throw ConfigError("unknown adversarial pattern: " + name);
}

double GeneratedStream::fstar(const VectorXd& x) const {
    if (mean_target) return (x - *mean_target).squaredNorm() + *target_var;
    if (abs_level) {
        const double c = *abs_level, p = abs_bias ? *abs_bias : 0.5;
        double v = 0.0;
        for (Index i = 0; i < x.size(); ++i)
            v += p * std::abs(x[i] - c) + (1.0 - p) * std::abs(x[i] + c);
        return v;
    }
    throw ConfigError("fstar: no closed form for this family");
}

VectorXd fstar_argmin(const GeneratedStream& gen, const DomainSpec& domain) {
    const auto* ball = std::get_if<Ball>(&domain);
    if (!ball) throw ConfigError("fstar_argmin: only ball domains are supported");
    if (gen.mean_target) return project_ball(*gen.mean_target, ball->radius);
    if (gen.abs_level) {
        // Per-coordinate median of the target law, by symmetry across
        // coordinates and monotonicity of f* along the diagonal.
        const double p = gen.abs_bias ? *gen.abs_bias : 0.5;
        double median = 0.0;
        if (p > 0.5) median = *gen.abs_level;
        else if (p < 0.5) median = -*gen.abs_level;
        return project_ball(median * VectorXd::Ones(ball->n), ball->radius);
    }
    throw ConfigError("fstar_argmin: no closed form for this family");
}

GeneratedStream gen_stream(const StreamSpec& spec, const DomainSpec& domain) {
    validate_domain(domain);
    if (spec.horizon < 1) throw ConfigError("gen_stream: horizon must be >= 1");
    switch (spec.family) {
        case StreamFamily::Quadratic: return gen_quadratic(spec, domain);
        case StreamFamily::Absolute: return gen_absolute(spec, domain);
        case StreamFamily::LinearAdversarial: return gen_adversarial(spec, domain);
        case StreamFamily::MatrixEntry: return gen_matrix_entry(spec, domain);
    }
    throw ConfigError("gen_stream: unknown family");
}

double linear_min_value(const DomainSpec& domain, const VectorXd& c) {
    return c.dot(lmo_vector_domain(domain, c).densify());
}

Comparator best_in_hindsight(const DomainSpec& domain, const std::vector<CostEvent>& prefix,
                             int iters) {
    if (prefix.empty()) throw InputError("best_in_hindsight: empty prefix");
    const int T = static_cast<int>(prefix.size());
    const Index n = domain_dim(domain);

    if (std::holds_alternative<QuadraticCost>(prefix.front())) {
        if (const auto* ball = std::get_if<Ball>(&domain)) {
            VectorXd ybar = VectorXd::Zero(n);
            double mean_sq = 0.0;
            for (const auto& e : prefix) {
                const auto& q = std::get<QuadraticCost>(e);
                ybar += q.target;
                mean_sq += q.target.squaredNorm();
            }
            ybar /= T;
            mean_sq /= T;
            Comparator c;
            c.x = project_ball(ybar, ball->radius);
            c.value = (c.x - ybar).squaredNorm() + mean_sq - ybar.squaredNorm();
            return c;
        }
    }
    if (std::holds_alternative<LinearCost>(prefix.front())) {
        VectorXd gbar = VectorXd::Zero(n);
        for (const auto& e : prefix) gbar += std::get<LinearCost>(e).grad;
        gbar /= T;
        Comparator c;
        c.x = lmo_vector_domain(domain, gbar).densify();
        c.value = gbar.dot(c.x);
        return c;
    }

    // Offline Frank-Wolfe on F_T with step 2/(k+2).
    if (iters <= 0) iters = static_cast<int>(10.0 * std::sqrt(static_cast<double>(T)));
    auto grad_F = [&](const VectorXd& x) {
        VectorXd g = VectorXd::Zero(n);
        for (const auto& e : prefix) g += cost_subgradient(e, x);
        return VectorXd(g / T);
    };
    auto value_F = [&](const VectorXd& x) {
        double v = 0.0;
        for (const auto& e : prefix) v += cost_value(e, x);
        return v / T;
    };
    VectorXd x = lmo_vector_domain(domain, VectorXd::Ones(n)).densify();
    Comparator best;
    best.x = x;
    best.value = value_F(x);
    best.gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < iters; ++k) {
        const VectorXd g = grad_F(x);
        const VectorXd v = lmo_vector_domain(domain, g).densify();
        const double gap = g.dot(x - v);  // upper-bounds F(x) - min F
        const double val = value_F(x);
        if (val < best.value) {
            best.x = x;
            best.value = val;
        }
        best.gap = std::min(best.gap, std::max(gap, 0.0));
        const double step = 2.0 / static_cast<double>(k + 2);
        x = (1.0 - step) * x + step * v;
    }
    return best;
}

std::vector<double> regret_of(const std::vector<double>& losses,
                              const std::vector<double>& comparator_losses) {
    if (losses.size() != comparator_losses.size())
        throw InputError("regret_of: series length mismatch");
    std::vector<double> out(losses.size());
    double acc = 0.0;
    for (std::size_t t = 0; t < losses.size(); ++t) {
        acc += losses[t] - comparator_losses[t];
        out[t] = acc;
    }
    return out;
}

std::vector<double> regret_of_prefix(const std::vector<double>& losses,
                                     const std::vector<double>& prefix_min_totals) {
    if (losses.size() != prefix_min_totals.size())
        throw InputError("regret_of_prefix: series length mismatch");
    std::vector<double> out(losses.size());
    double acc = 0.0;
    for (std::size_t t = 0; t < losses.size(); ++t) {
        acc += losses[t];
        out[t] = acc - prefix_min_totals[t];
    }
    return out;
}

double loglog_slope(const std::vector<double>& series, int t_lo, int t_hi) {
    if (t_lo < 1 || t_hi > static_cast<int>(series.size()) || t_lo >= t_hi)
        throw ParamError("loglog_slope: bad window");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int t = t_lo; t <= t_hi; ++t) {
        const double y = series[static_cast<std::size_t>(t - 1)];
        const double ly = std::log(std::max(y, 1e-300));
        const double lx = std::log(static_cast<double>(t));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
    }
    const double denom = count * sxx - sx * sx;
    if (denom == 0.0) throw NumericError("loglog_slope: degenerate window");
    return (count * sxy - sx * sy) / denom;
}

}  // namespace ofw
