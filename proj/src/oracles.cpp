#include "ofw/oracles.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace ofw {
namespace {

void require_finite(const VectorXd& c, const char* who) {
    for (Index i = 0; i < c.size(); ++i)
        if (!std::isfinite(c[i])) throw NumericError(std::string(who) + ": non-finite coordinate");
}

VectorXd basis_vector(Index n, Index i) {
    VectorXd e = VectorXd::Zero(n);
    e[i] = 1.0;
    return e;
}

}  // namespace

VectorXd SparseEntryMap::apply(const VectorXd& v) const {
    VectorXd out = VectorXd::Zero(m_);
    for (const auto& [i, j, val] : entries_) out[i] += val * v[j];
    return out;
}

VectorXd SparseEntryMap::apply_t(const VectorXd& u) const {
    VectorXd out = VectorXd::Zero(n_);
    for (const auto& [i, j, val] : entries_) out[j] += val * u[i];
    return out;
}

TopPair power_iteration_top_pair(const LinearMap& G, double tol, int max_iters,
                                 std::uint64_t seed) {
    if (!(tol > 0.0)) throw ParamError("power iteration: tol must be > 0");
    const Index n = G.cols();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    VectorXd v(n);
    for (Index i = 0; i < n; ++i) v[i] = gauss(rng);
    double vnorm = v.norm();
    if (vnorm == 0.0) v = basis_vector(n, 0); else v /= vnorm;

    TopPair out;
    double sigma_prev = -1.0;
    for (int it = 1; it <= max_iters; ++it) {
        VectorXd gv = G.apply(v);
        const double sigma = gv.norm();
        if (sigma == 0.0) {
            // v is in the null space; restart from a fresh random direction.
            for (Index i = 0; i < n; ++i) v[i] = gauss(rng);
            const double nv = v.norm();
            if (nv == 0.0 || it == max_iters) throw NumericError("power iteration: zero matrix");
            v /= nv;
            continue;
        }
        out.sigma = sigma;
        out.u = gv / sigma;
        out.v = v;
        out.iters = it;
        VectorXd w = G.apply_t(gv);  // sigma * G^T u
        // Converged when the sigma estimate has settled and the singular
        // pair residual |G^T u - sigma v| is small.
        const double residual = (w / sigma - sigma * v).norm();
        if (sigma_prev > 0.0 && std::abs(sigma - sigma_prev) < tol * sigma &&
            residual <= 10.0 * tol * sigma) {
            out.converged = true;
            return out;
        }
        sigma_prev = sigma;
        const double wnorm = w.norm();
        if (wnorm == 0.0) throw NumericError("power iteration: G^T G v vanished");
        v = w / wnorm;
    }
    out.converged = false;  // caller proceeds with the last iterate
    return out;
}

BoundaryAtom lmo_simplex(const VectorXd& c) {
    if (c.size() == 0) throw ParamError("lmo_simplex: empty cost vector");
    require_finite(c, "lmo_simplex");
    Index best = 0;
    for (Index i = 1; i < c.size(); ++i)
        if (c[i] < c[best]) best = i;
    return BoundaryAtom::Dense(basis_vector(c.size(), best));
}

BoundaryAtom lmo_ball(const VectorXd& c, double r) {
    if (!(r > 0.0)) throw ParamError("lmo_ball: radius must be > 0");
    require_finite(c, "lmo_ball");
    const double norm = c.norm();
    if (norm < 1e-12) return BoundaryAtom::Dense(r * basis_vector(c.size(), 0));
    return BoundaryAtom::Dense((-r / norm) * c);
}

BoundaryAtom lmo_flow_dag(const FlowPolytope& g, const VectorXd& edge_cost) {
    if (edge_cost.size() != g.num_edges())
        throw ParamError("lmo_flow_dag: cost length != edge count");
    require_finite(edge_cost, "lmo_flow_dag");
    const double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(g.nodes), kInf);
    std::vector<Index> pred_edge(static_cast<std::size_t>(g.nodes), -1);
    dist[static_cast<std::size_t>(g.source)] = 0.0;
    // One pass in edge-index order; edges are topologically sorted. Ties
    // keep the earliest edge index seen.
    for (Index e = 0; e < g.num_edges(); ++e) {
        const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (dist[static_cast<std::size_t>(u)] == kInf) continue;
        const double cand = dist[static_cast<std::size_t>(u)] + edge_cost[e];
        if (cand < dist[static_cast<std::size_t>(v)]) {
            dist[static_cast<std::size_t>(v)] = cand;
            pred_edge[static_cast<std::size_t>(v)] = e;
        }
    }
    if (dist[static_cast<std::size_t>(g.sink)] == kInf)
        throw InfeasibleError("lmo_flow_dag: no s->t path");
    VectorXd indicator = VectorXd::Zero(g.num_edges());
    for (int node = g.sink; node != g.source;) {
        const Index e = pred_edge[static_cast<std::size_t>(node)];
        indicator[e] = 1.0;
        node = g.edges[static_cast<std::size_t>(e)].first;
    }
    return BoundaryAtom::Dense(std::move(indicator));
}

BoundaryAtom lmo_uniform_matroid(Index n, Index k, const VectorXd& c) {
    if (k < 1 || k > n) throw ParamError("lmo_uniform_matroid: need 1 <= k <= n");
    if (c.size() != n) throw ParamError("lmo_uniform_matroid: cost length != n");
    require_finite(c, "lmo_uniform_matroid");
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index i, Index j) { return c[i] < c[j]; });
    VectorXd indicator = VectorXd::Zero(n);
    Index taken = 0;
    for (Index i : order) {
        if (c[i] >= 0.0 || taken >= k) break;
        indicator[i] = 1.0;
        ++taken;
    }
    return BoundaryAtom::Dense(std::move(indicator));
}

BoundaryAtom lmo_trace_ball(const TraceNormBall& spec, const LinearMap& G, double tol,
                            std::uint64_t seed) {
    if (G.rows() != spec.m || G.cols() != spec.n)
        throw ParamError("lmo_trace_ball: gradient shape mismatch");
    TopPair p = power_iteration_top_pair(G, tol, 1000, seed);
    // Non-convergence is tolerated: OFW proceeds with the last iterate.
    return BoundaryAtom::RankOne(-spec.tau, p.u, p.v);
}

BoundaryAtom lmo_vector_domain(const DomainSpec& domain, const VectorXd& c) {
    return std::visit(
        [&](const auto& d) -> BoundaryAtom {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Simplex>) {
                return lmo_simplex(c);
            } else if constexpr (std::is_same_v<T, Ball>) {
                return lmo_ball(c, d.radius);
            } else if constexpr (std::is_same_v<T, FlowPolytope>) {
                return lmo_flow_dag(d, c);
            } else if constexpr (std::is_same_v<T, UniformMatroid>) {
                return lmo_uniform_matroid(d.n, d.rank, c);
            } else {
                throw ConfigError("lmo_vector_domain: trace ball needs a matrix accessor");
            }
        },
        domain);
}

VectorXd project_simplex_scaled(const VectorXd& y, double total) {
    if (!(total > 0.0)) throw ParamError("project_simplex: total must be > 0");
    require_finite(y, "project_simplex");
    const Index n = y.size();
    std::vector<double> sorted(y.data(), y.data() + n);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    // Find the largest k with sorted[k-1] - (prefix_sum - total)/k > 0.
    double prefix = 0.0, theta = sorted[0] - total;
    for (Index i = 0; i < n; ++i) {
        prefix += sorted[static_cast<std::size_t>(i)];
        const double cand = (prefix - total) / static_cast<double>(i + 1);
        if (sorted[static_cast<std::size_t>(i)] - cand > 0.0) theta = cand;
    }
    VectorXd out(n);
    for (Index i = 0; i < n; ++i) out[i] = std::max(y[i] - theta, 0.0);
    return out;
}

VectorXd project_simplex(const VectorXd& y) { return project_simplex_scaled(y, 1.0); }

VectorXd project_ball(const VectorXd& y, double r) {
    if (!(r > 0.0)) throw ParamError("project_ball: radius must be > 0");
    const double norm = y.norm();
    if (norm <= r) return y;
    return (r / norm) * y;
}

MatrixXd project_trace_ball(const MatrixXd& Y, double tau) {
    if (!(tau > 0.0)) throw ParamError("project_trace_ball: tau must be > 0");
    Eigen::BDCSVD<MatrixXd> svd(Y, Eigen::ComputeThinU | Eigen::ComputeThinV);
    VectorXd sv = svd.singularValues();
    MatrixXd U = svd.matrixU(), V = svd.matrixV();
    if (!sv.allFinite() || !U.allFinite() || !V.allFinite()) {
        // BDCSVD can emit NaNs on nearly sparse inputs; fall back to the
        // slower but robust Jacobi decomposition.
        Eigen::JacobiSVD<MatrixXd> jac(Y, Eigen::ComputeThinU | Eigen::ComputeThinV);
        sv = jac.singularValues();
        U = jac.matrixU();
        V = jac.matrixV();
    }
    if (sv.sum() <= tau) return Y;
    VectorXd projected = project_simplex_scaled(sv, tau);
    return U * projected.asDiagonal() * V.transpose();
}

}  // namespace ofw
