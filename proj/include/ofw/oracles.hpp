#pragma once

#include <cstdint>
#include <tuple>

#include "ofw/atoms.hpp"
#include "ofw/domains.hpp"

namespace ofw {

// Matrix accessor for power iteration: y = G v and y = G^T u without a
// materialized dense matrix.
class LinearMap {
  public:
    virtual ~LinearMap() = default;
    virtual Index rows() const = 0;
    virtual Index cols() const = 0;
    virtual VectorXd apply(const VectorXd& v) const = 0;    // G v
    virtual VectorXd apply_t(const VectorXd& u) const = 0;  // G^T u
};

class DenseMap final : public LinearMap {
  public:
    explicit DenseMap(MatrixXd G) : G_(std::move(G)) {}
    Index rows() const override { return G_.rows(); }
    Index cols() const override { return G_.cols(); }
    VectorXd apply(const VectorXd& v) const override { return G_ * v; }
    VectorXd apply_t(const VectorXd& u) const override { return G_.transpose() * u; }

  private:
    MatrixXd G_;
};

// m x n matrix given by a list of (possibly duplicated) entries; all
// unlisted entries are zero. This is the shape of the averaged
// matrix-entry gradient.
class SparseEntryMap final : public LinearMap {
  public:
    SparseEntryMap(Index m, Index n, std::vector<std::tuple<Index, Index, double>> entries)
        : m_(m), n_(n), entries_(std::move(entries)) {}
    Index rows() const override { return m_; }
    Index cols() const override { return n_; }
    VectorXd apply(const VectorXd& v) const override;
    VectorXd apply_t(const VectorXd& u) const override;
    const std::vector<std::tuple<Index, Index, double>>& entries() const { return entries_; }

  private:
    Index m_, n_;
    std::vector<std::tuple<Index, Index, double>> entries_;
};

struct TopPair {
    double sigma = 0.0;
    VectorXd u;
    VectorXd v;
    bool converged = false;
    int iters = 0;
};

// Approximate top singular triple by power iteration on G^T G from a
// seeded random start; stops when successive sigma estimates differ by
// less than tol relatively. On max_iters exhaustion the last iterate is
// returned with converged = false and the caller decides.
TopPair power_iteration_top_pair(const LinearMap& G, double tol = 1e-5,
                                 int max_iters = 1000, std::uint64_t seed = 0);

// --- Linear minimization oracles. All ties broken by lowest index. ---

BoundaryAtom lmo_simplex(const VectorXd& c);
BoundaryAtom lmo_ball(const VectorXd& c, double r);
BoundaryAtom lmo_flow_dag(const FlowPolytope& g, const VectorXd& edge_cost);
BoundaryAtom lmo_uniform_matroid(Index n, Index k, const VectorXd& c);
// Rank-one atom -tau u v^T with (u, v) from power iteration on G.
BoundaryAtom lmo_trace_ball(const TraceNormBall& spec, const LinearMap& G,
                            double tol = 1e-5, std::uint64_t seed = 0);

// Dispatcher for vector-coordinate domains (simplex, ball, flow, matroid).
BoundaryAtom lmo_vector_domain(const DomainSpec& domain, const VectorXd& c);

// --- Projection oracles (OGD baseline; the trace projection is the
//     expensive comparison path and is never used by OFW). ---

VectorXd project_simplex(const VectorXd& y);
// Projection onto {x >= 0, sum x = total}.
VectorXd project_simplex_scaled(const VectorXd& y, double total);
VectorXd project_ball(const VectorXd& y, double r);
MatrixXd project_trace_ball(const MatrixXd& Y, double tau);

}  // namespace ofw
