#pragma once

#include <Eigen/Core>
#include <variant>
#include <vector>

#include "ofw/errors.hpp"

namespace ofw {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// A rank-one matrix scale * left * right^T with unit-norm factors.
struct RankOneFactor {
    double scale = 0.0;
    VectorXd left;   // length m, unit norm
    VectorXd right;  // length n, unit norm
};

// One boundary point of a domain: a dense coordinate vector for vector
// domains, or a factored rank-one matrix for trace-norm domains.
// Matrix atoms are never densified on the optimization path; the dense
// forms below exist for tests and debugging.
class BoundaryAtom {
  public:
    static BoundaryAtom Dense(VectorXd v);
    static BoundaryAtom RankOne(double scale, VectorXd left, VectorXd right);

    bool is_rank_one() const { return std::holds_alternative<RankOneFactor>(rep_); }
    const VectorXd& vec() const { return std::get<VectorXd>(rep_); }
    const RankOneFactor& factor() const { return std::get<RankOneFactor>(rep_); }

    // Ambient dimension: n for dense atoms, m*n for matrix atoms.
    Index dim() const;
    // Row-major flattening for matrix atoms; identity for dense atoms.
    VectorXd densify() const;
    // Matrix entry (i, j); matrix atoms only.
    double entry(Index i, Index j) const;

  private:
    std::variant<VectorXd, RankOneFactor> rep_;
};

// The round-t decision point as an explicit convex combination of at most
// t boundary points.
struct SparseIterate {
    std::vector<BoundaryAtom> atoms;
    std::vector<double> weights;
    int round = 1;

    static SparseIterate Single(BoundaryAtom v);

    // Throws if weights are negative, do not sum to 1 within 1e-9, or the
    // support exceeds the round index.
    void check_invariants() const;
};

// Weights below this are treated as exactly zero and their atoms dropped.
inline constexpr double kWeightPruneThreshold = 1e-15;

// x_{t+1} = (1 - alpha) x + alpha v with the support pruned.
SparseIterate iterate_mix(const SparseIterate& x, const BoundaryAtom& v, double alpha);

// Dense value of the combination (matrix atoms flattened row-major).
VectorXd iterate_densify(const SparseIterate& x);

// Entry (i, j) of a matrix-atom iterate without densifying.
double iterate_entry(const SparseIterate& x, Index i, Index j);

}  // namespace ofw
