#pragma once

#include <random>
#include <unordered_map>

#include "ofw/costs.hpp"
#include "ofw/oracles.hpp"

namespace ofw {

// Sufficient statistics for F_t = (1/t) sum f_tau, per cost family.
// Quadratic / Linear / Surrogate absorb in O(1); the smoothed Absolute
// family stores all past targets (O(t) gradient evaluation); MatrixEntry
// keeps the observed-entry list plus a cache of the iterate restricted to
// the observed positions so the OFW path never touches a dense matrix.
class AggregateState {
  public:
    enum class Mode { QuadraticMean, LinearMean, Surrogate, SmoothedAbsolute, MatrixEntry };

    AggregateState(Mode mode, Index dim);
    // MatrixEntry mode.
    AggregateState(Index m, Index n);

    Mode mode() const { return mode_; }
    int rounds() const { return rounds_; }

    // Quadratic / Linear / Absolute events. Absolute events record the
    // smoothing radius delta_t in force at their round.
    void absorb(const CostEvent& f, double delta = 0.0);
    // Adversarial surrogate term grad . x + sigma |x - anchor|^2.
    void absorb_surrogate(const VectorXd& grad, double sigma);
    void set_anchor(VectorXd x1);

    // grad F_t at a dense point (vector domains).
    VectorXd gradient(const VectorXd& x) const;

    // Averaged matrix-entry gradient (2/t) sum (x(i,j) - y) E_ij as a
    // sparse accessor over the observed support, built from the cache.
    SparseEntryMap matrix_gradient() const;

    // Entry-cache maintenance: scale by (1 - alpha) and add alpha * v.
    void on_mix(const BoundaryAtom& v, double alpha);
    // Record the played iterate's value at a newly observed entry.
    void observe_entry_value(double x_ij);

    // F_t evaluations used by gap diagnostics.
    double quadratic_F(const VectorXd& x) const;
    double surrogate_F(const VectorXd& x) const;
    double smoothed_F(const VectorXd& x) const;
    double matrix_entry_F() const;  // from the cache, no densification

    const VectorXd& mean_target() const;  // Quadratic: running mean of y
    const VectorXd& mean_grad() const;    // Linear / Surrogate: running mean of g
    double mean_sigma() const;            // Surrogate
    const VectorXd& anchor() const;       // Surrogate
    double cached_entry(std::size_t event_index) const;  // MatrixEntry spot checks
    // Compare `samples` randomly chosen cached entries against a fresh
    // iterate_entry recomputation; throws NumericError past tol.
    void spot_check_cache(const SparseIterate& x, int samples, std::mt19937_64& rng,
                          double tol = 1e-8) const;

  private:
    Mode mode_;
    Index dim_ = 0;
    int rounds_ = 0;

    VectorXd mean_target_;   // Quadratic
    double mean_sq_norm_ = 0.0;

    VectorXd mean_grad_;     // Linear / Surrogate
    double mean_sigma_ = 0.0;
    VectorXd anchor_;

    std::vector<VectorXd> abs_targets_;  // SmoothedAbsolute
    std::vector<double> abs_deltas_;

    Index mat_rows_ = 0, mat_cols_ = 0;  // MatrixEntry
    std::vector<std::tuple<Index, Index, double>> observed_;  // (i, j, rating)
    std::vector<double> entry_cache_;                         // x_t at observed (i, j)
};

}  // namespace ofw
