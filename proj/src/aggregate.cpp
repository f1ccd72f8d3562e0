#include "ofw/aggregate.hpp"

#include <cmath>

namespace ofw {

AggregateState::AggregateState(Mode mode, Index dim) : mode_(mode), dim_(dim) {
    if (mode == Mode::MatrixEntry)
        throw ConfigError("AggregateState: MatrixEntry mode needs (m, n)");
    if (dim < 1) throw ConfigError("AggregateState: dim must be >= 1");
    if (mode == Mode::QuadraticMean) mean_target_ = VectorXd::Zero(dim);
    if (mode == Mode::LinearMean || mode == Mode::Surrogate)
        mean_grad_ = VectorXd::Zero(dim);
}

AggregateState::AggregateState(Index m, Index n)
    : mode_(Mode::MatrixEntry), dim_(m * n), mat_rows_(m), mat_cols_(n) {
    if (m < 1 || n < 1) throw ConfigError("AggregateState: bad matrix shape");
}

void AggregateState::absorb(const CostEvent& f, double delta) {
    const int t = rounds_ + 1;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, QuadraticCost>) {
                if (mode_ != Mode::QuadraticMean)
                    throw ConfigError("absorb: quadratic event in wrong mode");
                mean_target_ += (c.target - mean_target_) / t;
                mean_sq_norm_ += (c.target.squaredNorm() - mean_sq_norm_) / t;
            } else if constexpr (std::is_same_v<T, LinearCost>) {
                if (mode_ != Mode::LinearMean)
                    throw ConfigError("absorb: linear event in wrong mode");
                mean_grad_ += (c.grad - mean_grad_) / t;
            } else if constexpr (std::is_same_v<T, AbsoluteCost>) {
                if (mode_ != Mode::SmoothedAbsolute)
                    throw ConfigError("absorb: absolute event in wrong mode");
                if (!(delta > 0.0))
                    throw ConfigError("absorb: absolute event needs its smoothing delta");
                abs_targets_.push_back(c.target);
                abs_deltas_.push_back(delta);
            } else {
                if (mode_ != Mode::MatrixEntry)
                    throw ConfigError("absorb: matrix-entry event in wrong mode");
                if (c.row < 0 || c.row >= mat_rows_ || c.col < 0 || c.col >= mat_cols_)
                    throw ParamError("absorb: matrix entry out of range");
                observed_.emplace_back(c.row, c.col, c.rating);
            }
        },
        f);
    ++rounds_;
}

void AggregateState::absorb_surrogate(const VectorXd& grad, double sigma) {
    if (mode_ != Mode::Surrogate) throw ConfigError("absorb_surrogate: wrong mode");
    if (anchor_.size() == 0) throw ConfigError("absorb_surrogate: anchor not set");
    const int t = rounds_ + 1;
    mean_grad_ += (grad - mean_grad_) / t;
    mean_sigma_ += (sigma - mean_sigma_) / t;
    ++rounds_;
}

void AggregateState::set_anchor(VectorXd x1) { anchor_ = std::move(x1); }

VectorXd AggregateState::gradient(const VectorXd& x) const {
    if (rounds_ < 1) throw ConfigError("gradient: no events absorbed");
    switch (mode_) {
        case Mode::QuadraticMean:
            return 2.0 * (x - mean_target_);
        case Mode::LinearMean:
            return mean_grad_;
        case Mode::Surrogate:
            return mean_grad_ + 2.0 * mean_sigma_ * (x - anchor_);
        case Mode::SmoothedAbsolute: {
            VectorXd g = VectorXd::Zero(x.size());
            for (std::size_t k = 0; k < abs_targets_.size(); ++k)
                g += smoothed_abs_grad(x, abs_targets_[k], abs_deltas_[k]);
            return g / static_cast<double>(rounds_);
        }
        case Mode::MatrixEntry:
            throw ConfigError("gradient: use matrix_gradient() in MatrixEntry mode");
    }
    throw ConfigError("gradient: unreachable");
}

SparseEntryMap AggregateState::matrix_gradient() const {
    if (mode_ != Mode::MatrixEntry) throw ConfigError("matrix_gradient: wrong mode");
    if (rounds_ < 1) throw ConfigError("matrix_gradient: no events absorbed");
    if (entry_cache_.size() != observed_.size())
        throw ConfigError("matrix_gradient: entry cache out of sync");
    // Coalesce repeated (i, j) observations into one triplet each.
    std::unordered_map<Index, double> acc;
    acc.reserve(observed_.size());
    const double scale = 2.0 / static_cast<double>(rounds_);
    for (std::size_t k = 0; k < observed_.size(); ++k) {
        const auto& [i, j, y] = observed_[k];
        acc[i * mat_cols_ + j] += scale * (entry_cache_[k] - y);
    }
    std::vector<std::tuple<Index, Index, double>> entries;
    entries.reserve(acc.size());
    for (const auto& [flat, v] : acc)
        entries.emplace_back(flat / mat_cols_, flat % mat_cols_, v);
    return SparseEntryMap(mat_rows_, mat_cols_, std::move(entries));
}

void AggregateState::on_mix(const BoundaryAtom& v, double alpha) {
    if (mode_ != Mode::MatrixEntry) return;
    const auto& f = v.factor();
    for (std::size_t k = 0; k < entry_cache_.size(); ++k) {
        const auto& [i, j, y] = observed_[k];
        entry_cache_[k] =
            (1.0 - alpha) * entry_cache_[k] + alpha * f.scale * f.left[i] * f.right[j];
    }
}

void AggregateState::observe_entry_value(double x_ij) {
    if (mode_ != Mode::MatrixEntry) throw ConfigError("observe_entry_value: wrong mode");
    if (entry_cache_.size() + 1 != observed_.size())
        throw ConfigError("observe_entry_value: call once after each absorb");
    entry_cache_.push_back(x_ij);
}

double AggregateState::quadratic_F(const VectorXd& x) const {
    if (mode_ != Mode::QuadraticMean) throw ConfigError("quadratic_F: wrong mode");
    return (x - mean_target_).squaredNorm() + mean_sq_norm_ - mean_target_.squaredNorm();
}

double AggregateState::surrogate_F(const VectorXd& x) const {
    if (mode_ != Mode::Surrogate) throw ConfigError("surrogate_F: wrong mode");
    return mean_grad_.dot(x) + mean_sigma_ * (x - anchor_).squaredNorm();
}

double AggregateState::smoothed_F(const VectorXd& x) const {
    if (mode_ != Mode::SmoothedAbsolute) throw ConfigError("smoothed_F: wrong mode");
    double v = 0.0;
    for (std::size_t k = 0; k < abs_targets_.size(); ++k)
        v += smoothed_abs_value(x, abs_targets_[k], abs_deltas_[k]);
    return v / static_cast<double>(rounds_);
}

double AggregateState::matrix_entry_F() const {
    if (mode_ != Mode::MatrixEntry) throw ConfigError("matrix_entry_F: wrong mode");
    double v = 0.0;
    for (std::size_t k = 0; k < observed_.size(); ++k) {
        const double e = entry_cache_[k] - std::get<2>(observed_[k]);
        v += e * e;
    }
    return v / static_cast<double>(rounds_);
}

const VectorXd& AggregateState::mean_target() const {
    if (mode_ != Mode::QuadraticMean) throw ConfigError("mean_target: wrong mode");
    return mean_target_;
}

const VectorXd& AggregateState::mean_grad() const {
    if (mode_ != Mode::LinearMean && mode_ != Mode::Surrogate)
        throw ConfigError("mean_grad: wrong mode");
    return mean_grad_;
}

double AggregateState::mean_sigma() const {
    if (mode_ != Mode::Surrogate) throw ConfigError("mean_sigma: wrong mode");
    return mean_sigma_;
}

const VectorXd& AggregateState::anchor() const {
    if (mode_ != Mode::Surrogate) throw ConfigError("anchor: wrong mode");
    return anchor_;
}

void AggregateState::spot_check_cache(const SparseIterate& x, int samples,
                                      std::mt19937_64& rng, double tol) const {
    if (mode_ != Mode::MatrixEntry) throw ConfigError("spot_check_cache: wrong mode");
    if (entry_cache_.empty()) return;
    std::uniform_int_distribution<std::size_t> pick(0, entry_cache_.size() - 1);
    for (int s = 0; s < samples; ++s) {
        const std::size_t k = pick(rng);
        const auto& [i, j, y] = observed_[k];
        const double fresh = iterate_entry(x, i, j);
        if (std::abs(fresh - entry_cache_[k]) > tol)
            throw NumericError("spot_check_cache: entry cache drifted from the iterate");
    }
}

double AggregateState::cached_entry(std::size_t event_index) const {
    if (mode_ != Mode::MatrixEntry) throw ConfigError("cached_entry: wrong mode");
    if (event_index >= entry_cache_.size()) throw ParamError("cached_entry: index out of range");
    return entry_cache_[event_index];
}

}  // namespace ofw
