#include "ofw/atoms.hpp"

#include <cmath>

namespace ofw {

BoundaryAtom BoundaryAtom::Dense(VectorXd v) {
    if (v.size() == 0) throw ParamError("dense atom: empty vector");
    BoundaryAtom a;
    a.rep_ = std::move(v);
    return a;
}

BoundaryAtom BoundaryAtom::RankOne(double scale, VectorXd left, VectorXd right) {
    if (left.size() == 0 || right.size() == 0)
        throw ParamError("rank-one atom: empty factor");
    if (std::abs(left.norm() - 1.0) > 1e-9 || std::abs(right.norm() - 1.0) > 1e-9)
        throw ParamError("rank-one atom: factors must have unit norm");
    BoundaryAtom a;
    a.rep_ = RankOneFactor{scale, std::move(left), std::move(right)};
    return a;
}

Index BoundaryAtom::dim() const {
    if (is_rank_one()) {
        const auto& f = factor();
        return f.left.size() * f.right.size();
    }
    return vec().size();
}

VectorXd BoundaryAtom::densify() const {
    if (!is_rank_one()) return vec();
    const auto& f = factor();
    const Index m = f.left.size(), n = f.right.size();
    VectorXd out(m * n);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j)
            out[i * n + j] = f.scale * f.left[i] * f.right[j];
    return out;
}

double BoundaryAtom::entry(Index i, Index j) const {
    if (!is_rank_one()) throw ShapeError("entry(): dense atom has no matrix shape");
    const auto& f = factor();
    if (i < 0 || i >= f.left.size() || j < 0 || j >= f.right.size())
        throw ParamError("entry(): index out of range");
    return f.scale * f.left[i] * f.right[j];
}

SparseIterate SparseIterate::Single(BoundaryAtom v) {
    SparseIterate x;
    x.atoms.push_back(std::move(v));
    x.weights.push_back(1.0);
    x.round = 1;
    return x;
}

void SparseIterate::check_invariants() const {
    if (atoms.size() != weights.size())
        throw ShapeError("iterate: atom/weight count mismatch");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ParamError("iterate: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ParamError("iterate: weights do not sum to 1");
    if (static_cast<int>(atoms.size()) > round)
        throw ParamError("iterate: support exceeds round index");
}

SparseIterate iterate_mix(const SparseIterate& x, const BoundaryAtom& v, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParamError("iterate_mix: alpha outside [0,1]");
    SparseIterate out;
    out.round = x.round + 1;
    out.atoms.reserve(x.atoms.size() + 1);
    out.weights.reserve(x.atoms.size() + 1);
    const double keep = 1.0 - alpha;
    for (std::size_t k = 0; k < x.atoms.size(); ++k) {
        const double w = x.weights[k] * keep;
        if (w < kWeightPruneThreshold) continue;
        out.atoms.push_back(x.atoms[k]);
        out.weights.push_back(w);
    }
    if (alpha >= kWeightPruneThreshold) {
        out.atoms.push_back(v);
        out.weights.push_back(alpha);
    }
    return out;
}

VectorXd iterate_densify(const SparseIterate& x) {
    if (x.atoms.empty()) throw ShapeError("iterate_densify: empty iterate");
    const Index d = x.atoms.front().dim();
    const bool matrix = x.atoms.front().is_rank_one();
    VectorXd out = VectorXd::Zero(d);
    for (std::size_t k = 0; k < x.atoms.size(); ++k) {
        const auto& a = x.atoms[k];
        if (a.is_rank_one() != matrix || a.dim() != d)
            throw ShapeError("iterate_densify: mixed atom shapes");
        out += x.weights[k] * a.densify();
    }
    return out;
}

double iterate_entry(const SparseIterate& x, Index i, Index j) {
    double val = 0.0;
    for (std::size_t k = 0; k < x.atoms.size(); ++k) {
        if (!x.atoms[k].is_rank_one())
            throw ShapeError("iterate_entry: dense atom present");
        val += x.weights[k] * x.atoms[k].entry(i, j);
    }
    return val;
}

}  // namespace ofw
