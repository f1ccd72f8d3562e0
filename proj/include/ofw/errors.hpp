#pragma once

#include <stdexcept>
#include <string>

namespace ofw {

// Parameter out of its documented range (bad alpha, bad index, ...).
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inconsistent configuration (missing beta for the smooth setting, ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// NaN input, zero matrix where a nonzero one is required, SVD failure.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Atoms of different ambient shapes mixed in one iterate.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Domain has no feasible point (no s->t path in a flow graph).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file or stream shorter than the requested horizon.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A declared analytic constant does not hold on observed data
// (e.g. a subgradient larger than the declared Lipschitz bound).
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ofw
