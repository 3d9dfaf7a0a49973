#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

// Raised when an argument leaves the mathematical domain of an operation
// (evaluation at a mass pole, non-bijective coordinate map, incompatible
// potential/family pairing, invalid configuration).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an iterative scheme fails to reach its tolerance
// (quadrature refinement, energy bisection, root bracketing).
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pdm
