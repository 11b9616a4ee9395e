#pragma once

#include <stdexcept>

namespace casidual {

// Thrown when an adaptive quadrature, a truncated series, or an
// extrapolation cannot reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace casidual
