#pragma once

#include <stdexcept>
#include <string>

namespace mellinsphere {

/// Argument outside the mathematical domain of an operation (x <= 0, n out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver missed its residual tolerance within the iteration cap.
class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Adaptive quadrature hit its subdivision cap before reaching the tolerance.
class ToleranceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Contour integrand is not negligible at the truncation points.
class TruncationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Importance weights collapsed (effective sample size too small).
class DegenerateWeightsError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Root bracket could not be established.
class BracketError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw DomainError(message);
    }
}

} // namespace detail

} // namespace mellinsphere
