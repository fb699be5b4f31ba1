#pragma once

#include <stdexcept>
#include <string>

namespace csusy {

/// Base class for all numerical failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Series did not meet its tolerance within the term cap.
struct NonConvergence : Error { using Error::Error; };

/// A series parameter hit a pole (non-positive integer denominator).
struct PoleError : Error { using Error::Error; };

/// Argument outside the documented safe evaluation range.
struct OverflowError : Error { using Error::Error; };

/// The integrand has a zero of u on the integration path.
struct SingularIntegrand : Error { using Error::Error; };

/// Adaptive quadrature exhausted its subdivision budget.
struct QuadFailure : Error { using Error::Error; };

/// W_{u1,u2} differs from 1 beyond tolerance at the base point.
struct WronskianNotUnit : Error { using Error::Error; };

/// Transformation Wronskian vanishes at the evaluation point.
struct WronskianZero : Error { using Error::Error; };

/// Endpoint limit sequence failed its Cauchy test.
struct LimitNotResolved : Error { using Error::Error; };

/// ODE integration produced NaN or overflow.
struct StepFailure : Error { using Error::Error; };

/// Division by a vanishing solution value.
struct DivisionByZero : Error { using Error::Error; };

/// Invalid run configuration (CLI layer).
struct ConfigError : Error { using Error::Error; };

} // namespace csusy
