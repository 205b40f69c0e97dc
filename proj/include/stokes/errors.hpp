#pragma once

#include <stdexcept>
#include <string>

namespace stokes {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, unparsable rationals, inconsistent shapes.
struct ParseError : Error {
    using Error::Error;
};

/// Mathematical failure: an operation's precondition is violated by the
/// data itself (resonance, non-invertible leading structure, failed
/// cancellation, etale condition, exhausted windows).
struct MathError : Error {
    using Error::Error;
};

struct VarMismatchError : MathError {
    using MathError::MathError;
};

struct WindowError : MathError {
    using MathError::MathError;
};

struct InvertError : MathError {
    using MathError::MathError;
};

/// Raised by the formal gauge solver when some order's linear system is
/// singular or left undetermined by the truncated equations.
struct ResonanceError : MathError {
    ResonanceError(const std::string& what, int order)
        : MathError(what), failing_order(order) {}
    int failing_order;
};

/// Raised by resum when a coefficient that must vanish (negative or
/// fractional exponent) survives; signals inconsistent inputs.
struct CancellationError : MathError {
    using MathError::MathError;
};

struct EtaleError : MathError {
    using MathError::MathError;
};

/// Numeric tolerance could not be met (oracle integrators, verdicts).
struct ToleranceError : Error {
    using Error::Error;
};

} // namespace stokes
