#pragma once

#include <stdexcept>
#include <string>

namespace casex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad call arguments: inconsistent half-integers, negative fields, j < omega_bar, ...
struct ArgumentError : Error {
    using Error::Error;
};

// A molecule config violating a state invariant; the message names the field.
struct ValidationError : ArgumentError {
    using ArgumentError::ArgumentError;
};

// Factorial/Wigner arguments beyond the precomputed cap.
struct RangeError : ArgumentError {
    using ArgumentError::ArgumentError;
};

// Both combined-field axes (or the requested one) have vanishing magnitude,
// so m_kappa labels are undefined.
struct DegenerateAxisError : Error {
    using Error::Error;
};

// Non-finite matrix entries or a failed eigendecomposition.
struct NumericError : Error {
    using Error::Error;
};

} // namespace casex
