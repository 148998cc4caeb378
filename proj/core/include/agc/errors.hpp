#pragma once

#include <stdexcept>
#include <string>

namespace agc {

/// Base class for all recoverable toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape or variable-partition mismatch between operands.
struct DimensionError : Error {
    using Error::Error;
};

/// Malformed model file, rational literal, or invalid configuration.
struct ParseError : Error {
    using Error::Error;
};

/// A square matrix required to be invertible has zero determinant.
struct SingularError : Error {
    using Error::Error;
};

/// A system handed to a check that requires input-output form is not in
/// input-output form. Distinct from a negative verdict.
struct IoFormError : Error {
    using Error::Error;
};

} // namespace agc
