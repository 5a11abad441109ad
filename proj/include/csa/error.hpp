#pragma once

#include <stdexcept>
#include <string>

namespace csa {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid inputs: shape mismatches, bad ids, malformed arguments.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// File-format and filesystem problems.
class IoError : public Error {
public:
    using Error::Error;
};

/// Numerical failures: decompositions, conditioning, degenerate data.
class NumericalError : public Error {
public:
    using Error::Error;
};

class DecompositionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotPositiveDefiniteError : public NumericalError {
public:
    NotPositiveDefiniteError(const std::string& msg, double smallest)
        : NumericalError(msg), smallest_eigenvalue(smallest) {}
    double smallest_eigenvalue;
};

/// A vector whose truncated norm is zero cannot be scored.
class DegenerateVectorError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Threshold s-selection found no canonical correlation above the cutoff.
class NoDimensionQualifiesError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace csa
