#pragma once

#include <stdexcept>
#include <string>

namespace gbessel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failures of the numerics itself (bad kappa, series did not converge,
/// vanishing denominators). The CLI maps these to exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

class InvalidKappa : public NumericError {
public:
    using NumericError::NumericError;
};

class NoConvergence : public NumericError {
public:
    using NumericError::NumericError;
};

class DegenerateDenominator : public NumericError {
public:
    using NumericError::NumericError;
};

/// Caller passed arguments outside an operation's domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class OrderOutOfRange : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class ZeroC : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class UnknownCorollary : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

}  // namespace gbessel
