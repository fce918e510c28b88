#pragma once

#include <stdexcept>
#include <string>

namespace gk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: parse failures, schema violations, inconsistent geometry data.
class InputError : public Error {
public:
    using Error::Error;
};

/// A named precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace gk
