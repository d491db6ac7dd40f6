#pragma once

#include <stdexcept>
#include <string>

namespace bwtvar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input data (parse failures, invariant violations).
class InputError : public Error {
public:
    using Error::Error;
};

/// A precondition on arguments does not hold (size guards, wrong variant, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// An efficient result disagrees with its brute-force reference.
class OracleMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace bwtvar
