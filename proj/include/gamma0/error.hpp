#pragma once

#include <stdexcept>
#include <string>

namespace gamma0 {

// Every library failure derives from Error; the CLI maps the concrete type to
// an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain a table or guard was built for.
class RangeError : public Error {
public:
    using Error::Error;
};

// Requested allocation exceeds the configured memory budget.
class CapacityError : public RangeError {
public:
    using RangeError::RangeError;
};

// Intermediate would not fit the integer width in use.
class OverflowError : public RangeError {
public:
    using RangeError::RangeError;
};

// Query violating a documented invariant (e.g. residue not a unit).
class InvalidQuery : public Error {
public:
    using Error::Error;
};

// A method declined to run because its guard limit was exceeded.
class GuardRefusal : public RangeError {
public:
    using RangeError::RangeError;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gamma0
