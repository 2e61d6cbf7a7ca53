#pragma once

#include <stdexcept>
#include <string>

namespace milnor_hodge {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input parsed but does not match the expected shape (missing fields,
/// inconsistent dimensions, unknown stratum names, cycles in an order).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition failed: pole at y = 0, non-exact division,
/// exponents out of range and so on.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace milnor_hodge
