#pragma once

#include <stdexcept>

namespace qwedge {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad call: out-of-range index, wrong arity, malformed name, non-unitary matrix.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Amplitude count does not match the product of the subsystem dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

// The zero vector cannot be normalized.
class DegenerateStateError : public Error {
public:
    using Error::Error;
};

// Malformed or invalid input document.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qwedge
