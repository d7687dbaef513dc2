#pragma once

#include <stdexcept>
#include <string>

namespace qfano {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The support digraph of a quiver contains a directed cycle.
class CycleError : public Error {
public:
    using Error::Error;
};

// A vertex index lies outside [0, n).
class IndexError : public Error {
public:
    using Error::Error;
};

// An intermediate value does not fit into the working integer width.
class OverflowError : public Error {
public:
    using Error::Error;
};

// An enumeration would visit more elements than the caller allowed.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// gcd of the dimension vector is not 1, so no integral section exists.
class NotIndivisible : public Error {
public:
    using Error::Error;
};

// Caller violated a documented precondition (length mismatch, negative
// entry, base stability not certified, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Malformed JSON or command-line value.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qfano
