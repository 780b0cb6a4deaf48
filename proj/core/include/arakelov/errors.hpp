#pragma once

#include <stdexcept>
#include <string>

namespace arakelov {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, scenario fields).
class ParseError : public Error {
public:
    using Error::Error;
};

// Argument outside the domain of an operation, or a violated precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

// Reference to a point the curve model does not know, or mixing curves.
class ModelError : public Error {
public:
    using Error::Error;
};

// A value violating a type invariant at construction time.
class ConstructionError : public Error {
public:
    using Error::Error;
};

// Exact computation requested outside the genus-0 model, or non-integral data
// where the harness needs integral data.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// An integral that does not converge.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// No feasible section / empty feasible region.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// Internal consistency failure. Always a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace arakelov
