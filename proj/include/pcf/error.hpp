#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

/// Malformed or inconsistent user input: graph files, generator parameters,
/// ordering and colouring files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact search was asked to run on a graph larger than its vertex limit.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A colouring ran out of its guaranteed palette. Indicates a bug, never bad input.
class BoundViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pcf
