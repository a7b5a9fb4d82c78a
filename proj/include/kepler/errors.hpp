#pragma once

#include <stdexcept>
#include <string>

namespace kepler {

/// Input outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// e = 1 (parabolic limit). Kept distinct from DomainError because f' = 1 - e cos E
/// can vanish there and none of the convergence bounds apply.
class EccentricityOneError : public DomainError {
public:
    EccentricityOneError() : DomainError("eccentricity e = 1 is not an elliptic orbit") {}
};

/// A lookup-table query landed in a region the table cannot serve.
class UnsupportedRegionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent serialized lookup table.
class CorruptFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iteration that is proven to converge did not. Indicates a bug, not bad input.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kepler
