#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bctk {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inversion or a sign/argument was requested for a zero divisor or zero.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// A positive hyperbolic number was required (e.g. square root input).
class NotPositive : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The operation is undefined at zero.
class ZeroInput : public Error {
public:
    using Error::Error;
};

/// Point is not on the unit D-sphere (within tolerance).
class NotOnSphere : public Error {
public:
    using Error::Error;
};

/// Structurally invalid parameters (mesh size, ball radius, interval bounds).
class BadParameters : public Error {
public:
    using Error::Error;
};

/// Point outside the convergence domain of a series/integral.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// A zeta evaluation hit the singular set (an idempotent component equal to 1).
class OnSingularSet : public Error {
public:
    using Error::Error;
};

/// Evaluation exactly at a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Evaluation within the guard distance of a pole; the result would be
/// dominated by the pole and is refused instead of returned.
class NearPole : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not reach the requested error budget.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

/// Literal text did not match the grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace bctk
