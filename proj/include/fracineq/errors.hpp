#pragma once

#include <stdexcept>
#include <string>

namespace fracineq {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's contract (bad order, empty interval, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Adaptive or brute-force integration failed to reach its target before
/// hitting the subdivision/evaluation cap.  Carries the partial result.
class NonConvergent : public Error {
public:
    NonConvergent(const std::string& msg, double value, double est_error, long work)
        : Error(msg), value(value), est_error(est_error), work(work) {}

    double value;
    double est_error;
    long work;  // panels or grid points, depending on the integrator
};

/// Derivative requested from a function family that has kinks.
class NoDerivative : public Error {
public:
    using Error::Error;
};

/// A check needs a convex/concave certificate the function does not carry.
class ShapeUnknown : public Error {
public:
    using Error::Error;
};

/// Weight failed its nonnegativity or symmetry screen.
class WeightInvalid : public Error {
public:
    using Error::Error;
};

/// Function failed the nonnegativity screen of a product inequality.
class NegativeFunction : public Error {
public:
    using Error::Error;
};

}  // namespace fracineq
