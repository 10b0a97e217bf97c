#pragma once

#include <stdexcept>
#include <string>

namespace coshbar {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (negative k, non-finite values, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Argument sits on a gamma-function pole.
class PoleError : public Error {
public:
    using Error::Error;
};

// A connection formula or denominator is numerically singular.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Series, quadrature, or grid refinement failed to converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Two independent evaluation routes disagree beyond tolerance.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Least-squares asymptotic fit is ill-conditioned.
class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace coshbar
