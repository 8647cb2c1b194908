#pragma once

#include <stdexcept>
#include <string>

namespace altinv {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument (even modulus, nonpositive scale, degree above cap, ...).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

/// Evaluation requested at an excluded point of a function's domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A regime was requested whose precondition does not hold.
class RegimeError : public Error {
public:
    explicit RegimeError(const std::string& what) : Error(what) {}
};

/// A series failed to converge within the configured limits.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

/// Adaptive quadrature exhausted its refinement budget.
class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& what) : Error(what) {}
};

} // namespace altinv
