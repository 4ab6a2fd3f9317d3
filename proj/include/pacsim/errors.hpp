#pragma once

#include <stdexcept>
#include <string>

namespace pacsim {

/// Base class for all pacsim errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument violates a precondition (negative bandwidth, L < 0, ...).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

/// Inputs are individually valid but cannot be combined
/// (e.g. overlapping profiles with different central frequencies).
class UnsupportedConfigError : public Error {
public:
    explicit UnsupportedConfigError(const std::string& msg) : Error(msg) {}
};

/// Adaptive quadrature failed to reach the requested tolerance.
/// Carries the best estimate and its error bound.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double best_estimate, double error_bound)
        : Error(msg), best_estimate(best_estimate), error_bound(error_bound) {}

    double best_estimate;
    double error_bound;
};

/// Requested loss target needs an infinite propagation length (eta = 0).
class InfiniteLengthError : public ParameterError {
public:
    explicit InfiniteLengthError(const std::string& msg) : ParameterError(msg) {}
};

/// Channel has k_i = 0, so no finite length reaches eta < 1.
class NoLossError : public ParameterError {
public:
    explicit NoLossError(const std::string& msg) : ParameterError(msg) {}
};

/// The ideal reference state is undefined (fidelity with n_alpha = 0).
class UndefinedReferenceError : public Error {
public:
    explicit UndefinedReferenceError(const std::string& msg) : Error(msg) {}
};

}  // namespace pacsim
