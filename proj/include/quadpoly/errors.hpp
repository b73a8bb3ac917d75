#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadpoly {

/// Failures of a numerical procedure on valid input (exit code 3 in the CLI).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs that are well formed but outside the domain an operation covers
/// (exit code 2 in the CLI, alongside malformed arguments).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The root solver ran out of iterations. Carries the best iterate.
class NoConvergence : public NumericError {
public:
    NoConvergence(const std::string& what, std::vector<std::complex<double>> best,
                  std::vector<double> residuals)
        : NumericError(what), best_(std::move(best)), residuals_(std::move(residuals)) {}

    const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }
    const std::vector<double>& residuals() const noexcept { return residuals_; }

private:
    std::vector<std::complex<double>> best_;
    std::vector<double> residuals_;
};

class RootNotPresent : public NumericError {
public:
    using NumericError::NumericError;
};

/// A bracket that must contain a sign change did not. Signals a bug.
class BracketFailure : public NumericError {
public:
    using NumericError::NumericError;
};

class NotALimitCase : public DomainError {
public:
    using DomainError::DomainError;
};

class ParityMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace quadpoly
