#pragma once

#include <stdexcept>
#include <string>

namespace stablekernel {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested κ has the wrong exact parity for the chosen asymptotic branch.
class ParityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Grid too coarse for the oscillation it has to resolve.
class ResolutionError : public DomainError {
public:
    using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Order or dimension the implementation deliberately does not cover.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative numerical procedure ran out of budget before reaching its tolerance.
class NoConvergenceError : public std::runtime_error {
public:
    NoConvergenceError(const std::string& what, double best_estimate, double best_error)
        : std::runtime_error(what), best_estimate_(best_estimate), best_error_(best_error) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double best_error() const noexcept { return best_error_; }

private:
    double best_estimate_;
    double best_error_;
};

}  // namespace stablekernel
