#pragma once

#include <stdexcept>
#include <string>

namespace chaoskit {

/// Raised when an argument lies outside the domain an operation accepts.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a bisection bracket does not straddle the condition it searches for.
class BracketError : public std::invalid_argument {
public:
    explicit BracketError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an iterative search ends without meeting its own postconditions.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chaoskit
