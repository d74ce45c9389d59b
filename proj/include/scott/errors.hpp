#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scott {

// Argument outside the domain an operation is defined on (γ ≥ 1, tol out of
// range, r ≤ 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// An iterative procedure did not reach its target within its resource caps.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// shift(): the tail bound could not be driven below the requested tolerance.
class ToleranceUnreachable : public ConvergenceError {
public:
  using ConvergenceError::ConvergenceError;
};

// Exchange hole requested for a density carrying less than half an electron.
class InsufficientCharge : public DomainError {
public:
  using DomainError::DomainError;
};

// Malformed tabular input. line() is 1-based; 0 means "whole input".
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace scott
