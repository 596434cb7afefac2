#pragma once

#include <stdexcept>
#include <string>

namespace qhydro {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by matrix constructors asked to work in a regime they cannot represent
/// (e.g. square roots of complex q-numbers).
class UnsupportedRegimeError : public DomainError {
 public:
  explicit UnsupportedRegimeError(const std::string& what) : DomainError(what) {}
};

/// Raised when the splitting target cannot be bracketed by the q fit.
class FitDomainError : public std::runtime_error {
 public:
  explicit FitDomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qhydro
