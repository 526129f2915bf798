#pragma once

#include <stdexcept>
#include <string>

namespace freshcsma {

/// Structurally invalid configuration or protocol parameters.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what);
};

/// A special function was evaluated outside its domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what);
};

/// A closed-form expression could not be evaluated to a finite value.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what);
};

}  // namespace freshcsma
