#include "freshcsma/core/error.hpp"

namespace freshcsma {

ParameterError::ParameterError(const std::string& what) : std::invalid_argument(what) {}

DomainError::DomainError(const std::string& what) : std::domain_error(what) {}

EvaluationError::EvaluationError(const std::string& what) : std::runtime_error(what) {}

}  // namespace freshcsma
