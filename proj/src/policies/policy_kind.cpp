#include "freshcsma/policies/policy_kind.hpp"

#include <string>

#include "freshcsma/core/error.hpp"

namespace freshcsma {

PolicyTraits traits(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::MaxWeight:
      return {true, Freshness::FrameAge, AccessModel::Idealized};
    case PolicyKind::StationaryRandomizedOptimal:
      return {true, Freshness::None, AccessModel::Idealized};
    case PolicyKind::IdealizedCsma:
      return {false, Freshness::None, AccessModel::Idealized};
    case PolicyKind::IdealizedFreshCsma:
      return {false, Freshness::FrameAge, AccessModel::Idealized};
    case PolicyKind::NearRealisticFreshCsma:
      return {false, Freshness::FrameAge, AccessModel::NearRealistic};
    case PolicyKind::MaxAoii:
      return {true, Freshness::Aoii, AccessModel::Idealized};
    case PolicyKind::IdealizedFreshCsmaAoii:
      return {false, Freshness::Aoii, AccessModel::Idealized};
    case PolicyKind::NearRealisticFreshCsmaAoii:
      return {false, Freshness::Aoii, AccessModel::NearRealistic};
  }
  throw ParameterError("unknown policy kind");
}

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::MaxWeight:
      return "max_weight";
    case PolicyKind::StationaryRandomizedOptimal:
      return "stationary_randomized";
    case PolicyKind::IdealizedCsma:
      return "idealized_csma";
    case PolicyKind::IdealizedFreshCsma:
      return "idealized_fresh_csma";
    case PolicyKind::NearRealisticFreshCsma:
      return "near_realistic_fresh_csma";
    case PolicyKind::MaxAoii:
      return "max_aoii";
    case PolicyKind::IdealizedFreshCsmaAoii:
      return "idealized_fresh_csma_aoii";
    case PolicyKind::NearRealisticFreshCsmaAoii:
      return "near_realistic_fresh_csma_aoii";
  }
  return "unknown";
}

PolicyKind parse_policy_kind(std::string_view name) {
  for (PolicyKind kind : kAllPolicyKinds) {
    if (to_string(kind) == name) return kind;
  }
  throw ParameterError("unknown policy '" + std::string(name) + "'");
}

}  // namespace freshcsma
