#pragma once

#include <array>
#include <string>
#include <string_view>

#include "freshcsma/core/types.hpp"

namespace freshcsma {

enum class PolicyKind {
  MaxWeight,
  StationaryRandomizedOptimal,
  IdealizedCsma,
  IdealizedFreshCsma,
  NearRealisticFreshCsma,
  MaxAoii,
  IdealizedFreshCsmaAoii,
  NearRealisticFreshCsmaAoii,
};

inline constexpr std::array<PolicyKind, 8> kAllPolicyKinds{
    PolicyKind::MaxWeight,          PolicyKind::StationaryRandomizedOptimal,
    PolicyKind::IdealizedCsma,      PolicyKind::IdealizedFreshCsma,
    PolicyKind::NearRealisticFreshCsma, PolicyKind::MaxAoii,
    PolicyKind::IdealizedFreshCsmaAoii, PolicyKind::NearRealisticFreshCsmaAoii,
};

/// What state a policy reads when it decides.
enum class Freshness { None, FrameAge, Aoii };

struct PolicyTraits {
  /// Centralized policies name one source; distributed ones emit N timers.
  bool centralized;
  Freshness input;
  AccessModel model;
};

PolicyTraits traits(PolicyKind kind);

/// Stable snake_case name used in configs and CSV output.
std::string_view to_string(PolicyKind kind);

/// Accepts the snake_case name. Throws ParameterError otherwise.
PolicyKind parse_policy_kind(std::string_view name);

}  // namespace freshcsma
