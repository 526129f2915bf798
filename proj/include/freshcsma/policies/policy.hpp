#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "freshcsma/core/rng.hpp"
#include "freshcsma/core/types.hpp"
#include "freshcsma/policies/decisions.hpp"
#include "freshcsma/policies/policy_kind.hpp"

namespace freshcsma {

struct Decision {
  /// Set by centralized policies.
  std::optional<SourceIndex> scheduled;
  /// Filled by distributed policies.
  TimerVector timers;
};

/// A scheduling rule bound to its parameters and random streams.
///
/// Each source owns a timer substream and the policy owns separate
/// tie-break and sampling substreams, all keyed by (seed, policy kind), so
/// two policies run on the same seed never perturb each other's draws.
class Policy {
 public:
  Policy(PolicyKind kind, std::vector<double> weights, BackoffParams params, std::uint64_t seed);

  PolicyKind kind() const { return kind_; }
  const PolicyTraits& traits() const { return traits_; }
  AccessModel model() const { return traits_.model; }
  std::size_t size() const { return weights_.size(); }
  const BackoffParams& params() const { return params_; }
  std::span<const double> weights() const { return weights_; }

  /// aoii must hold one value per source for AoII-driven policies. The
  /// returned reference stays valid until the next call.
  const Decision& decide(const AgeState& ages, std::span<const std::int64_t> aoii = {});

 private:
  PolicyKind kind_;
  PolicyTraits traits_;
  std::vector<double> weights_;
  BackoffParams params_;
  std::vector<RngStream> source_streams_;
  RngStream tie_stream_;
  RngStream central_stream_;
  std::vector<double> sr_cumulative_;
  Decision decision_;
};

}  // namespace freshcsma
