#pragma once

#include <cstdint>
#include <span>

#include "freshcsma/core/types.hpp"
#include "freshcsma/policies/policy.hpp"

namespace freshcsma {

/// Continuous contention over ln Z_i: the earliest timer wins. An exact tie
/// (probability zero, possible only through floating-point coincidence) is
/// resolved as a collision.
FrameOutcome resolve_continuous(std::span<const double> log_timers);

/// Minislot contention: D(t) = min_i D_i, every source attaining it
/// transmits, and the frame lasts 1 + D(t)/M whether or not it collides.
FrameOutcome resolve_discrete(std::span<const std::int64_t> timers,
                              std::int64_t minislots_per_update);

/// A centralized choice: the named source is the unique winner.
FrameOutcome resolve_centralized(SourceIndex source);

/// Turns a policy decision into the frame outcome under the policy's model.
FrameOutcome resolve_decision(const Decision& decision, const Policy& policy);

/// Age update at frame end. Frame ages follow A_i <- 1 on delivery, A_i + 1
/// otherwise; clock ages grow by the frame duration and the delivered
/// source's clock age becomes the frame duration.
void apply_outcome(AgeState& ages, const FrameOutcome& outcome);

/// One idealized frame. The policy must be centralized or idealized.
FrameOutcome step_idealized(AgeState& ages, Policy& policy,
                            std::span<const std::int64_t> aoii = {});

/// One near-realistic frame. The policy must emit minislot timers.
FrameOutcome step_near_realistic(AgeState& ages, Policy& policy,
                                 std::span<const std::int64_t> aoii = {});

}  // namespace freshcsma
