#include "freshcsma/engine/step.hpp"

#include <cmath>

#include "freshcsma/core/error.hpp"
#include "freshcsma/simd/kernels.hpp"

namespace freshcsma {

namespace {

template <typename T>
void collect_winners(std::span<const T> values, const simd::Extremum<T>& ext,
                     FrameOutcome& outcome) {
  outcome.winners.clear();
  outcome.winners.reserve(ext.count);
  for (std::size_t i = ext.first; i < values.size() && outcome.winners.size() < ext.count; ++i) {
    if (values[i] == ext.value) outcome.winners.push_back(i);
  }
  outcome.collided = ext.count > 1;
  if (!outcome.collided) outcome.delivered = ext.first;
}

}  // namespace

FrameOutcome resolve_continuous(std::span<const double> log_timers) {
  const auto ext = simd::min_element(log_timers);
  FrameOutcome outcome;
  collect_winners(log_timers, ext, outcome);
  outcome.min_timer = std::exp(ext.value);
  outcome.frame_duration = 1.0;
  return outcome;
}

FrameOutcome resolve_discrete(std::span<const std::int64_t> timers,
                              std::int64_t minislots_per_update) {
  if (minislots_per_update < 1) throw ParameterError("minislots_per_update must be >= 1");
  const auto ext = simd::min_element(timers);
  FrameOutcome outcome;
  collect_winners(timers, ext, outcome);
  outcome.min_timer = static_cast<double>(ext.value);
  outcome.backoff_minislots = ext.value;
  outcome.frame_duration =
      1.0 + static_cast<double>(ext.value) / static_cast<double>(minislots_per_update);
  return outcome;
}

FrameOutcome resolve_centralized(SourceIndex source) {
  FrameOutcome outcome;
  outcome.winners = {source};
  outcome.delivered = source;
  return outcome;
}

FrameOutcome resolve_decision(const Decision& decision, const Policy& policy) {
  if (decision.scheduled) return resolve_centralized(*decision.scheduled);
  if (policy.model() == AccessModel::NearRealistic) {
    return resolve_discrete(decision.timers.minislots, policy.params().minislots_per_update);
  }
  return resolve_continuous(decision.timers.log_timers);
}

void apply_outcome(AgeState& ages, const FrameOutcome& outcome) {
  const double d = outcome.frame_duration;
  for (std::size_t i = 0; i < ages.size(); ++i) {
    ages.frame_age[i] += 1;
    ages.clock_age[i] += d;
  }
  if (outcome.delivered) {
    ages.frame_age.at(*outcome.delivered) = 1;
    ages.clock_age.at(*outcome.delivered) = d;
  }
}

FrameOutcome step_idealized(AgeState& ages, Policy& policy, std::span<const std::int64_t> aoii) {
  if (policy.model() != AccessModel::Idealized) {
    throw ParameterError("step_idealized needs a centralized or idealized policy");
  }
  FrameOutcome outcome = resolve_decision(policy.decide(ages, aoii), policy);
  apply_outcome(ages, outcome);
  return outcome;
}

FrameOutcome step_near_realistic(AgeState& ages, Policy& policy,
                                 std::span<const std::int64_t> aoii) {
  if (policy.model() != AccessModel::NearRealistic) {
    throw ParameterError("step_near_realistic needs a near-realistic policy");
  }
  FrameOutcome outcome = resolve_decision(policy.decide(ages, aoii), policy);
  apply_outcome(ages, outcome);
  return outcome;
}

}  // namespace freshcsma
