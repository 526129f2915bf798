#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "freshcsma/core/rng.hpp"
#include "freshcsma/core/types.hpp"

namespace freshcsma {

/// Binary symmetric Markov sources and the base station's view of them.
///
/// aoii holds the counter as of the end of the last frame. At decision time
/// a source's AoII is aoii + 1 if its state currently disagrees with the
/// estimate and 0 otherwise; that is the value the frame-end recursion
/// produces when the source does not deliver.
struct MarkovNetState {
  std::vector<double> flip_prob;
  std::vector<std::uint8_t> x_true;
  std::vector<std::uint8_t> x_est;
  std::vector<std::int64_t> aoii;

  /// All sources in state 0, estimates correct, zero AoII.
  static MarkovNetState symmetric(std::size_t n, double q);
  static MarkovNetState with_probs(std::vector<double> q);

  std::size_t size() const { return flip_prob.size(); }
  void validate() const;

  /// AoII_i at decision time (see above).
  void current_aoii(std::span<std::int64_t> out) const;
};

/// Flips each source's state with its own probability, one draw per source.
void markov_transition(MarkovNetState& state, std::span<RngStream> streams);

/// Applies an explicit flip mask (for tests and replays).
void markov_apply_flips(MarkovNetState& state, std::span<const bool> flips);

/// Frame end: a delivered source refreshes its estimate, then every
/// counter resets on agreement and grows by one on disagreement.
void markov_finish_frame(MarkovNetState& state, const FrameOutcome& outcome);

}  // namespace freshcsma
