#include "freshcsma/engine/markov.hpp"

#include "freshcsma/core/error.hpp"

namespace freshcsma {

MarkovNetState MarkovNetState::symmetric(std::size_t n, double q) {
  return with_probs(std::vector<double>(n, q));
}

MarkovNetState MarkovNetState::with_probs(std::vector<double> q) {
  MarkovNetState s;
  const std::size_t n = q.size();
  s.flip_prob = std::move(q);
  s.x_true.assign(n, 0);
  s.x_est.assign(n, 0);
  s.aoii.assign(n, 0);
  s.validate();
  return s;
}

void MarkovNetState::validate() const {
  const std::size_t n = flip_prob.size();
  if (x_true.size() != n || x_est.size() != n || aoii.size() != n) {
    throw ParameterError("Markov state vectors differ in length");
  }
  for (double q : flip_prob) {
    if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("transition probabilities must be in [0,1]");
  }
  for (auto a : aoii) {
    if (a < 0) throw ParameterError("AoII counters must be non-negative");
  }
}

void MarkovNetState::current_aoii(std::span<std::int64_t> out) const {
  for (std::size_t i = 0; i < size(); ++i) out[i] = x_true[i] != x_est[i] ? aoii[i] + 1 : 0;
}

void markov_transition(MarkovNetState& state, std::span<RngStream> streams) {
  if (streams.size() != state.size()) throw ParameterError("one stream per source is required");
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (streams[i].bernoulli(state.flip_prob[i])) state.x_true[i] ^= 1;
  }
}

void markov_apply_flips(MarkovNetState& state, std::span<const bool> flips) {
  if (flips.size() != state.size()) throw ParameterError("one flip flag per source is required");
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (flips[i]) state.x_true[i] ^= 1;
  }
}

void markov_finish_frame(MarkovNetState& state, const FrameOutcome& outcome) {
  if (outcome.delivered) {
    const SourceIndex j = *outcome.delivered;
    state.x_est.at(j) = state.x_true.at(j);
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    state.aoii[i] = state.x_true[i] == state.x_est[i] ? 0 : state.aoii[i] + 1;
  }
}

}  // namespace freshcsma
