#include "freshcsma/engine/engine.hpp"

#include <json.hpp>
#include <ostream>

#include "freshcsma/core/error.hpp"

namespace freshcsma {

Engine::Engine(NetworkConfig config, PolicyKind policy, BackoffParams params,
               std::optional<MarkovSettings> markov)
    : config_(std::move(config)),
      params_(params),
      policy_(policy, (config_.validate(), config_.weights), params, config_.seed),
      ages_(AgeState::fresh(config_.n_sources)),
      metrics_(config_.n_sources) {
  if (markov) {
    if (markov->flip_prob.size() != config_.n_sources) {
      throw ParameterError("one transition probability per source is required");
    }
    markov_ = MarkovNetState::with_probs(markov->flip_prob);
    markov_streams_.reserve(config_.n_sources);
    for (std::size_t i = 0; i < config_.n_sources; ++i) {
      markov_streams_.emplace_back(
          config_.seed, substream_id(StreamRole::MarkovSource, 0, static_cast<std::uint32_t>(i)));
    }
    decision_aoii_.assign(config_.n_sources, 0);
  } else if (policy_.traits().input == Freshness::Aoii) {
    throw ParameterError("AoII-driven policies need Markov sources");
  }
}

FrameOutcome Engine::step() {
  std::span<const std::int64_t> aoii;
  if (markov_) {
    markov_transition(*markov_, markov_streams_);
    markov_->current_aoii(decision_aoii_);
    aoii = decision_aoii_;
  }
  FrameOutcome outcome = resolve_decision(policy_.decide(ages_, aoii), policy_);
  metrics_.record(ages_, outcome, aoii);
  apply_outcome(ages_, outcome);
  if (markov_) markov_finish_frame(*markov_, outcome);
  if (trace_) write_trace(outcome);
  return outcome;
}

SimulationResult Engine::run() { return run(Horizon::frames(config_.horizon_frames)); }

SimulationResult Engine::run(const Horizon& horizon) {
  if (horizon.count == 0) throw ParameterError("horizon must be positive");
  if (horizon.unit == Horizon::Unit::Frames) {
    for (std::uint64_t t = 0; t < horizon.count; ++t) step();
  } else {
    const std::uint64_t cap = horizon.max_frames == 0 ? horizon.count * 10 : horizon.max_frames;
    const std::uint64_t target = metrics_.delivery_total + horizon.count;
    std::uint64_t frames = 0;
    while (metrics_.delivery_total < target && frames < cap) {
      step();
      ++frames;
    }
  }
  return result();
}

SimulationResult Engine::result() const {
  return summarize(metrics_, config_, params_, policy_.kind(), markov_.has_value());
}

void Engine::write_trace(const FrameOutcome& outcome) const {
  nlohmann::json rec;
  rec["frame"] = metrics_.frame_count;
  rec["min_timer"] = outcome.min_timer;
  rec["backoff_minislots"] = outcome.backoff_minislots;
  rec["winners"] = outcome.winners;
  rec["collided"] = outcome.collided;
  rec["delivered"] = outcome.delivered ? nlohmann::json(*outcome.delivered) : nlohmann::json();
  rec["duration"] = outcome.frame_duration;
  rec["elapsed"] = metrics_.elapsed_time;
  rec["delta_scale"] = params_.delta_scale;
  *trace_ << rec.dump() << '\n';
}

SimulationResult run(const NetworkConfig& config, PolicyKind policy, const BackoffParams& params,
                     std::optional<MarkovSettings> markov) {
  Engine engine(config, policy, params, std::move(markov));
  return engine.run();
}

}  // namespace freshcsma
