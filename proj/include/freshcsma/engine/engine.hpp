#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "freshcsma/core/rng.hpp"
#include "freshcsma/core/types.hpp"
#include "freshcsma/engine/markov.hpp"
#include "freshcsma/engine/metrics.hpp"
#include "freshcsma/engine/step.hpp"
#include "freshcsma/policies/policy.hpp"

namespace freshcsma {

struct MarkovSettings {
  std::vector<double> flip_prob;

  static MarkovSettings symmetric(std::size_t n, double q) {
    return {std::vector<double>(n, q)};
  }
};

/// When a run stops.
struct Horizon {
  enum class Unit { Frames, Deliveries };
  Unit unit = Unit::Frames;
  std::uint64_t count = 1;
  /// Hard frame cap for delivery horizons, so a configuration that collides
  /// every frame still terminates.
  std::uint64_t max_frames = 0;

  static Horizon frames(std::uint64_t n) { return {Unit::Frames, n, n}; }
  static Horizon deliveries(std::uint64_t n, std::uint64_t max_frames_factor = 10) {
    return {Unit::Deliveries, n, n * max_frames_factor};
  }
};

/// Frame-by-frame evolution of one network under one policy.
///
/// Per frame: Markov sources (if any) transition, the policy decides from
/// the frame-start state, contention resolves under the policy's access
/// model, metrics record the frame, ages update, and finally the Markov
/// estimates and AoII counters update.
class Engine {
 public:
  Engine(NetworkConfig config, PolicyKind policy, BackoffParams params,
         std::optional<MarkovSettings> markov = std::nullopt);

  FrameOutcome step();

  /// Runs config.horizon_frames frames.
  SimulationResult run();
  SimulationResult run(const Horizon& horizon);

  SimulationResult result() const;

  const AgeState& ages() const { return ages_; }
  const MarkovNetState* markov_state() const { return markov_ ? &*markov_ : nullptr; }
  const MetricsAccumulator& metrics() const { return metrics_; }
  const Policy& policy() const { return policy_; }
  const NetworkConfig& config() const { return config_; }

  /// One JSON object per frame is written to out; nullptr disables tracing.
  void set_trace(std::ostream* out) { trace_ = out; }

 private:
  void write_trace(const FrameOutcome& outcome) const;

  NetworkConfig config_;
  BackoffParams params_;
  Policy policy_;
  AgeState ages_;
  std::optional<MarkovNetState> markov_;
  std::vector<RngStream> markov_streams_;
  std::vector<std::int64_t> decision_aoii_;
  MetricsAccumulator metrics_;
  std::ostream* trace_ = nullptr;
};

/// Runs config.horizon_frames frames with streams seeded from config.seed.
SimulationResult run(const NetworkConfig& config, PolicyKind policy, const BackoffParams& params,
                     std::optional<MarkovSettings> markov = std::nullopt);

}  // namespace freshcsma
