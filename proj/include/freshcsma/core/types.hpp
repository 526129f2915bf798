#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace freshcsma {

using SourceIndex = std::size_t;

/// Which medium-access model a frame is resolved under.
enum class AccessModel {
  /// Continuous timers, instant sensing, zero backoff overhead, unit frames.
  Idealized,
  /// Integer minislot timers; frames last 1 + D/M and may collide.
  NearRealistic,
};

struct NetworkConfig {
  std::size_t n_sources = 1;
  std::vector<double> weights{1.0};
  std::uint64_t horizon_frames = 1;
  std::uint64_t seed = 0;
  /// Require integer weights, as the per-frame matching and drift theorems do.
  bool theorem_exact = false;

  /// Throws ParameterError when an invariant fails.
  void validate() const;

  static NetworkConfig uniform(std::size_t n, std::uint64_t horizon_frames = 1,
                               std::uint64_t seed = 0);
};

struct BackoffParams {
  double alpha = 2.0;
  double beta = 2.0;
  std::int64_t b_offset = 0;
  std::int64_t minislots_per_update = 10000;
  /// Idealized timer scale. Timers are compared, never waited on, so it has
  /// no effect on any simulated quantity; it is carried for traces.
  double delta_scale = 0.01;

  void validate() const;
};

/// Largest backoff offset accepted; keeps every discretized timer well
/// inside the exactly representable integer range of a double.
inline constexpr std::int64_t kMaxBackoffOffset = std::int64_t{1} << 40;

/// Per-source ages. frame_age drives the policies;
/// clock_age is wall-clock age in update-transmission units.
struct AgeState {
  std::vector<std::int64_t> frame_age;
  std::vector<double> clock_age;

  /// All sources at age 1 (one frame-equivalent).
  static AgeState fresh(std::size_t n);
  static AgeState from_frame_ages(std::vector<std::int64_t> ages);

  std::size_t size() const { return frame_age.size(); }
  void validate() const;
};

/// ln(lambda_i) = w_i * A_i^2 * ln(alpha).
struct LogRate {
  std::vector<double> log_lambda;

  static LogRate from_ages(std::span<const double> weights, std::span<const std::int64_t> ages,
                           double alpha);

  /// lambda_i in the linear domain. Throws EvaluationError if any exponent
  /// exceeds the safety threshold.
  std::vector<double> linear(double max_log = kLinearSafetyLog) const;

  static constexpr double kLinearSafetyLog = 700.0;
};

struct FrameOutcome {
  std::vector<SourceIndex> winners;
  /// Minimum timer: D(t) in minislots (near-realistic), Z(t) (idealized
  /// contention; may underflow to zero), 0 for centralized decisions.
  double min_timer = 0.0;
  /// Idle minislots before the winners start transmitting; 0 when idealized.
  std::int64_t backoff_minislots = 0;
  bool collided = false;
  std::optional<SourceIndex> delivered;
  double frame_duration = 1.0;
};

}  // namespace freshcsma
