#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "freshcsma/core/types.hpp"
#include "freshcsma/policies/policy_kind.hpp"

namespace freshcsma {

/// Running sums behind every reported time-average.
///
/// Each frame contributes its frame-start state: frame ages and decision-time
/// AoII once per frame, and clock ages weighted by the frame duration. With
/// unit frames the clock-age average therefore equals the frame-age average.
struct MetricsAccumulator {
  std::uint64_t frame_count = 0;
  std::uint64_t collision_count = 0;
  std::uint64_t delivery_total = 0;
  std::int64_t overhead_sum_minislots = 0;
  double elapsed_time = 0.0;
  std::vector<std::int64_t> frame_age_sum;
  std::vector<double> clock_age_integral;
  std::vector<std::int64_t> aoii_sum;
  std::vector<std::uint64_t> delivery_counts;

  explicit MetricsAccumulator(std::size_t n = 0);

  std::size_t size() const { return frame_age_sum.size(); }

  /// ages and aoii describe the frame start; aoii may be empty.
  void record(const AgeState& ages, const FrameOutcome& outcome,
              std::span<const std::int64_t> aoii = {});
};

struct SimulationResult {
  PolicyKind policy = PolicyKind::MaxWeight;
  AccessModel model = AccessModel::Idealized;
  /// (1/N) sum_i w_i * avg_i
  double normalized_weighted_avg_aoi = 0.0;
  /// Idealized: frame mean of A_i. Near-realistic: duration-weighted mean
  /// of the clock age over elapsed time.
  std::vector<double> per_source_avg_aoi;
  /// Frame mean of the integer frame age, in both models.
  std::vector<double> per_source_frame_avg_aoi;
  std::optional<double> normalized_avg_aoii;
  std::vector<double> per_source_avg_aoii;
  double collision_rate = 0.0;
  double avg_overhead_minislots = 0.0;
  std::uint64_t frames = 0;
  std::uint64_t deliveries = 0;
  double elapsed_time = 0.0;
  NetworkConfig config;
  BackoffParams params;
  std::uint64_t seed = 0;
};

/// Builds the averages from accumulated sums.
SimulationResult summarize(const MetricsAccumulator& metrics, const NetworkConfig& config,
                           const BackoffParams& params, PolicyKind policy, bool with_aoii);

}  // namespace freshcsma
