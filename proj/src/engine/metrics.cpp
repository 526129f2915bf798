#include "freshcsma/engine/metrics.hpp"

#include "freshcsma/core/error.hpp"

namespace freshcsma {

MetricsAccumulator::MetricsAccumulator(std::size_t n)
    : frame_age_sum(n, 0), clock_age_integral(n, 0.0), aoii_sum(n, 0), delivery_counts(n, 0) {}

void MetricsAccumulator::record(const AgeState& ages, const FrameOutcome& outcome,
                                std::span<const std::int64_t> aoii) {
  const double d = outcome.frame_duration;
  for (std::size_t i = 0; i < size(); ++i) {
    frame_age_sum[i] += ages.frame_age[i];
    clock_age_integral[i] += ages.clock_age[i] * d;
  }
  if (!aoii.empty()) {
    for (std::size_t i = 0; i < size(); ++i) aoii_sum[i] += aoii[i];
  }
  ++frame_count;
  elapsed_time += d;
  overhead_sum_minislots += outcome.backoff_minislots;
  if (outcome.collided) ++collision_count;
  if (outcome.delivered) {
    ++delivery_total;
    ++delivery_counts.at(*outcome.delivered);
  }
}

SimulationResult summarize(const MetricsAccumulator& metrics, const NetworkConfig& config,
                           const BackoffParams& params, PolicyKind policy, bool with_aoii) {
  if (metrics.frame_count == 0) throw ParameterError("no frames were simulated");
  const std::size_t n = metrics.size();
  const auto frames = static_cast<double>(metrics.frame_count);

  SimulationResult r;
  r.policy = policy;
  r.model = traits(policy).model;
  r.frames = metrics.frame_count;
  r.deliveries = metrics.delivery_total;
  r.elapsed_time = metrics.elapsed_time;
  r.collision_rate = static_cast<double>(metrics.collision_count) / frames;
  r.avg_overhead_minislots = static_cast<double>(metrics.overhead_sum_minislots) / frames;
  r.config = config;
  r.params = params;
  r.seed = config.seed;

  r.per_source_frame_avg_aoi.resize(n);
  r.per_source_avg_aoi.resize(n);
  double weighted = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r.per_source_frame_avg_aoi[i] = static_cast<double>(metrics.frame_age_sum[i]) / frames;
    r.per_source_avg_aoi[i] = r.model == AccessModel::NearRealistic
                                  ? metrics.clock_age_integral[i] / metrics.elapsed_time
                                  : r.per_source_frame_avg_aoi[i];
    weighted += config.weights[i] * r.per_source_avg_aoi[i];
  }
  r.normalized_weighted_avg_aoi = weighted / static_cast<double>(n);

  if (with_aoii) {
    r.per_source_avg_aoii.resize(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      r.per_source_avg_aoii[i] = static_cast<double>(metrics.aoii_sum[i]) / frames;
      total += r.per_source_avg_aoii[i];
    }
    r.normalized_avg_aoii = total / static_cast<double>(n);
  }
  return r;
}

}  // namespace freshcsma
