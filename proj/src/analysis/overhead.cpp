#include "freshcsma/analysis/overhead.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "freshcsma/analysis/gamma.hpp"
#include "freshcsma/core/error.hpp"
#include "freshcsma/core/rng.hpp"
#include "freshcsma/core/timers.hpp"

namespace freshcsma {

double log_sum_exp(std::span<const double> log_rates) {
  if (log_rates.empty()) throw ParameterError("log_sum_exp of an empty set");
  const double top = *std::max_element(log_rates.begin(), log_rates.end());
  if (!std::isfinite(top)) throw EvaluationError("log_sum_exp: non-finite log-rate");
  double sum = 0.0;
  for (double v : log_rates) sum += std::exp(v - top);
  return top + std::log(sum);
}

double overhead_bound_from_log_rate(double log_lambda, double beta, std::int64_t b_offset,
                                    std::int64_t minislots_per_update) {
  BackoffParams p;
  p.beta = beta;
  p.b_offset = b_offset;
  p.minislots_per_update = minislots_per_update;
  p.validate();
  if (!std::isfinite(log_lambda)) throw EvaluationError("overhead bound: non-finite log-rate");
  const double ln_beta = std::log(beta);
  const double m = static_cast<double>(minislots_per_update);
  const double log_x = log_lambda - static_cast<double>(b_offset) * ln_beta;
  return 1.0 / m + gamma_upper_incomplete_zero_from_log(log_x) / (m * ln_beta);
}

namespace {

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b || a == 0) throw ParameterError("ages and weights must be non-empty and equal length");
}

}  // namespace

double overhead_upper_bound(std::span<const std::int64_t> ages, std::span<const double> weights,
                            const BackoffParams& params) {
  check_lengths(ages.size(), weights.size());
  std::vector<double> avg(ages.begin(), ages.end());
  return overhead_upper_bound_avg(avg, weights, params);
}

double overhead_upper_bound_avg(std::span<const double> avg_ages, std::span<const double> weights,
                                const BackoffParams& params) {
  params.validate();
  check_lengths(avg_ages.size(), weights.size());
  const double ln_alpha = std::log(params.alpha);
  std::vector<double> logs(avg_ages.size());
  for (std::size_t i = 0; i < logs.size(); ++i) {
    logs[i] = weights[i] * (avg_ages[i] * avg_ages[i]) * ln_alpha;
  }
  return overhead_bound_from_log_rate(log_sum_exp(logs), params.beta, params.b_offset,
                                      params.minislots_per_update);
}

double overhead_upper_bound_avg_aoii(std::span<const double> avg_aoii,
                                     const BackoffParams& params) {
  params.validate();
  const double ln_alpha = std::log(params.alpha);
  std::vector<double> logs(avg_aoii.size());
  for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = avg_aoii[i] * ln_alpha;
  return overhead_bound_from_log_rate(log_sum_exp(logs), params.beta, params.b_offset,
                                      params.minislots_per_update);
}

BoundReport expected_backoff_report(std::span<const std::int64_t> ages,
                                    std::span<const double> weights, const BackoffParams& params,
                                    const MonteCarloOptions& options) {
  if (options.trials < 2) throw ParameterError("Monte Carlo needs at least two trials");
  BoundReport report;
  report.bound_value = overhead_upper_bound(ages, weights, params);

  const auto rates = LogRate::from_ages(weights, ages, params.alpha);
  const double ln_beta = std::log(params.beta);
  std::vector<RngStream> streams;
  streams.reserve(ages.size());
  for (std::size_t i = 0; i < ages.size(); ++i) {
    streams.emplace_back(options.seed,
                         substream_id(StreamRole::Validator, 4, static_cast<std::uint32_t>(i)));
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  const double m = static_cast<double>(params.minislots_per_update);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    std::int64_t d = kTimerCeiling;
    for (std::size_t i = 0; i < ages.size(); ++i) {
      const double log_z = streams[i].log_unit_exponential() - rates.log_lambda[i];
      d = std::min(d, discretize_log_timer(log_z, ln_beta, params.b_offset));
    }
    const double v = static_cast<double>(d) / m;
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(options.trials);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  report.empirical = mean;
  report.mc_std_error = std::sqrt(var / n);
  report.satisfied = mean <= report.bound_value;
  return report;
}

}  // namespace freshcsma
