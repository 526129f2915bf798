#include "freshcsma/policies/decisions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "freshcsma/core/error.hpp"
#include "freshcsma/simd/kernels.hpp"

namespace freshcsma {

namespace {

// Uniform choice among the positions equal to the extremum.
SourceIndex pick_tied(std::span<const double> values, const simd::Extremum<double>& ext,
                      RngStream& tie_break) {
  if (ext.count == 1) return ext.first;
  std::size_t k = tie_break.uniform_index(ext.count);
  for (std::size_t i = ext.first; i < values.size(); ++i) {
    if (values[i] == ext.value) {
      if (k == 0) return i;
      --k;
    }
  }
  return ext.first;
}

}  // namespace

double TimerVector::value(std::size_t i) const {
  if (model == AccessModel::NearRealistic) return static_cast<double>(minislots.at(i));
  return std::exp(log_timers.at(i));
}

std::vector<double> weighted_age_exponents(std::span<const std::int64_t> ages,
                                           std::span<const double> weights) {
  if (ages.size() != weights.size()) throw ParameterError("ages and weights lengths differ");
  std::vector<double> out(ages.size());
  simd::weighted_square(weights, ages, 1.0, out);
  return out;
}

std::vector<double> aoii_exponents(std::span<const std::int64_t> aoii) {
  std::vector<double> out(aoii.size());
  simd::scaled_counts(aoii, 1.0, out);
  return out;
}

std::vector<double> scheduling_prob_from_log_rates(std::span<const double> log_rates) {
  if (log_rates.empty()) throw ParameterError("at least one source is required");
  const double top = *std::max_element(log_rates.begin(), log_rates.end());
  std::vector<double> r(log_rates.size());
  double total = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = std::exp(log_rates[i] - top);
    total += r[i];
  }
  for (double& x : r) x /= total;
  return r;
}

std::vector<double> scheduling_prob_closed_form(std::span<const double> exponents, double alpha) {
  if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
  const double ln_alpha = std::log(alpha);
  std::vector<double> log_rates(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) log_rates[i] = exponents[i] * ln_alpha;
  return scheduling_prob_from_log_rates(log_rates);
}

SourceIndex max_weight_decide(const AgeState& ages, std::span<const double> weights,
                              RngStream& tie_break) {
  const auto exponents = weighted_age_exponents(ages.frame_age, weights);
  return pick_tied(exponents, simd::max_element(std::span<const double>(exponents)), tie_break);
}

SourceIndex max_aoii_decide(std::span<const std::int64_t> aoii, RngStream& tie_break) {
  const auto values = aoii_exponents(aoii);
  return pick_tied(values, simd::max_element(std::span<const double>(values)), tie_break);
}

std::vector<double> stationary_randomized_probs(std::span<const double> weights) {
  if (weights.empty()) throw ParameterError("at least one source is required");
  std::vector<double> p(weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) throw ParameterError("weights must be positive");
    p[i] = std::sqrt(weights[i]);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

SourceIndex sample_from_cumulative(std::span<const double> cumulative, RngStream& stream) {
  const double u = stream.uniform();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end() - 1, u);
  return static_cast<SourceIndex>(it - cumulative.begin());
}

void draw_timers(std::span<RngStream> streams, const BackoffParams& params, AccessModel model,
                 TimerVector& out) {
  const std::size_t n = out.log_rates.size();
  if (streams.size() != n) throw ParameterError("one stream per source is required");
  out.model = model;
  out.log_timers.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.log_timers[i] = streams[i].log_unit_exponential();
  simd::subtract(out.log_timers, out.log_rates, out.log_timers);
  if (model == AccessModel::NearRealistic) {
    out.minislots.resize(n);
    simd::discretize(out.log_timers, std::log(params.beta), params.b_offset, out.minislots);
  } else {
    out.minislots.clear();
  }
}

TimerVector idealized_csma_timers(std::span<RngStream> streams, double alpha) {
  if (!(alpha > 1.0)) throw ParameterError("alpha must be > 1");
  TimerVector out;
  out.log_rates.assign(streams.size(), std::log(alpha));
  BackoffParams params;
  params.alpha = alpha;
  draw_timers(streams, params, AccessModel::Idealized, out);
  return out;
}

void fill_fresh_csma_timers(std::span<RngStream> streams, const AgeState& ages,
                            std::span<const double> weights, const BackoffParams& params,
                            AccessModel model, Freshness freshness,
                            std::span<const std::int64_t> aoii, TimerVector& out) {
  const double ln_alpha = std::log(params.alpha);
  const std::size_t n = ages.size();
  out.log_rates.resize(n);
  switch (freshness) {
    case Freshness::FrameAge:
      if (weights.size() != n) throw ParameterError("ages and weights lengths differ");
      simd::weighted_square(weights, ages.frame_age, ln_alpha, out.log_rates);
      break;
    case Freshness::Aoii:
      if (aoii.size() != n) throw ParameterError("AoII values are required in aoii mode");
      simd::scaled_counts(aoii, ln_alpha, out.log_rates);
      break;
    case Freshness::None:
      std::fill(out.log_rates.begin(), out.log_rates.end(), ln_alpha);
      break;
  }
  draw_timers(streams, params, model, out);
}

TimerVector fresh_csma_timers(std::span<RngStream> streams, const AgeState& ages,
                              std::span<const double> weights, const BackoffParams& params,
                              AccessModel model, Freshness freshness,
                              std::span<const std::int64_t> aoii) {
  params.validate();
  TimerVector out;
  fill_fresh_csma_timers(streams, ages, weights, params, model, freshness, aoii, out);
  return out;
}

}  // namespace freshcsma
