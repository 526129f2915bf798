#include "freshcsma/core/timers.hpp"

#include <algorithm>
#include <cmath>

#include "freshcsma/core/error.hpp"

namespace freshcsma {

namespace {

void require_finite_rate(double log_rate) {
  if (!std::isfinite(log_rate)) throw ParameterError("log_rate must be finite");
}

}  // namespace

double exponential_from_unit(double unit_draw, double log_rate) {
  require_finite_rate(log_rate);
  return unit_draw * std::exp(-log_rate);
}

double log_exponential_from_unit(double unit_draw, double log_rate) {
  require_finite_rate(log_rate);
  return std::log(unit_draw) - log_rate;
}

double sample_exponential(RngStream& stream, double log_rate) {
  require_finite_rate(log_rate);
  return stream.unit_exponential() * std::exp(-log_rate);
}

double sample_log_exponential(RngStream& stream, double log_rate) {
  require_finite_rate(log_rate);
  return stream.log_unit_exponential() - log_rate;
}

std::int64_t discretize_log_timer(double log_z, double ln_beta, std::int64_t b_offset) {
  double d = static_cast<double>(b_offset) + std::floor(log_z / ln_beta);
  d = std::max(d, 0.0);
  d = std::min(d, static_cast<double>(kTimerCeiling));
  return static_cast<std::int64_t>(d);
}

std::int64_t discretize_log_timer(double log_z, const BackoffParams& params) {
  params.validate();
  if (std::isnan(log_z)) throw ParameterError("log timer is NaN");
  return discretize_log_timer(log_z, std::log(params.beta), params.b_offset);
}

std::int64_t discretize_timer(double z, const BackoffParams& params) {
  if (!(z > 0.0)) throw ParameterError("timer must be positive");
  return discretize_log_timer(std::log(z), params);
}

}  // namespace freshcsma
