#include "freshcsma/core/types.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "freshcsma/core/error.hpp"
#include "freshcsma/simd/kernels.hpp"

namespace freshcsma {

void NetworkConfig::validate() const {
  if (n_sources == 0) throw ParameterError("n_sources must be at least 1");
  if (weights.size() != n_sources) {
    std::ostringstream os;
    os << "expected " << n_sources << " weights, got " << weights.size();
    throw ParameterError(os.str());
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw ParameterError("weight " + std::to_string(i) + " must be positive and finite");
    }
    if (theorem_exact && w != std::floor(w)) {
      throw ParameterError("weight " + std::to_string(i) +
                           " must be an integer in theorem-exactness mode");
    }
  }
  if (horizon_frames == 0) throw ParameterError("horizon_frames must be at least 1");
}

NetworkConfig NetworkConfig::uniform(std::size_t n, std::uint64_t horizon_frames,
                                     std::uint64_t seed) {
  NetworkConfig cfg;
  cfg.n_sources = n;
  cfg.weights.assign(n, 1.0);
  cfg.horizon_frames = horizon_frames;
  cfg.seed = seed;
  return cfg;
}

void BackoffParams::validate() const {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be > 1");
  if (!(beta > 1.0) || !std::isfinite(beta)) throw ParameterError("beta must be > 1");
  if (b_offset < 0 || b_offset > kMaxBackoffOffset) {
    throw ParameterError("b_offset must be in [0, 2^40]");
  }
  if (minislots_per_update < 1) throw ParameterError("minislots_per_update must be >= 1");
  if (!(delta_scale > 0.0) || delta_scale > 1.0) {
    throw ParameterError("delta_scale must be in (0, 1]");
  }
}

AgeState AgeState::fresh(std::size_t n) {
  AgeState s;
  s.frame_age.assign(n, 1);
  s.clock_age.assign(n, 1.0);
  return s;
}

AgeState AgeState::from_frame_ages(std::vector<std::int64_t> ages) {
  AgeState s;
  s.clock_age.assign(ages.begin(), ages.end());
  s.frame_age = std::move(ages);
  s.validate();
  return s;
}

void AgeState::validate() const {
  if (clock_age.size() != frame_age.size()) {
    throw ParameterError("frame_age and clock_age lengths differ");
  }
  for (auto a : frame_age) {
    if (a < 1) throw ParameterError("frame ages must be >= 1");
  }
  for (auto c : clock_age) {
    if (!(c >= 0.0)) throw ParameterError("clock ages must be >= 0");
  }
}

LogRate LogRate::from_ages(std::span<const double> weights, std::span<const std::int64_t> ages,
                           double alpha) {
  if (weights.size() != ages.size()) throw ParameterError("weights and ages lengths differ");
  LogRate r;
  r.log_lambda.resize(ages.size());
  simd::weighted_square(weights, ages, std::log(alpha), r.log_lambda);
  return r;
}

std::vector<double> LogRate::linear(double max_log) const {
  std::vector<double> out(log_lambda.size());
  for (std::size_t i = 0; i < log_lambda.size(); ++i) {
    if (!(log_lambda[i] <= max_log)) {
      std::ostringstream os;
      os << "rate exponent " << log_lambda[i] << " for source " << i
         << " exceeds the linear-domain limit " << max_log;
      throw EvaluationError(os.str());
    }
    out[i] = std::exp(log_lambda[i]);
  }
  return out;
}

}  // namespace freshcsma
