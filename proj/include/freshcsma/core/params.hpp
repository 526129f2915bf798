#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "freshcsma/core/types.hpp"

namespace freshcsma {

/// Base of the "log" in the default-parameter formulas.
enum class LogBase { Ten, Natural };

LogBase parse_log_base(const std::string& text);
std::string to_string(LogBase base);

/// Default protocol parameters for AoI experiments:
///   alpha = 1 + 1/sum(w), beta = 1.1 + max(log(log N), 0), B = 250 + N,
///   M = 10000.
BackoffParams default_aoi_params(std::span<const double> weights, LogBase base = LogBase::Ten);

/// Default protocol parameters for AoII experiments:
///   alpha = 2.1, beta = 1.05 + max(log(log N), 0), B = 250 + floor(N/4).
BackoffParams default_aoii_params(std::size_t n_sources, LogBase base = LogBase::Ten);

inline constexpr std::int64_t kDefaultMinislotsPerUpdate = 10000;

/// (N-1)(1-delta)/delta: alpha at or above this makes a Fresh-CSMA frame
/// agree with max-weight with probability at least 1-delta.
double match_alpha_threshold(std::size_t n_sources, double delta);

/// (N-1) * sum(sqrt w) / min(sqrt w): alpha strictly above this gives the
/// drift dominance over the optimal stationary randomized policy.
double drift_alpha_threshold(std::span<const double> weights);

struct ValidationReport {
  double match_delta = 0.1;
  double match_threshold = 0.0;
  bool meets_match_threshold = false;
  double drift_threshold = 0.0;
  bool meets_drift_threshold = false;
  bool integer_weights = false;
  BackoffParams defaults;
  std::vector<std::string> warnings;
};

/// Checks structural validity (throws ParameterError) and reports whether
/// alpha satisfies the per-frame and long-run thresholds. Missing a
/// threshold only produces a warning; small alpha is a legitimate setting.
ValidationReport validate_params(const NetworkConfig& config, const BackoffParams& params,
                                 double match_delta = 0.1, LogBase base = LogBase::Ten);

}  // namespace freshcsma
