#pragma once

#include <cstdint>
#include <span>

#include "freshcsma/analysis/collision.hpp"
#include "freshcsma/core/types.hpp"

namespace freshcsma {

/// ln(sum_i exp(log_rates_i)), stable for any finite inputs.
double log_sum_exp(std::span<const double> log_rates);

/// Idle-time bound 1/M + Gamma(0, lambda beta^-B) / (M ln beta), in units of
/// one update transmission, for total rate lambda = exp(log_lambda).
double overhead_bound_from_log_rate(double log_lambda, double beta, std::int64_t b_offset,
                                    std::int64_t minislots_per_update);

/// Per-frame bound at instantaneous integer ages.
double overhead_upper_bound(std::span<const std::int64_t> ages, std::span<const double> weights,
                            const BackoffParams& params);

/// Horizon approximation from average ages: lambda-bar = sum_i alpha^{w_i avg_i^2}.
double overhead_upper_bound_avg(std::span<const double> avg_ages, std::span<const double> weights,
                                const BackoffParams& params);

/// AoII analog of the horizon approximation: lambda-bar = sum_i alpha^{avg_i}.
double overhead_upper_bound_avg_aoii(std::span<const double> avg_aoii,
                                     const BackoffParams& params);

/// Monte Carlo mean of D(t)/M over independent contentions at fixed ages,
/// compared against the per-frame bound (satisfied = empirical <= bound).
BoundReport expected_backoff_report(std::span<const std::int64_t> ages,
                                    std::span<const double> weights, const BackoffParams& params,
                                    const MonteCarloOptions& options);

}  // namespace freshcsma
