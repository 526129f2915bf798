#pragma once

#include <cstdint>

#include "freshcsma/core/rng.hpp"
#include "freshcsma/core/types.hpp"

namespace freshcsma {

/// Largest discretized timer; results saturate here.
inline constexpr std::int64_t kTimerCeiling = std::int64_t{1} << 51;

/// Z = E * exp(-log_rate) for a given unit exponential E.
double exponential_from_unit(double unit_draw, double log_rate);

/// ln Z = ln E - log_rate; no exponentiation of the rate ever happens.
double log_exponential_from_unit(double unit_draw, double log_rate);

/// Draws Z ~ exp(lambda) with ln(lambda) = log_rate. Throws ParameterError
/// for a non-finite log_rate.
double sample_exponential(RngStream& stream, double log_rate);

/// Same draw as sample_exponential, returned as ln Z.
double sample_log_exponential(RngStream& stream, double log_rate);

/// max(B + floor(log_beta z), 0), saturating at kTimerCeiling.
std::int64_t discretize_timer(double z, const BackoffParams& params);

/// Log-domain form: log_z = ln Z.
std::int64_t discretize_log_timer(double log_z, const BackoffParams& params);

/// Kernel form with ln(beta) precomputed. Every discretization path
/// (scalar and vector) computes exactly this expression.
std::int64_t discretize_log_timer(double log_z, double ln_beta, std::int64_t b_offset);

}  // namespace freshcsma
