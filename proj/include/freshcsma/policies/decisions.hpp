#pragma once

// Scheduling rules as free functions. Centralized rules return a source
// index; distributed (CSMA) rules return one backoff timer per source.

#include <cstdint>
#include <span>
#include <vector>

#include "freshcsma/core/rng.hpp"
#include "freshcsma/core/types.hpp"
#include "freshcsma/policies/policy_kind.hpp"

namespace freshcsma {

/// Per-source backoff timers for one frame.
///
/// Idealized timers are kept as ln Z_i: contention only compares them, and
/// the log form cannot overflow. Near-realistic timers additionally carry
/// the integer minislot count D_i.
struct TimerVector {
  AccessModel model = AccessModel::Idealized;
  std::vector<double> log_rates;
  std::vector<double> log_timers;
  std::vector<std::int64_t> minislots;

  std::size_t size() const { return log_timers.size(); }

  /// D_i for near-realistic timers, Z_i = exp(ln Z_i) otherwise.
  double value(std::size_t i) const;
};

/// w_i * A_i^2 for each source.
std::vector<double> weighted_age_exponents(std::span<const std::int64_t> ages,
                                           std::span<const double> weights);

/// AoII_i as reals.
std::vector<double> aoii_exponents(std::span<const std::int64_t> aoii);

/// r_i = alpha^{e_i} / sum_j alpha^{e_j}, normalized after subtracting the
/// largest exponent so that alpha^{e} is never formed.
std::vector<double> scheduling_prob_closed_form(std::span<const double> exponents, double alpha);

/// Softmax of log-rates: lambda_i / sum_j lambda_j.
std::vector<double> scheduling_prob_from_log_rates(std::span<const double> log_rates);

/// argmax_j w_j A_j^2, uniform tie-break over the argmax set.
SourceIndex max_weight_decide(const AgeState& ages, std::span<const double> weights,
                              RngStream& tie_break);

/// argmax_j AoII_j, uniform tie-break. A hypothetical baseline: the base
/// station cannot observe the source states it needs.
SourceIndex max_aoii_decide(std::span<const std::int64_t> aoii, RngStream& tie_break);

/// pi*_i = sqrt(w_i) / sum_j sqrt(w_j).
std::vector<double> stationary_randomized_probs(std::span<const double> weights);

/// Samples an index from cumulative probabilities (last entry treated as 1).
SourceIndex sample_from_cumulative(std::span<const double> cumulative, RngStream& stream);

/// N independent exp(alpha) timers, one stream per source.
TimerVector idealized_csma_timers(std::span<RngStream> streams, double alpha);

/// Fresh-CSMA timers. Exponent e_i = w_i A_i^2 (FrameAge) or AoII_i (Aoii,
/// weights ignored); Z_i ~ exp(alpha^{e_i}) drawn in log domain; the
/// near-realistic model maps each to max(B + floor(log_beta Z_i), 0).
/// Throws ParameterError when the freshness input is missing.
TimerVector fresh_csma_timers(std::span<RngStream> streams, const AgeState& ages,
                              std::span<const double> weights, const BackoffParams& params,
                              AccessModel model, Freshness freshness,
                              std::span<const std::int64_t> aoii = {});

/// Allocation-free form of fresh_csma_timers; reuses out's buffers.
void fill_fresh_csma_timers(std::span<RngStream> streams, const AgeState& ages,
                            std::span<const double> weights, const BackoffParams& params,
                            AccessModel model, Freshness freshness,
                            std::span<const std::int64_t> aoii, TimerVector& out);

/// Draws ln Z_i for the given log-rates and, for the near-realistic model,
/// discretizes them. The shared last step of every CSMA rule.
void draw_timers(std::span<RngStream> streams, const BackoffParams& params, AccessModel model,
                 TimerVector& out);

}  // namespace freshcsma
