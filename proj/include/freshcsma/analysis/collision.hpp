#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "freshcsma/core/types.hpp"

namespace freshcsma {

/// Arguments of psi(B, beta, lambda_i, lambda_j), rates given as logs.
struct PsiArgs {
  std::int64_t b_offset = 0;
  double beta = 2.0;
  double log_lambda_i = 0.0;
  double log_lambda_j = 0.0;

  void validate() const;
  PsiArgs swapped() const { return {b_offset, beta, log_lambda_j, log_lambda_i}; }
};

struct BoundReport {
  double bound_value = 0.0;
  std::optional<double> empirical;
  std::optional<bool> satisfied;
  std::optional<double> mc_std_error;
};

struct MonteCarloOptions {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  /// Acceptance margin in standard errors.
  double sigma = 3.0;
};

/// psi = lambda_i e^{-s(lambda_i + beta lambda_j)} / (lambda_i + beta lambda_j)
///       + (e^{lambda_i s} - 1) e^{-s(lambda_i + beta lambda_j)},  s = beta^-B.
///
/// Evaluated on x = lambda s; the second term is formed as
/// (1 - e^{-x_i}) e^{-beta x_j}, so no intermediate overflows for any
/// finite log-rate. Result in [0, 1]. NaN arguments throw EvaluationError.
double psi(const PsiArgs& args);

/// psi(i, j) + psi(j, i): lower bound on P(D_i != D_j).
double distinct_timer_bound(const PsiArgs& args);

/// B -> infinity limit of the bound:
/// lambda_i/(lambda_i + beta lambda_j) + lambda_j/(lambda_j + beta lambda_i).
double distinct_timer_limit(const PsiArgs& args);

/// Monte Carlo estimate of P(D_i != D_j) with its standard error.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};
Estimate estimate_distinct_timers(const PsiArgs& args, const MonteCarloOptions& options);

/// Bound for the pair (i, j) at the given ages; with options, attaches the
/// Monte Carlo estimate and satisfied = empirical >= bound - sigma * stderr,
/// where stderr is the larger of the sample and the null (p = bound) value.
BoundReport collision_lower_bound(const PsiArgs& args,
                                  const std::optional<MonteCarloOptions>& options = std::nullopt);
BoundReport collision_lower_bound(std::span<const std::int64_t> ages,
                                  std::span<const double> weights, const BackoffParams& params,
                                  SourceIndex i, SourceIndex j,
                                  const std::optional<MonteCarloOptions>& options = std::nullopt);

}  // namespace freshcsma
