#include "freshcsma/analysis/collision.hpp"

#include <algorithm>
#include <cmath>

#include "freshcsma/core/error.hpp"
#include "freshcsma/core/rng.hpp"
#include "freshcsma/core/timers.hpp"

namespace freshcsma {

namespace {

// lambda_i / (lambda_i + beta lambda_j) from logs.
double share(double log_li, double log_lj, double log_beta) {
  return 1.0 / (1.0 + std::exp(log_beta + log_lj - log_li));
}

}  // namespace

void PsiArgs::validate() const {
  if (!(beta > 1.0) || !std::isfinite(beta)) throw ParameterError("beta must be finite and > 1");
  if (b_offset < 0) throw ParameterError("B must be non-negative");
  if (std::isnan(log_lambda_i) || std::isnan(log_lambda_j)) {
    throw EvaluationError("psi: log-rate is NaN");
  }
  if (std::isinf(log_lambda_i) || std::isinf(log_lambda_j)) {
    throw ParameterError("psi: log-rates must be finite");
  }
}

double psi(const PsiArgs& args) {
  args.validate();
  const double log_beta = std::log(args.beta);
  const double log_s = -static_cast<double>(args.b_offset) * log_beta;
  const double xi = std::exp(args.log_lambda_i + log_s);
  const double xj = std::exp(args.log_lambda_j + log_s);
  const double a = xi + args.beta * xj;
  const double first = share(args.log_lambda_i, args.log_lambda_j, log_beta) * std::exp(-a);
  const double second = -std::expm1(-xi) * std::exp(-args.beta * xj);
  const double value = first + second;
  if (std::isnan(value)) throw EvaluationError("psi evaluated to NaN");
  return value;
}

double distinct_timer_bound(const PsiArgs& args) { return psi(args) + psi(args.swapped()); }

double distinct_timer_limit(const PsiArgs& args) {
  args.validate();
  const double log_beta = std::log(args.beta);
  return share(args.log_lambda_i, args.log_lambda_j, log_beta) +
         share(args.log_lambda_j, args.log_lambda_i, log_beta);
}

Estimate estimate_distinct_timers(const PsiArgs& args, const MonteCarloOptions& options) {
  args.validate();
  if (options.trials == 0) throw ParameterError("Monte Carlo needs at least one trial");
  RngStream si(options.seed, substream_id(StreamRole::Validator, 3, 0));
  RngStream sj(options.seed, substream_id(StreamRole::Validator, 3, 1));
  const double ln_beta = std::log(args.beta);
  std::uint64_t distinct = 0;
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const auto di = discretize_log_timer(si.log_unit_exponential() - args.log_lambda_i, ln_beta,
                                         args.b_offset);
    const auto dj = discretize_log_timer(sj.log_unit_exponential() - args.log_lambda_j, ln_beta,
                                         args.b_offset);
    if (di != dj) ++distinct;
  }
  const double n = static_cast<double>(options.trials);
  const double p = static_cast<double>(distinct) / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

BoundReport collision_lower_bound(const PsiArgs& args,
                                  const std::optional<MonteCarloOptions>& options) {
  BoundReport report;
  report.bound_value = distinct_timer_bound(args);
  if (options) {
    const Estimate e = estimate_distinct_timers(args, *options);
    // One-sided proportion test against H0: P = bound. The null variance
    // keeps a zero-count estimate from turning into an exact comparison
    // against a bound like 1e-70.
    const double b = std::clamp(report.bound_value, 0.0, 1.0);
    const double null_se = std::sqrt(b * (1.0 - b) / static_cast<double>(options->trials));
    const double se = std::max(e.std_error, null_se);
    report.empirical = e.mean;
    report.mc_std_error = se;
    report.satisfied = e.mean >= report.bound_value - options->sigma * se;
  }
  return report;
}

BoundReport collision_lower_bound(std::span<const std::int64_t> ages,
                                  std::span<const double> weights, const BackoffParams& params,
                                  SourceIndex i, SourceIndex j,
                                  const std::optional<MonteCarloOptions>& options) {
  params.validate();
  if (ages.size() != weights.size()) throw ParameterError("ages and weights differ in length");
  if (i >= ages.size() || j >= ages.size() || i == j) {
    throw ParameterError("pair must name two distinct sources");
  }
  const double ln_alpha = std::log(params.alpha);
  auto log_rate = [&](SourceIndex k) {
    const auto a = static_cast<double>(ages[k]);
    return weights[k] * (a * a) * ln_alpha;
  };
  return collision_lower_bound(PsiArgs{params.b_offset, params.beta, log_rate(i), log_rate(j)},
                               options);
}

}  // namespace freshcsma
