#pragma once

#include <cstdint>
#include <span>

namespace freshcsma {

/// Closed-form probability mass that Fresh-CSMA places on the argmax set of
/// the exponents (w_i A_i^2, or AoII_i). Compare against 1 - delta.
double theorem1_match_probability(std::span<const double> exponents, double alpha);
double theorem1_match_probability(std::span<const std::int64_t> ages,
                                  std::span<const double> weights, double alpha);

struct DriftPair {
  /// sum sqrt(w) - sum r_j sqrt(w_j) A_j
  double csma = 0.0;
  /// sum sqrt(w) - sum pi*_j sqrt(w_j) A_j
  double stationary = 0.0;
};

/// One-frame conditional drifts of the linear Lyapunov function
/// sum_i sqrt(w_i) A_i under Fresh-CSMA and the optimal stationary policy.
DriftPair drift_pair(std::span<const std::int64_t> ages, std::span<const double> weights,
                     double alpha);

}  // namespace freshcsma
