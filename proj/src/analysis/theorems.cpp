#include "freshcsma/analysis/theorems.hpp"

#include <algorithm>
#include <cmath>

#include "freshcsma/core/error.hpp"
#include "freshcsma/policies/decisions.hpp"

namespace freshcsma {

double theorem1_match_probability(std::span<const double> exponents, double alpha) {
  if (exponents.empty()) throw ParameterError("no sources");
  const auto r = scheduling_prob_closed_form(exponents, alpha);
  const double top = *std::max_element(exponents.begin(), exponents.end());
  double mass = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (exponents[i] == top) mass += r[i];
  }
  return mass;
}

double theorem1_match_probability(std::span<const std::int64_t> ages,
                                  std::span<const double> weights, double alpha) {
  const auto e = weighted_age_exponents(ages, weights);
  return theorem1_match_probability(e, alpha);
}

DriftPair drift_pair(std::span<const std::int64_t> ages, std::span<const double> weights,
                     double alpha) {
  const auto r = scheduling_prob_closed_form(weighted_age_exponents(ages, weights), alpha);
  const auto pi = stationary_randomized_probs(weights);
  DriftPair out;
  double base = 0.0;
  double csma = 0.0;
  double sr = 0.0;
  for (std::size_t j = 0; j < ages.size(); ++j) {
    const double sw = std::sqrt(weights[j]);
    const auto a = static_cast<double>(ages[j]);
    base += sw;
    csma += r[j] * sw * a;
    sr += pi[j] * sw * a;
  }
  out.csma = base - csma;
  out.stationary = base - sr;
  return out;
}

}  // namespace freshcsma
