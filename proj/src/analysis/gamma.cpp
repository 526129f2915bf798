#include "freshcsma/analysis/gamma.hpp"

#include <cmath>
#include <limits>

#include "freshcsma/core/error.hpp"

namespace freshcsma {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 500;

// E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
double series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < kMaxIter; ++k) {
    term *= -x / k;
    const double add = term / k;
    sum += add;
    if (std::fabs(add) < std::fabs(sum) * kEps) break;
  }
  return -kEulerGamma - std::log(x) - sum;
}

// Modified Lentz on E1(x) = e^-x / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...)))
double continued_fraction(double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return h * std::exp(-x);
}

}  // namespace

double gamma_upper_incomplete_zero(double x) {
  if (std::isnan(x) || x <= 0.0) {
    throw DomainError("Gamma(0, x) requires x > 0");
  }
  if (std::isinf(x)) return 0.0;
  return x <= 1.0 ? series(x) : continued_fraction(x);
}

double gamma_upper_incomplete_zero_from_log(double log_x) {
  if (std::isnan(log_x) || log_x == -std::numeric_limits<double>::infinity()) {
    throw DomainError("Gamma(0, x) requires finite log x");
  }
  if (log_x < -700.0) return -log_x - kEulerGamma;
  return gamma_upper_incomplete_zero(std::exp(log_x));
}

}  // namespace freshcsma
