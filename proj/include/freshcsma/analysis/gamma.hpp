#pragma once

namespace freshcsma {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Gamma(0, x) = integral_x^inf t^-1 e^-t dt (the exponential integral E1).
/// Series for x <= 1, continued fraction above. x <= 0 or NaN throws
/// DomainError; Gamma(0, inf) = 0.
double gamma_upper_incomplete_zero(double x);

/// Gamma(0, exp(log_x)). Below log_x = -700, where x itself would lose
/// precision, the asymptote -log_x - gamma is returned (the dropped terms
/// are O(x)).
double gamma_upper_incomplete_zero_from_log(double log_x);

}  // namespace freshcsma
