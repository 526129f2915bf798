#pragma once

// Independent reference for Gamma(0, x): adaptive Simpson on the defining
// integral after t = x e^u, i.e. integral_0^inf exp(-x e^u) du. Shares no
// code with the series/continued-fraction kernel under test.

#include <algorithm>
#include <cmath>

namespace oracle {

namespace detail {

inline long double f(long double x, long double u) { return std::exp(-x * std::exp(u)); }

inline long double simpson(long double a, long double b, long double fa,
                           long double fm, long double fb) {
  return (b - a) / 6.0L * (fa + 4.0L * fm + fb);
}

inline long double adapt(long double x, long double a, long double b, long double fa,
                         long double fm, long double fb, long double whole, long double tol,
                         int depth) {
  const long double m = (a + b) / 2.0L;
  const long double lm = (a + m) / 2.0L;
  const long double rm = (m + b) / 2.0L;
  const long double flm = f(x, lm);
  const long double frm = f(x, rm);
  const long double left = simpson(a, m, fa, flm, fm);
  const long double right = simpson(m, b, fm, frm, fb);
  const long double diff = left + right - whole;
  if (depth <= 0 || std::fabs(diff) <= 15.0L * tol) return left + right + diff / 15.0L;
  return adapt(x, a, m, fa, flm, fm, left, tol / 2.0L, depth - 1) +
         adapt(x, m, b, fm, frm, fb, right, tol / 2.0L, depth - 1);
}

}  // namespace detail

/// Gamma(0, x) for x > 0 by quadrature, relative tolerance ~1e-13.
inline double gamma0_quadrature(double xd) {
  const long double x = xd;
  // Beyond u_max the integrand is below exp(-800).
  const long double u_max = std::log(800.0L / x);
  if (u_max <= 0.0L) return 0.0;
  // Split at the integrand's knee, u = -ln x, where it falls from ~1.
  // e^-x/(x+1) < Gamma(0,x), so this tolerance is relative.
  const long double tol = 1e-14L * std::exp(-x) / (x + 1.0L);
  long double total = 0.0L;
  const long double knee = std::max(0.0L, -std::log(x));
  const long double cuts[] = {0.0L, knee, u_max};
  for (int k = 0; k < 2; ++k) {
    const long double a = cuts[k];
    const long double b = cuts[k + 1];
    if (b <= a) continue;
    const long double fa = detail::f(x, a);
    const long double fb = detail::f(x, b);
    const long double fm = detail::f(x, (a + b) / 2.0L);
    const long double whole = detail::simpson(a, b, fa, fm, fb);
    total += detail::adapt(x, a, b, fa, fm, fb, whole, tol, 60);
  }
  return static_cast<double>(total);
}

}  // namespace oracle
