#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "freshcsma/analysis/collision.hpp"
#include "freshcsma/analysis/gamma.hpp"
#include "freshcsma/analysis/overhead.hpp"
#include "freshcsma/analysis/theorems.hpp"
#include "freshcsma/core/error.hpp"
#include "freshcsma/core/params.hpp"
#include "freshcsma/core/rng.hpp"
#include "oracles/quadrature.hpp"

using namespace freshcsma;

namespace {

// Exact distribution of D = max(B + floor(log_beta Z), 0), Z ~ exp(lambda):
// D = 0 iff Z < beta^(1-B); D = k > 0 iff beta^(k-B) <= Z < beta^(k-B+1).
std::vector<double> timer_pmf(double log_lambda, double beta, std::int64_t b) {
  const double lambda = std::exp(log_lambda);
  auto cdf = [&](double k) { return -std::expm1(-lambda * std::pow(beta, k - b)); };
  std::vector<double> pmf;
  pmf.push_back(cdf(1.0));
  for (std::int64_t k = 1;; ++k) {
    const double lo = cdf(static_cast<double>(k));
    const double hi = cdf(static_cast<double>(k + 1));
    pmf.push_back(hi - lo);
    if (1.0 - hi < 1e-17 || k > 200000) break;
  }
  return pmf;
}

double exact_distinct(double li, double lj, double beta, std::int64_t b) {
  const auto pi = timer_pmf(li, beta, b);
  const auto pj = timer_pmf(lj, beta, b);
  double same = 0.0;
  for (std::size_t k = 0; k < std::min(pi.size(), pj.size()); ++k) same += pi[k] * pj[k];
  return 1.0 - same;
}

// E[min_i D_i] = E[D] at the total rate.
double exact_mean_timer(double log_lambda, double beta, std::int64_t b) {
  const auto p = timer_pmf(log_lambda, beta, b);
  double m = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) m += static_cast<double>(k) * p[k];
  return m;
}

}  // namespace

TEST_CASE("Gamma(0,x) at reference points") {
  CHECK(gamma_upper_incomplete_zero(1.0) == doctest::Approx(0.219383934395520).epsilon(1e-13));
  CHECK(gamma_upper_incomplete_zero(1.0) ==
        doctest::Approx(oracle::gamma0_quadrature(1.0)).epsilon(1e-12));
  CHECK(gamma_upper_incomplete_zero(10.0) <= std::exp(-10.0) / 10.0);
  CHECK(gamma_upper_incomplete_zero(std::numeric_limits<double>::infinity()) == 0.0);
  CHECK_THROWS_AS(gamma_upper_incomplete_zero(0.0), DomainError);
  CHECK_THROWS_AS(gamma_upper_incomplete_zero(-1.0), DomainError);
  CHECK_THROWS_AS(gamma_upper_incomplete_zero(std::nan("")), DomainError);
}

TEST_CASE("Gamma(0,x) matches quadrature over [1e-6, 50]") {
  for (int k = 0; k <= 200; ++k) {
    const double x = 1e-6 * std::pow(50.0 / 1e-6, k / 200.0);
    CAPTURE(x);
    const double ref = oracle::gamma0_quadrature(x);
    CHECK(std::fabs(gamma_upper_incomplete_zero(x) - ref) <= 1e-8 * ref);
  }
}

TEST_CASE("Gamma(0,x) envelopes and small-argument asymptote") {
  const double x = 1e-8;
  const double asym = -std::log(x) - kEulerGamma;
  CHECK(std::fabs(gamma_upper_incomplete_zero(x) - asym) <= 1e-6 * asym);
  for (double v : {0.5, 1.0, 2.0, 5.0, 20.0, 100.0}) {
    const double g = gamma_upper_incomplete_zero(v);
    // e^-x/(x+1) < E1(x) < e^-x/x
    CHECK(g < std::exp(-v) / v);
    CHECK(g > std::exp(-v) / (v + 1.0));
  }
  CHECK(gamma_upper_incomplete_zero_from_log(std::log(3.0)) ==
        doctest::Approx(gamma_upper_incomplete_zero(3.0)));
  CHECK(gamma_upper_incomplete_zero_from_log(-800.0) == doctest::Approx(800.0 - kEulerGamma));
  CHECK(gamma_upper_incomplete_zero_from_log(800.0) == 0.0);
}

TEST_CASE("psi: large-B limit") {
  const PsiArgs a{500, 2.0, 0.0, 0.0};
  CHECK(std::fabs(distinct_timer_bound(a) - 2.0 / 3.0) <= 1e-9);
  CHECK(distinct_timer_limit(a) == doctest::Approx(2.0 / 3.0));
  // Fine grid, equal rates: limit 2/(1+beta) -> 1.
  const PsiArgs fine{1000000, 1.0001, 0.0, 0.0};
  CHECK(distinct_timer_bound(fine) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("psi: symmetric arguments give equal terms") {
  const PsiArgs a{10, 1.5, 2.0, 2.0};
  CHECK(psi(a) == psi(a.swapped()));
}

TEST_CASE("psi increases with B and converges to the limit") {
  for (double beta : {1.05, 1.1, 1.5, 2.0, 4.0}) {
    for (double li : {0.0, 1.0, 5.0, 20.0}) {
      for (double lj : {0.0, 3.0, 20.0}) {
        double prev_psi = -1.0;
        double prev_gap = std::numeric_limits<double>::infinity();
        for (std::int64_t b = 0; b <= 600; ++b) {
          const PsiArgs a{b, beta, li, lj};
          const double v = psi(a);
          REQUIRE(v >= 0.0);
          REQUIRE(v <= 1.0);
          // Rounding-level slack only.
          REQUIRE(v >= prev_psi - 1e-15);
          prev_psi = v;
          const double gap = std::fabs(distinct_timer_bound(a) - distinct_timer_limit(a));
          REQUIRE(gap <= prev_gap + 1e-15);
          prev_gap = gap;
        }
      }
    }
  }
  CHECK(psi(PsiArgs{10, 1.5, 0.0, 0.0}) >= psi(PsiArgs{5, 1.5, 0.0, 0.0}));
}

TEST_CASE("psi never overflows and rejects NaN") {
  CHECK(psi(PsiArgs{0, 2.0, 1e5, 0.0}) >= 0.0);
  CHECK(psi(PsiArgs{0, 2.0, 700.0, 700.0}) == 0.0);
  CHECK(std::isfinite(psi(PsiArgs{kMaxBackoffOffset, 2.0, -1e5, 1e5})));
  CHECK_THROWS_AS(psi(PsiArgs{0, 2.0, std::nan(""), 0.0}), EvaluationError);
  CHECK_THROWS_AS(psi(PsiArgs{0, 1.0, 0.0, 0.0}), ParameterError);
}

TEST_CASE("distinct-timer bound against the exact probability") {
  for (double beta : {1.1, 1.5, 2.0}) {
    for (std::int64_t b : {0, 10, 250}) {
      for (double li : {0.0, 1.0, 5.0, 10.0, 20.0}) {
        for (double lj : {0.0, 5.0, 20.0}) {
          CAPTURE(beta);
          CAPTURE(b);
          CAPTURE(li);
          CAPTURE(lj);
          const double exact = exact_distinct(li, lj, beta, b);
          CHECK(distinct_timer_bound(PsiArgs{b, beta, li, lj}) <= exact + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("distinct-timer Monte Carlo agrees with the exact probability") {
  MonteCarloOptions mc;
  mc.seed = 5;
  const PsiArgs a{250, 1.1, 0.0, 0.0};
  const auto rep = collision_lower_bound(a, mc);
  REQUIRE(rep.empirical);
  CHECK(*rep.satisfied);
  const double exact = exact_distinct(0.0, 0.0, 1.1, 250);
  CHECK(std::fabs(*rep.empirical - exact) <= 4.0 * *rep.mc_std_error);

  // Coarse grid: both timers land on the same slot.
  const PsiArgs coarse{0, 1e6, 0.0, 0.0};
  const auto c = collision_lower_bound(coarse, mc);
  CHECK(*c.empirical < 1e-4);
  CHECK(c.bound_value <= *c.empirical + 3.0 * *c.mc_std_error);
  CHECK(*c.satisfied);

  CHECK_FALSE(collision_lower_bound(a).empirical.has_value());
  CHECK_FALSE(collision_lower_bound(a).satisfied.has_value());
}

TEST_CASE("state-level bound uses w A^2 ln alpha") {
  BackoffParams p;
  p.alpha = 1.5;
  p.beta = 1.2;
  p.b_offset = 30;
  const std::vector<std::int64_t> ages{2, 3};
  const std::vector<double> w{1.0, 2.0};
  const auto r = collision_lower_bound(ages, w, p, 0, 1);
  const PsiArgs a{30, 1.2, 4.0 * std::log(1.5), 18.0 * std::log(1.5)};
  CHECK(r.bound_value == distinct_timer_bound(a));
  CHECK_THROWS_AS(collision_lower_bound(ages, w, p, 1, 1), ParameterError);
}

TEST_CASE("overhead bound") {
  const double m = 10000.0;
  auto bound = [&](double log_l, std::int64_t b, double beta) {
    return overhead_bound_from_log_rate(log_l, beta, b, 10000);
  };
  CHECK(bound(3.0, 300, 1.1) >= bound(3.0, 250, 1.1));
  // Large B: M * bound - 1 ~ B - log_beta(lambda).
  const double log_l = 20.0;
  const double beta = 1.1;
  const double lb = log_l / std::log(beta);
  const auto b = static_cast<std::int64_t>(10.0 * lb);
  const double approx = static_cast<double>(b) - lb;
  CHECK(std::fabs((bound(log_l, b, beta) * m - 1.0) - approx) <= 0.01 * approx);

  // Exact mean backoff never exceeds the bound.
  for (double ll : {0.0, 3.0, 10.0, 40.0}) {
    for (std::int64_t bo : {0, 20, 260}) {
      for (double be : {1.1, 1.5, 2.0}) {
        CHECK(exact_mean_timer(ll, be, bo) / m <= bound(ll, bo, be));
      }
    }
  }
}

TEST_CASE("overhead bound from ages") {
  const std::vector<double> w(10, 1.0);
  const auto p = default_aoi_params(w);
  const std::vector<std::int64_t> ages{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const std::vector<double> avg(ages.begin(), ages.end());
  CHECK(overhead_upper_bound(ages, w, p) == overhead_upper_bound_avg(avg, w, p));

  std::vector<double> log_rates;
  for (auto a : ages) log_rates.push_back(static_cast<double>(a * a) * std::log(p.alpha));
  CHECK(overhead_upper_bound(ages, w, p) ==
        doctest::Approx(overhead_bound_from_log_rate(log_sum_exp(log_rates), p.beta, p.b_offset,
                                                     p.minislots_per_update)));

  MonteCarloOptions mc;
  mc.seed = 3;
  const auto rep = expected_backoff_report(ages, w, p, mc);
  CHECK(*rep.satisfied);
  const double exact = exact_mean_timer(log_sum_exp(log_rates), p.beta, p.b_offset) / 10000.0;
  CHECK(std::fabs(*rep.empirical - exact) <= 4.0 * *rep.mc_std_error);

  // Huge ages stay finite.
  const std::vector<std::int64_t> huge(10, 1000000);
  CHECK(std::isfinite(overhead_upper_bound(huge, w, p)));
}

TEST_CASE("match probability on the argmax set") {
  const std::vector<double> w{1, 1};
  CHECK(theorem1_match_probability(std::vector<std::int64_t>{1, 2}, w, 9.0) ==
        doctest::Approx(6561.0 / 6570.0).epsilon(1e-12));
  CHECK(theorem1_match_probability(std::vector<std::int64_t>{3, 3}, w, 9.0) == doctest::Approx(1.0));
  const std::vector<double> w10(10, 1.0);
  const std::vector<std::int64_t> a{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  CHECK(theorem1_match_probability(a, w10, 81.0) >= 0.9);
  // Worst case at the threshold: one leader one unit ahead of everyone.
  const std::vector<double> e{5, 4, 4, 4, 4, 4, 4, 4, 4, 4};
  CHECK(theorem1_match_probability(e, match_alpha_threshold(10, 0.1)) ==
        doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("drift pair") {
  const std::vector<double> w(4, 1.0);
  const auto d = drift_pair(std::vector<std::int64_t>{3, 3, 3, 3}, w, 5.0);
  CHECK(d.csma == doctest::Approx(4.0 - 3.0));
  CHECK(d.stationary == doctest::Approx(4.0 - 3.0));

  const std::vector<double> w2{1, 1};
  const auto e = drift_pair(std::vector<std::int64_t>{1, 3}, w2, 10.0);
  const double r1 = 10.0 / (10.0 + 1e9);
  CHECK(e.csma == doctest::Approx(2.0 - (r1 * 1.0 + (1.0 - r1) * 3.0)));
  CHECK(e.stationary == doctest::Approx(0.0));
  CHECK(e.csma <= e.stationary);

  RngStream s(12, 0);
  for (int t = 0; t < 2000; ++t) {
    std::vector<std::int64_t> ages(6);
    std::vector<double> ww(6);
    for (std::size_t i = 0; i < 6; ++i) {
      ages[i] = 1 + static_cast<std::int64_t>(s.uniform_index(25));
      ww[i] = 1.0 + static_cast<double>(s.uniform_index(5));
    }
    const auto dp = drift_pair(ages, ww, std::nextafter(drift_alpha_threshold(ww), 1e300));
    CHECK(dp.csma <= dp.stationary + 1e-9);
  }
}
