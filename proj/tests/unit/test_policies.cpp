#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "freshcsma/core/error.hpp"
#include "freshcsma/core/rng.hpp"
#include "freshcsma/core/timers.hpp"
#include "freshcsma/engine/step.hpp"
#include "freshcsma/policies/decisions.hpp"
#include "freshcsma/policies/policy.hpp"

using namespace freshcsma;

namespace {

std::vector<RngStream> streams(std::size_t n, std::uint64_t seed) {
  std::vector<RngStream> s;
  for (std::size_t i = 0; i < n; ++i) {
    s.emplace_back(seed, substream_id(StreamRole::SourceTimer, 77, static_cast<std::uint32_t>(i)));
  }
  return s;
}

// Direct alpha^e / sum alpha^e in long double; only valid for small e.
std::vector<double> naive_probs(const std::vector<double>& e, double alpha) {
  long double total = 0.0L;
  std::vector<long double> v(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    v[i] = std::pow(static_cast<long double>(alpha), static_cast<long double>(e[i]));
    total += v[i];
  }
  std::vector<double> out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = static_cast<double>(v[i] / total);
  return out;
}

std::vector<double> win_frequencies(std::vector<RngStream>& s, const AgeState& ages,
                                    const std::vector<double>& w, const BackoffParams& p,
                                    Freshness f, const std::vector<std::int64_t>& aoii, int trials) {
  std::vector<double> wins(ages.size(), 0.0);
  TimerVector t;
  for (int k = 0; k < trials; ++k) {
    fill_fresh_csma_timers(s, ages, w, p, AccessModel::Idealized, f, aoii, t);
    const auto o = resolve_continuous(t.log_timers);
    REQUIRE(o.delivered);
    wins[*o.delivered] += 1.0;
  }
  for (auto& x : wins) x /= trials;
  return wins;
}

double mc_tol(double p, int n) { return 4.0 * std::sqrt(p * (1.0 - p) / n) + 1e-12; }

}  // namespace

TEST_CASE("max-weight picks the largest w A^2") {
  RngStream tie(1, 0);
  CHECK(max_weight_decide(AgeState::from_frame_ages({2, 3, 5}), std::vector<double>{1, 1, 1}, tie) == 2);
  CHECK(max_weight_decide(AgeState::from_frame_ages({3, 2}), std::vector<double>{1, 2}, tie) == 0);
}

TEST_CASE("max-weight breaks exact ties uniformly") {
  RngStream tie(2, 0);
  const auto ages = AgeState::from_frame_ages({1, 2});
  const std::vector<double> w{4, 1};
  int first = 0;
  constexpr int n = 20000;
  for (int i = 0; i < n; ++i) first += max_weight_decide(ages, w, tie) == 0;
  CHECK(std::fabs(first / double(n) - 0.5) < mc_tol(0.5, n));
}

TEST_CASE("max-AoII argmax and ties") {
  RngStream tie(3, 0);
  CHECK(max_aoii_decide(std::vector<std::int64_t>{0, 0, 4}, tie) == 2);
  std::vector<int> all(3, 0), two(3, 0);
  constexpr int n = 30000;
  for (int i = 0; i < n; ++i) {
    ++all[max_aoii_decide(std::vector<std::int64_t>{0, 0, 0}, tie)];
    ++two[max_aoii_decide(std::vector<std::int64_t>{2, 5, 5}, tie)];
  }
  for (int c : all) CHECK(std::fabs(c / double(n) - 1.0 / 3.0) < mc_tol(1.0 / 3.0, n));
  CHECK(two[0] == 0);
  CHECK(std::fabs(two[1] / double(n) - 0.5) < mc_tol(0.5, n));
}

TEST_CASE("stationary randomized probabilities") {
  auto p = stationary_randomized_probs(std::vector<double>{1, 1, 1, 1});
  for (double x : p) CHECK(x == doctest::Approx(0.25));
  p = stationary_randomized_probs(std::vector<double>{1, 4, 9});
  CHECK(p[0] == doctest::Approx(1.0 / 6));
  CHECK(p[1] == doctest::Approx(2.0 / 6));
  CHECK(p[2] == doctest::Approx(3.0 / 6));
  CHECK(stationary_randomized_probs(std::vector<double>{1})[0] == 1.0);

  RngStream s(4, 0);
  for (int t = 0; t < 500; ++t) {
    std::vector<double> w(1 + s.uniform_index(20));
    for (auto& x : w) x = 0.1 + 10.0 * s.uniform();
    const auto a = stationary_randomized_probs(w);
    CHECK(std::fabs(std::accumulate(a.begin(), a.end(), 0.0) - 1.0) <= 1e-12);
    const double c = 0.01 + 100.0 * s.uniform();
    std::vector<double> scaled = w;
    for (auto& x : scaled) x *= c;
    const auto b = stationary_randomized_probs(scaled);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-12));
  }
}

TEST_CASE("scheduling probability closed form") {
  auto r = scheduling_prob_closed_form(std::vector<double>{1, 1}, 5.0);
  CHECK(r[0] == doctest::Approx(0.5));
  r = scheduling_prob_closed_form(std::vector<double>{1, 4}, 2.0);
  CHECK(r[0] == doctest::Approx(2.0 / 18));
  CHECK(r[1] == doctest::Approx(16.0 / 18));
  r = scheduling_prob_closed_form(std::vector<double>{1, 1, 4}, 3.0);
  CHECK(r[0] == doctest::Approx(3.0 / 87));
  CHECK(r[2] == doctest::Approx(81.0 / 87));

  // Far past the linear-domain overflow point.
  r = scheduling_prob_closed_form(std::vector<double>{1e6, 1e6 - 1, 3}, 1.1);
  CHECK(std::isfinite(r[0]));
  CHECK(r[0] == doctest::Approx(1.1 / 2.1));
}

TEST_CASE("closed form agrees with direct evaluation and is shift invariant") {
  RngStream s(5, 0);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + s.uniform_index(10);
    const double alpha = 1.01 + 8.0 * s.uniform();
    std::vector<double> e(n);
    for (auto& x : e) x = static_cast<double>(s.uniform_index(40));
    const auto r = scheduling_prob_closed_form(e, alpha);
    const auto ref = naive_probs(e, alpha);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(r[i] == doctest::Approx(ref[i]).epsilon(1e-12));
      sum += r[i];
    }
    CHECK(std::fabs(sum - 1.0) <= 1e-12);
    // Common rate scaling = common exponent shift.
    std::vector<double> shifted = e;
    const double c = 1000.0 * s.uniform();
    for (auto& x : shifted) x += c;
    const auto r2 = scheduling_prob_closed_form(shifted, alpha);
    for (std::size_t i = 0; i < n; ++i) CHECK(r2[i] == doctest::Approx(r[i]).epsilon(1e-9));
  }
}

TEST_CASE("idealized CSMA is state independent and symmetric") {
  auto s = streams(4, 10);
  constexpr int n = 100000;
  std::vector<double> wins(4, 0.0);
  std::vector<double> sum(4, 0.0);
  for (int k = 0; k < n; ++k) {
    const auto t = idealized_csma_timers(s, 2.0);
    for (std::size_t i = 0; i < 4; ++i) sum[i] += t.value(i);
    const auto o = resolve_continuous(t.log_timers);
    wins[*o.delivered] += 1.0;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::fabs(wins[i] / n - 0.25) <= 0.01);
    CHECK(std::fabs(sum[i] / n - 0.5) <= 0.01);
  }
  auto one = streams(1, 11);
  for (int k = 0; k < 100; ++k) {
    CHECK(resolve_continuous(idealized_csma_timers(one, 2.0).log_timers).delivered == 0u);
  }
}

TEST_CASE("fresh CSMA winner frequencies follow the closed form") {
  constexpr int n = 100000;
  BackoffParams p;
  p.alpha = 2.0;
  const std::vector<double> w{1, 1};
  auto s = streams(2, 12);
  auto f = win_frequencies(s, AgeState::from_frame_ages({1, 1}), w, p, Freshness::FrameAge, {}, n);
  CHECK(std::fabs(f[0] - 0.5) <= mc_tol(0.5, n));
  f = win_frequencies(s, AgeState::from_frame_ages({1, 2}), w, p, Freshness::FrameAge, {}, n);
  CHECK(std::fabs(f[0] - 2.0 / 18) <= mc_tol(2.0 / 18, n));

  // AoII exponents ignore weights and ages.
  auto s3 = streams(3, 13);
  const std::vector<double> w3{5, 7, 0.5};
  f = win_frequencies(s3, AgeState::from_frame_ages({9, 4, 1}), w3, p, Freshness::Aoii, {0, 0, 3}, n);
  CHECK(std::fabs(f[2] - 0.8) <= mc_tol(0.8, n));
}

TEST_CASE("AoII mode needs AoII values") {
  auto s = streams(2, 14);
  BackoffParams p;
  CHECK_THROWS_AS(fresh_csma_timers(s, AgeState::fresh(2), std::vector<double>{1, 1}, p,
                                    AccessModel::Idealized, Freshness::Aoii),
                  ParameterError);
  Policy pol(PolicyKind::IdealizedFreshCsmaAoii, {1, 1}, p, 1);
  CHECK_THROWS_AS(pol.decide(AgeState::fresh(2)), ParameterError);
}

TEST_CASE("near-realistic timers are the discretized continuous timers") {
  BackoffParams p;
  p.alpha = 1.3;
  p.beta = 1.1;
  p.b_offset = 40;
  const std::vector<double> w{1, 2, 3, 1, 1};
  const auto ages = AgeState::from_frame_ages({1, 2, 3, 4, 5});
  auto a = streams(5, 15);
  auto b = streams(5, 15);
  for (int k = 0; k < 1000; ++k) {
    const auto cont = fresh_csma_timers(a, ages, w, p, AccessModel::Idealized, Freshness::FrameAge);
    const auto disc = fresh_csma_timers(b, ages, w, p, AccessModel::NearRealistic, Freshness::FrameAge);
    REQUIRE(disc.minislots.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(disc.minislots[i] >= 0);
      CHECK(disc.log_timers[i] == cont.log_timers[i]);
      CHECK(disc.minislots[i] == discretize_log_timer(cont.log_timers[i], p));
    }
  }
}

TEST_CASE("policy objects emit the right kind of decision") {
  BackoffParams p;
  for (auto kind : kAllPolicyKinds) {
    CAPTURE(to_string(kind));
    Policy pol(kind, {1, 2, 3}, p, 9);
    const std::vector<std::int64_t> aoii{0, 1, 2};
    const auto& d = pol.decide(AgeState::from_frame_ages({3, 2, 1}), aoii);
    const auto t = traits(kind);
    CHECK(d.scheduled.has_value() == t.centralized);
    if (!t.centralized) {
      CHECK(d.timers.size() == 3);
      CHECK(d.timers.model == t.model);
    }
    CHECK(parse_policy_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_policy_kind("aloha"), ParameterError);
}

TEST_CASE("policy draws depend only on seed and kind") {
  BackoffParams p;
  Policy a(PolicyKind::IdealizedFreshCsma, {1, 1, 1}, p, 5);
  Policy b(PolicyKind::IdealizedFreshCsma, {1, 1, 1}, p, 5);
  Policy c(PolicyKind::NearRealisticFreshCsma, {1, 1, 1}, p, 5);
  const auto ages = AgeState::fresh(3);
  for (int k = 0; k < 100; ++k) {
    const auto x = a.decide(ages).timers.log_timers;
    CHECK(x == b.decide(ages).timers.log_timers);
    CHECK(x != c.decide(ages).timers.log_timers);
  }
}
