#include "freshcsma/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "freshcsma/analysis/collision.hpp"
#include "freshcsma/analysis/overhead.hpp"
#include "freshcsma/analysis/theorems.hpp"
#include "freshcsma/core/error.hpp"
#include "freshcsma/core/params.hpp"
#include "freshcsma/core/rng.hpp"
#include "freshcsma/engine/step.hpp"
#include "freshcsma/policies/decisions.hpp"

namespace freshcsma {

namespace {

// Slack for closed-form comparisons that can sit exactly on the boundary
// (e.g. mass alpha/(alpha+N-1) = 1-delta at the threshold).
constexpr double kClosedFormSlack = 1e-12;

constexpr std::uint64_t kDefaultStates = 10000;
constexpr std::uint64_t kDefaultSamples = 100000;

std::int64_t draw_int(RngStream& s, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(s.uniform_index(static_cast<std::size_t>(hi - lo + 1)));
}

std::string describe(std::string_view head, const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << head << " [";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

void add_case(VerifyReport& r, std::string label, double margin) {
  VerifyCase c{std::move(label), margin, margin >= 0.0};
  if (!c.passed) ++r.failures;
  if (r.cases.empty() || margin < r.worst_margin) {
    r.worst_margin = margin;
    r.worst_label = c.label;
  }
  r.cases.push_back(std::move(c));
}

RngStream validator(std::uint64_t seed, std::uint32_t instance, std::uint32_t index = 0) {
  return RngStream(seed, substream_id(StreamRole::Validator, instance, index));
}

double match_alpha(const VerifyOptions& o) {
  return o.alpha.value_or(match_alpha_threshold(o.n_sources, o.delta));
}

// Integer exponents: thm1 uses w_i A_i^2 with integer weights, thm5 AoII.
VerifyReport verify_match(TheoremCheck check, const VerifyOptions& o) {
  VerifyReport r;
  r.check = check;
  const double alpha = match_alpha(o);
  const std::uint64_t states = o.trials.value_or(kDefaultStates);
  RngStream s = validator(o.seed, check == TheoremCheck::Thm1 ? 10 : 15);
  for (std::uint64_t t = 0; t < states; ++t) {
    std::vector<std::int64_t> values(o.n_sources);
    std::vector<double> exponents(o.n_sources);
    if (check == TheoremCheck::Thm1) {
      std::vector<double> w(o.n_sources);
      for (std::size_t i = 0; i < o.n_sources; ++i) {
        values[i] = draw_int(s, 1, 12);
        w[i] = static_cast<double>(draw_int(s, 1, 4));
      }
      exponents = weighted_age_exponents(values, w);
    } else {
      for (std::size_t i = 0; i < o.n_sources; ++i) {
        values[i] = draw_int(s, 0, 30);
        exponents[i] = static_cast<double>(values[i]);
      }
    }
    const double mass = theorem1_match_probability(exponents, alpha);
    add_case(r, describe(check == TheoremCheck::Thm1 ? "ages" : "aoii", values),
             mass - (1.0 - o.delta) + kClosedFormSlack);
  }
  return r;
}

VerifyReport verify_lemma1(const VerifyOptions& o) {
  VerifyReport r;
  r.check = TheoremCheck::Lemma1;
  const std::uint64_t samples = o.trials.value_or(kDefaultSamples);
  const std::size_t ns[] = {2, 5, 10};
  const double alphas[] = {1.1, 2.0, 9.0};
  RngStream s = validator(o.seed, 11);
  constexpr int kStates = 20;
  for (int k = 0; k < kStates; ++k) {
    const std::size_t n = ns[k % 3];
    const double alpha = alphas[(k / 3) % 3];
    std::vector<std::int64_t> ages(n);
    for (auto& a : ages) a = draw_int(s, 1, 3);
    const std::vector<double> w(n, 1.0);
    const auto expected = scheduling_prob_closed_form(weighted_age_exponents(ages, w), alpha);

    BackoffParams params;
    params.alpha = alpha;
    std::vector<RngStream> streams;
    for (std::size_t i = 0; i < n; ++i) {
      streams.push_back(validator(o.seed, 100 + static_cast<std::uint32_t>(k),
                                  static_cast<std::uint32_t>(i)));
    }
    const AgeState state = AgeState::from_frame_ages(ages);
    std::vector<std::uint64_t> wins(n, 0);
    TimerVector timers;
    for (std::uint64_t t = 0; t < samples; ++t) {
      fill_fresh_csma_timers(streams, state, w, params, AccessModel::Idealized,
                             Freshness::FrameAge, {}, timers);
      const auto out = resolve_continuous(timers.log_timers);
      if (out.delivered) ++wins[*out.delivered];
    }
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double p = expected[i];
      const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
      const double dev = std::fabs(static_cast<double>(wins[i]) / static_cast<double>(samples) - p);
      // In standard errors; a zero-variance source must match exactly.
      const double margin = se > 0.0 ? o.sigma - dev / se : (dev == 0.0 ? o.sigma : -dev);
      worst = std::min(worst, margin);
    }
    std::ostringstream label;
    label << "alpha=" << alpha << " " << describe("ages", ages);
    add_case(r, label.str(), worst);
  }
  return r;
}

VerifyReport verify_lemma2(const VerifyOptions& o) {
  VerifyReport r;
  r.check = TheoremCheck::Lemma2;
  const std::uint64_t states = o.trials.value_or(kDefaultStates);
  RngStream s = validator(o.seed, 12);
  for (std::uint64_t t = 0; t < states; ++t) {
    std::vector<std::int64_t> ages(o.n_sources);
    std::vector<double> w(o.n_sources);
    for (std::size_t i = 0; i < o.n_sources; ++i) {
      ages[i] = draw_int(s, 1, 20);
      w[i] = static_cast<double>(draw_int(s, 1, 4));
    }
    const double alpha = o.alpha.value_or(drift_alpha_threshold(w) + 1.0);
    const auto d = drift_pair(ages, w, alpha);
    double scale = 0.0;
    for (std::size_t i = 0; i < ages.size(); ++i) {
      scale += std::sqrt(w[i]) * static_cast<double>(ages[i]);
    }
    add_case(r, describe("ages", ages), d.stationary - d.csma + kClosedFormSlack * scale);
  }
  return r;
}

VerifyReport verify_thm3(const VerifyOptions& o) {
  VerifyReport r;
  r.check = TheoremCheck::Thm3;
  MonteCarloOptions mc;
  mc.trials = o.trials.value_or(kDefaultSamples);
  mc.sigma = o.sigma;
  const double log_lambdas[] = {0.0, 1.0, 5.0, 10.0, 20.0};
  const double betas[] = {1.1, 1.5, 2.0};
  const std::int64_t offsets[] = {0, 10, 250};
  std::uint64_t index = 0;
  for (double beta : betas) {
    for (double li : log_lambdas) {
      for (double lj : log_lambdas) {
        double previous = -1.0;
        for (std::int64_t b : offsets) {
          const PsiArgs args{b, beta, li, lj};
          mc.seed = replication_seed(o.seed, ++index);
          const auto rep = collision_lower_bound(args, mc);
          std::ostringstream label;
          label << "beta=" << beta << " B=" << b << " ln_li=" << li << " ln_lj=" << lj;
          add_case(r, label.str(),
                   *rep.empirical - (rep.bound_value - o.sigma * *rep.mc_std_error));
          add_case(r, label.str() + " monotone-in-B", rep.bound_value - previous);
          previous = rep.bound_value;
        }
      }
    }
  }
  return r;
}

VerifyReport verify_thm4(const VerifyOptions& o) {
  VerifyReport r;
  r.check = TheoremCheck::Thm4;
  MonteCarloOptions mc;
  mc.trials = o.trials.value_or(kDefaultSamples);
  const std::vector<double> w(o.n_sources, 1.0);
  const BackoffParams params = default_aoi_params(w);
  RngStream s = validator(o.seed, 14);
  constexpr int kStates = 10;
  for (int k = 0; k < kStates; ++k) {
    std::vector<std::int64_t> ages(o.n_sources);
    for (auto& a : ages) a = draw_int(s, 1, 15);
    mc.seed = replication_seed(o.seed, static_cast<std::uint64_t>(k) + 1);
    const auto rep = expected_backoff_report(ages, w, params, mc);
    add_case(r, describe("ages", ages), rep.bound_value - *rep.empirical);
  }
  return r;
}

}  // namespace

std::string_view to_string(TheoremCheck t) {
  switch (t) {
    case TheoremCheck::Thm1: return "thm1";
    case TheoremCheck::Lemma1: return "lemma1";
    case TheoremCheck::Lemma2: return "lemma2";
    case TheoremCheck::Thm3: return "thm3";
    case TheoremCheck::Thm4: return "thm4";
    case TheoremCheck::Thm5: return "thm5";
  }
  return "thm1";
}

std::vector<TheoremCheck> all_theorem_checks() {
  return {TheoremCheck::Thm1, TheoremCheck::Lemma1, TheoremCheck::Lemma2,
          TheoremCheck::Thm3, TheoremCheck::Thm4,   TheoremCheck::Thm5};
}

TheoremCheck parse_theorem_check(std::string_view name) {
  for (auto t : all_theorem_checks()) {
    if (name == to_string(t)) return t;
  }
  throw ParameterError("unknown check '" + std::string(name) +
                       "' (expected thm1, lemma1, lemma2, thm3, thm4 or thm5)");
}

VerifyReport verify(TheoremCheck check, const VerifyOptions& options) {
  if (options.n_sources < 1) throw ParameterError("n must be positive");
  if (!(options.delta > 0.0 && options.delta < 1.0)) throw ParameterError("delta must lie in (0,1)");
  if (options.trials && *options.trials == 0) throw ParameterError("trials must be positive");
  switch (check) {
    case TheoremCheck::Thm1:
    case TheoremCheck::Thm5: return verify_match(check, options);
    case TheoremCheck::Lemma1: return verify_lemma1(options);
    case TheoremCheck::Lemma2: return verify_lemma2(options);
    case TheoremCheck::Thm3: return verify_thm3(options);
    case TheoremCheck::Thm4: return verify_thm4(options);
  }
  return {};
}

}  // namespace freshcsma
