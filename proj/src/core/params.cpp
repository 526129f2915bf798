#include "freshcsma/core/params.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "freshcsma/core/error.hpp"

namespace freshcsma {

namespace {

double log_in(LogBase base, double x) {
  return base == LogBase::Ten ? std::log10(x) : std::log(x);
}

// max(log(log N), 0); log(log 1) = log 0 = -inf clamps to 0.
double loglog_clamped(std::size_t n, LogBase base) {
  const double inner = log_in(base, static_cast<double>(n));
  if (!(inner > 0.0)) return 0.0;
  return std::max(log_in(base, inner), 0.0);
}

}  // namespace

LogBase parse_log_base(const std::string& text) {
  if (text == "10" || text == "ten") return LogBase::Ten;
  if (text == "e" || text == "ln" || text == "natural") return LogBase::Natural;
  throw ParameterError("unknown log base '" + text + "' (expected 10 or e)");
}

std::string to_string(LogBase base) { return base == LogBase::Ten ? "10" : "e"; }

BackoffParams default_aoi_params(std::span<const double> weights, LogBase base) {
  if (weights.empty()) throw ParameterError("at least one source is required");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const std::size_t n = weights.size();
  BackoffParams p;
  p.alpha = 1.0 + 1.0 / total;
  p.beta = 1.1 + loglog_clamped(n, base);
  p.b_offset = 250 + static_cast<std::int64_t>(n);
  p.minislots_per_update = kDefaultMinislotsPerUpdate;
  return p;
}

BackoffParams default_aoii_params(std::size_t n_sources, LogBase base) {
  if (n_sources == 0) throw ParameterError("at least one source is required");
  BackoffParams p;
  p.alpha = 2.1;
  p.beta = 1.05 + loglog_clamped(n_sources, base);
  p.b_offset = 250 + static_cast<std::int64_t>(n_sources / 4);
  p.minislots_per_update = kDefaultMinislotsPerUpdate;
  return p;
}

double match_alpha_threshold(std::size_t n_sources, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must be in (0, 1)");
  return static_cast<double>(n_sources - 1) * (1.0 - delta) / delta;
}

double drift_alpha_threshold(std::span<const double> weights) {
  if (weights.empty()) throw ParameterError("at least one source is required");
  double sum_sqrt = 0.0;
  double min_sqrt = std::sqrt(weights[0]);
  for (double w : weights) {
    sum_sqrt += std::sqrt(w);
    min_sqrt = std::min(min_sqrt, std::sqrt(w));
  }
  return static_cast<double>(weights.size() - 1) * sum_sqrt / min_sqrt;
}

ValidationReport validate_params(const NetworkConfig& config, const BackoffParams& params,
                                 double match_delta, LogBase base) {
  config.validate();
  params.validate();

  ValidationReport report;
  report.match_delta = match_delta;
  report.match_threshold = match_alpha_threshold(config.n_sources, match_delta);
  report.meets_match_threshold = params.alpha >= report.match_threshold;
  report.drift_threshold = drift_alpha_threshold(config.weights);
  report.meets_drift_threshold = params.alpha > report.drift_threshold;
  report.integer_weights = std::all_of(config.weights.begin(), config.weights.end(),
                                       [](double w) { return w == std::floor(w); });
  report.defaults = default_aoi_params(config.weights, base);

  if (!report.meets_match_threshold) {
    std::ostringstream os;
    os << "alpha=" << params.alpha << " is below the per-frame match threshold "
       << report.match_threshold << " for delta=" << match_delta;
    report.warnings.push_back(os.str());
  }
  if (!report.meets_drift_threshold) {
    std::ostringstream os;
    os << "alpha=" << params.alpha << " does not exceed the drift threshold "
       << report.drift_threshold;
    report.warnings.push_back(os.str());
  }
  if (!report.integer_weights) {
    report.warnings.push_back("non-integer weights: threshold guarantees do not apply");
  }
  return report;
}

}  // namespace freshcsma
