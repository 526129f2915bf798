#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freshcsma/core/params.hpp"
#include "freshcsma/core/types.hpp"
#include "freshcsma/engine/engine.hpp"
#include "freshcsma/policies/policy_kind.hpp"

namespace freshcsma {

enum class WeightScheme { Uniform, Sqrt, List };

/// The single parameter a sweep varies.
enum class SweepParam { None, NSources, Alpha, Beta, BOffset, MinislotsPerUpdate, MarkovQ };

std::string_view to_string(SweepParam p);
SweepParam parse_sweep_param(std::string_view text);

/// Everything needed to reproduce one results table.
///
/// Unset protocol parameters follow the default formulas for the point's N
/// and weights (the AoII set when markov_q is present).
struct ExperimentSpec {
  std::string scenario = "custom";
  std::vector<PolicyKind> policies;
  std::size_t n_sources = 10;
  WeightScheme weight_scheme = WeightScheme::Uniform;
  std::vector<double> weight_list;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::int64_t> b_offset;
  std::optional<std::int64_t> minislots_per_update;
  double delta_scale = 0.01;
  LogBase log_base = LogBase::Ten;
  std::optional<double> markov_q;
  std::uint64_t horizon_deliveries = 100000;
  std::uint64_t max_frames_factor = 10;
  std::uint64_t replications = 1;
  std::uint64_t seed = 1;
  std::string output;
  SweepParam sweep_param = SweepParam::None;
  std::vector<double> sweep_values;

  /// Throws ParameterError.
  void validate() const;
};

/// One fully resolved sweep point.
struct SweepPoint {
  double value = 0.0;
  NetworkConfig config;
  BackoffParams params;
  std::optional<MarkovSettings> markov;
};

std::vector<double> make_weights(WeightScheme scheme, std::size_t n,
                                 const std::vector<double>& list = {});

/// Resolves every sweep point in ascending swept value. Without a sweep,
/// yields one point whose value is 0.
std::vector<SweepPoint> expand(const ExperimentSpec& spec);

/// Flat "key = value" text, '#' starts a comment. Unknown keys, repeated
/// keys and malformed values throw ParameterError naming the line.
ExperimentSpec parse_config(std::istream& in);
ExperimentSpec parse_config_text(const std::string& text);
ExperimentSpec parse_config_file(const std::string& path);

/// Comma-separated numbers, or start:stop:step (inclusive of stop up to
/// rounding).
std::vector<double> parse_value_list(std::string_view text);
std::vector<PolicyKind> parse_policy_list(std::string_view text);

}  // namespace freshcsma
