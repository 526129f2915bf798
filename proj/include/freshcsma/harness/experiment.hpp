#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "freshcsma/harness/config.hpp"
#include "freshcsma/harness/record.hpp"

namespace freshcsma {

/// Mean and standard error across replications (error absent for one).
struct Summary {
  double mean = 0.0;
  std::optional<double> std_error;
};

struct ResultRow {
  std::string scenario;
  PolicyKind policy = PolicyKind::MaxWeight;
  std::size_t n_sources = 0;
  SweepParam sweep_param = SweepParam::None;
  double sweep_value = 0.0;
  std::uint64_t replications = 0;
  Summary aoi;
  std::optional<Summary> aoii;
  Summary collision_rate;
  Summary overhead_minislots;
  Summary frames;
  /// Horizon overhead approximation at the simulated average ages, in
  /// minislots. Near-realistic policies only.
  std::optional<double> overhead_bound_minislots;
  /// Pairwise distinct-timer lower bound for the two sources with the
  /// largest average rates. Near-realistic policies with N >= 2 only.
  std::optional<double> distinct_timer_bound;
  BackoffParams params;
  LogBase log_base = LogBase::Ten;
  std::uint64_t seed = 0;
};

struct ResultTable {
  std::vector<ResultRow> rows;
};

/// Runs every (sweep point, policy, replication). Replication r of every
/// policy uses replication_seed(spec.seed, r), so policies see the same
/// Markov source paths. Rows are ordered by swept value, then by the
/// spec's policy order.
ResultTable run_experiment(const ExperimentSpec& spec);

Summary summarize_samples(const std::vector<double>& samples);

Record to_record(const ResultRow& row);
void write_csv(std::ostream& out, const ResultTable& table);
/// Throws std::runtime_error when the file cannot be written in full.
void write_csv_file(const std::string& path, const ResultTable& table);

}  // namespace freshcsma
