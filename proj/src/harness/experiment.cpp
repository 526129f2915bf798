#include "freshcsma/harness/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "freshcsma/analysis/collision.hpp"
#include "freshcsma/analysis/overhead.hpp"
#include "freshcsma/core/rng.hpp"
#include "freshcsma/engine/engine.hpp"

namespace freshcsma {

namespace {

struct Bounds {
  double overhead_minislots = 0.0;
  std::optional<double> distinct;
};

// Horizon bounds from average ages (or average AoII for AoII policies).
Bounds horizon_bounds(const SimulationResult& r, Freshness freshness) {
  const auto& p = r.params;
  const double ln_alpha = std::log(p.alpha);
  std::vector<double> log_rates(r.config.n_sources);
  Bounds b;
  if (freshness == Freshness::Aoii) {
    for (std::size_t i = 0; i < log_rates.size(); ++i) {
      log_rates[i] = r.per_source_avg_aoii[i] * ln_alpha;
    }
    b.overhead_minislots = overhead_upper_bound_avg_aoii(r.per_source_avg_aoii, p);
  } else {
    for (std::size_t i = 0; i < log_rates.size(); ++i) {
      const double a = r.per_source_avg_aoi[i];
      log_rates[i] = r.config.weights[i] * (a * a) * ln_alpha;
    }
    b.overhead_minislots = overhead_upper_bound_avg(r.per_source_avg_aoi, r.config.weights, p);
  }
  b.overhead_minislots *= static_cast<double>(p.minislots_per_update);
  if (log_rates.size() >= 2) {
    std::vector<double> sorted = log_rates;
    std::partial_sort(sorted.begin(), sorted.begin() + 2, sorted.end(), std::greater<>());
    b.distinct = distinct_timer_bound(PsiArgs{p.b_offset, p.beta, sorted[0], sorted[1]});
  }
  return b;
}

}  // namespace

Summary summarize_samples(const std::vector<double>& samples) {
  Summary s;
  if (samples.empty()) return s;
  const double n = static_cast<double>(samples.size());
  s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  if (samples.size() >= 2) {
    double ss = 0.0;
    for (double v : samples) ss += (v - s.mean) * (v - s.mean);
    s.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return s;
}

ResultTable run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  ResultTable table;
  for (const auto& point : expand(spec)) {
    for (auto kind : spec.policies) {
      const auto tr = traits(kind);
      const bool near = tr.model == AccessModel::NearRealistic && !tr.centralized;
      std::vector<double> aoi, aoii, coll, ovh, frames, ovh_bound, distinct;
      for (std::uint64_t rep = 0; rep < spec.replications; ++rep) {
        NetworkConfig cfg = point.config;
        cfg.seed = replication_seed(spec.seed, rep);
        Engine engine(cfg, kind, point.params, point.markov);
        const auto r = engine.run(Horizon::deliveries(spec.horizon_deliveries,
                                                      spec.max_frames_factor));
        aoi.push_back(r.normalized_weighted_avg_aoi);
        if (r.normalized_avg_aoii) aoii.push_back(*r.normalized_avg_aoii);
        coll.push_back(r.collision_rate);
        ovh.push_back(r.avg_overhead_minislots);
        frames.push_back(static_cast<double>(r.frames));
        if (near) {
          const auto b = horizon_bounds(r, tr.input);
          ovh_bound.push_back(b.overhead_minislots);
          if (b.distinct) distinct.push_back(*b.distinct);
        }
      }
      ResultRow row;
      row.scenario = spec.scenario;
      row.policy = kind;
      row.n_sources = point.config.n_sources;
      row.sweep_param = spec.sweep_param;
      row.sweep_value = point.value;
      row.replications = spec.replications;
      row.aoi = summarize_samples(aoi);
      if (!aoii.empty()) row.aoii = summarize_samples(aoii);
      row.collision_rate = summarize_samples(coll);
      row.overhead_minislots = summarize_samples(ovh);
      row.frames = summarize_samples(frames);
      if (!ovh_bound.empty()) row.overhead_bound_minislots = summarize_samples(ovh_bound).mean;
      if (!distinct.empty()) row.distinct_timer_bound = summarize_samples(distinct).mean;
      row.params = point.params;
      row.log_base = spec.log_base;
      row.seed = spec.seed;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

Record to_record(const ResultRow& row) {
  Record r;
  r.add("scenario", row.scenario);
  r.add("policy", to_string(row.policy));
  r.add("n_sources", static_cast<std::uint64_t>(row.n_sources));
  r.add("sweep_param", to_string(row.sweep_param));
  r.add("sweep_value", row.sweep_param == SweepParam::None ? std::nullopt
                                                            : std::optional<double>(row.sweep_value));
  r.add("replications", row.replications);
  r.add("normalized_weighted_avg_aoi", row.aoi.mean);
  r.add("normalized_weighted_avg_aoi_stderr", row.aoi.std_error);
  r.add("normalized_avg_aoii", row.aoii ? std::optional<double>(row.aoii->mean) : std::nullopt);
  r.add("normalized_avg_aoii_stderr", row.aoii ? row.aoii->std_error : std::nullopt);
  r.add("collision_rate", row.collision_rate.mean);
  r.add("collision_rate_stderr", row.collision_rate.std_error);
  r.add("avg_overhead_minislots", row.overhead_minislots.mean);
  r.add("avg_overhead_minislots_stderr", row.overhead_minislots.std_error);
  r.add("overhead_bound_minislots", row.overhead_bound_minislots);
  r.add("distinct_timer_bound", row.distinct_timer_bound);
  r.add("frames", row.frames.mean);
  r.add("alpha", row.params.alpha);
  r.add("beta", row.params.beta);
  r.add("b_offset", row.params.b_offset);
  r.add("minislots_per_update", row.params.minislots_per_update);
  r.add("log_base", to_string(row.log_base));
  r.add("seed", row.seed);
  return r;
}

void write_csv(std::ostream& out, const ResultTable& table) {
  std::vector<Record> records;
  records.reserve(table.rows.size());
  for (const auto& row : table.rows) records.push_back(to_record(row));
  if (records.empty()) return;
  write_csv(out, records);
}

void write_csv_file(const std::string& path, const ResultTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(out, table);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace freshcsma
