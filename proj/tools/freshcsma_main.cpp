// freshcsma: figure presets, config-driven simulations, parameter sweeps
// and theorem checks. Exit codes: 0 success, 1 a check failed, 2 usage,
// configuration or I/O error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "freshcsma/core/error.hpp"
#include "freshcsma/harness/config.hpp"
#include "freshcsma/harness/experiment.hpp"
#include "freshcsma/harness/preset.hpp"
#include "freshcsma/harness/record.hpp"
#include "freshcsma/harness/verify.hpp"

namespace fc = freshcsma;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char* kOutputDirEnv = "FRESHCSMA_OUTPUT_DIR";

struct CommonOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> horizon;
  std::optional<std::uint64_t> replications;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOverrides& o) {
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--horizon", o.horizon, "Delivered updates per run")->check(CLI::PositiveNumber);
  cmd->add_option("--replications", o.replications, "Replications per point")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", o.output, "CSV path ('-' for stdout)");
}

void apply(fc::ExperimentSpec& spec, const CommonOverrides& o) {
  if (o.seed) spec.seed = *o.seed;
  if (o.horizon) spec.horizon_deliveries = *o.horizon;
  if (o.replications) spec.replications = *o.replications;
  if (!o.output.empty()) spec.output = o.output;
}

// Explicit path wins; otherwise <$FRESHCSMA_OUTPUT_DIR>/<scenario>.csv;
// otherwise stdout.
std::string resolve_output(const fc::ExperimentSpec& spec) {
  if (!spec.output.empty()) return spec.output;
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    return (std::filesystem::path(dir) / (spec.scenario + ".csv")).string();
  }
  return "-";
}

int emit(const fc::ExperimentSpec& spec) {
  spec.validate();
  const auto table = fc::run_experiment(spec);
  const auto path = resolve_output(spec);
  if (path == "-") {
    fc::write_csv(std::cout, table);
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("write to stdout failed");
  } else {
    fc::write_csv_file(path, table);
    std::cerr << "wrote " << table.rows.size() << " rows to " << path << '\n';
  }
  return kExitOk;
}

int run_verify(fc::TheoremCheck check, const fc::VerifyOptions& options, bool details) {
  const auto report = fc::verify(check, options);
  if (details) {
    for (const auto& c : report.cases) {
      std::cout << (c.passed ? "  ok   " : "  FAIL ") << "margin=" << fc::format_number(c.margin)
                << "  " << c.label << '\n';
    }
  }
  std::cout << fc::to_string(check) << ": " << (report.passed() ? "PASS" : "FAIL") << "  cases="
            << report.cases.size() << " failures=" << report.failures
            << " worst_margin=" << fc::format_number(report.worst_margin) << "  (" << report.worst_label
            << ")\n";
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fresh-CSMA scheduling simulator and bound checker"};
  app.require_subcommand(1);

  std::string log_base_text = "10";
  app.add_option("--log-base", log_base_text,
                 "Base of the log in the default parameter formulas (10 or e)")
      ->capture_default_str();

  CommonOverrides sim_o;
  std::string config_path;
  auto* simulate = app.add_subcommand("simulate", "Run the experiment described by a config file");
  simulate->add_option("config", config_path, "Config file")->required();
  add_common(simulate, sim_o);

  CommonOverrides pre_o;
  std::string preset_name;
  std::optional<std::size_t> preset_n;
  bool list_presets = false;
  auto* preset = app.add_subcommand("preset", "Reproduce a figure at desk scale");
  preset->add_option("name", preset_name, "Preset name");
  preset->add_option("-n,--n", preset_n, "Pin the number of sources")->check(CLI::PositiveNumber);
  preset->add_flag("--list", list_presets, "List preset names");
  add_common(preset, pre_o);

  CommonOverrides sw_o;
  std::string sweep_param, sweep_values, sweep_config, sweep_preset, sweep_policies;
  std::optional<std::size_t> sweep_n;
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter over explicit values");
  sweep->add_option("--param", sweep_param,
                    "n_sources, alpha, beta, b_offset, minislots_per_update or markov_q")
      ->required();
  sweep->add_option("--values", sweep_values, "v1,v2,... or start:stop:step")->required();
  auto* base_cfg = sweep->add_option("--config", sweep_config, "Base config file");
  sweep->add_option("--preset", sweep_preset, "Base preset")->excludes(base_cfg);
  sweep->add_option("--policies", sweep_policies, "Comma-separated policy names");
  sweep->add_option("-n,--n", sweep_n, "Number of sources")->check(CLI::PositiveNumber);
  add_common(sweep, sw_o);

  std::string theorem;
  fc::VerifyOptions vopt;
  std::optional<std::uint64_t> vtrials;
  bool details = false;
  auto* verify = app.add_subcommand("verify", "Check a theorem over randomized states");
  verify->add_option("theorem", theorem, "thm1, lemma1, lemma2, thm3, thm4, thm5 or all")
      ->required();
  verify->add_option("--trials", vtrials, "States (thm1/thm5/lemma2) or samples per case")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "Seed")->capture_default_str();
  verify->add_option("-n,--n", vopt.n_sources, "Number of sources")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--delta", vopt.delta, "Mismatch tolerance for thm1/thm5")
      ->capture_default_str();
  verify->add_option("--alpha", vopt.alpha, "Override alpha");
  verify->add_option("--sigma", vopt.sigma, "Monte Carlo acceptance in standard errors")
      ->capture_default_str();
  verify->add_flag("--details", details, "Print every case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto log_base = fc::parse_log_base(log_base_text);
    if (*simulate) {
      auto spec = fc::parse_config_file(config_path);
      apply(spec, sim_o);
      return emit(spec);
    }
    if (*preset) {
      if (list_presets) {
        for (const auto& n : fc::preset_names()) std::cout << n << '\n';
        return kExitOk;
      }
      if (preset_name.empty()) throw fc::ParameterError("preset name required (see --list)");
      auto spec = fc::preset(preset_name, preset_n, log_base);
      apply(spec, pre_o);
      return emit(spec);
    }
    if (*sweep) {
      fc::ExperimentSpec spec;
      if (!sweep_config.empty()) {
        spec = fc::parse_config_file(sweep_config);
      } else if (!sweep_preset.empty()) {
        spec = fc::preset(sweep_preset, std::nullopt, log_base);
      } else {
        spec.scenario = "sweep";
        spec.log_base = log_base;
        spec.policies = {fc::PolicyKind::NearRealisticFreshCsma};
      }
      if (!sweep_policies.empty()) spec.policies = fc::parse_policy_list(sweep_policies);
      spec.sweep_param = fc::parse_sweep_param(sweep_param);
      spec.sweep_values = fc::parse_value_list(sweep_values);
      if (sweep_n) spec.n_sources = *sweep_n;
      apply(spec, sw_o);
      return emit(spec);
    }
    if (*verify) {
      vopt.trials = vtrials;
      if (theorem == "all") {
        int rc = kExitOk;
        for (auto t : fc::all_theorem_checks()) {
          if (run_verify(t, vopt, details) != kExitOk) rc = kExitCheckFailed;
        }
        return rc;
      }
      return run_verify(fc::parse_theorem_check(theorem), vopt, details);
    }
  } catch (const fc::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fc::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
