#include "freshcsma/harness/preset.hpp"

#include "freshcsma/core/error.hpp"

namespace freshcsma {

namespace {

const std::vector<PolicyKind> kAoiPolicies{
    PolicyKind::MaxWeight, PolicyKind::StationaryRandomizedOptimal,
    PolicyKind::IdealizedFreshCsma, PolicyKind::NearRealisticFreshCsma};

const std::vector<PolicyKind> kAoiiPolicies{PolicyKind::MaxWeight,
                                            PolicyKind::IdealizedFreshCsmaAoii,
                                            PolicyKind::NearRealisticFreshCsmaAoii};

constexpr double kAoiiFlipProb = 0.05;

ExperimentSpec base(const std::string& name, LogBase log_base) {
  ExperimentSpec s;
  s.scenario = name;
  s.log_base = log_base;
  s.n_sources = 10;
  s.horizon_deliveries = 100000;
  s.seed = 1;
  return s;
}

void n_sweep(ExperimentSpec& s) {
  s.sweep_param = SweepParam::NSources;
  s.sweep_values = kPresetNRange;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig3_symmetric",     "fig4_sqrt_weights", "fig5_alpha_sweep",
          "fig6_beta_collisions", "fig7_B_collisions", "fig8_beta_overhead",
          "fig9_B_overhead",    "fig10_aoii",        "fig11_aoii_aoi"};
}

ExperimentSpec preset(const std::string& name, std::optional<std::size_t> n, LogBase log_base) {
  ExperimentSpec s = base(name, log_base);
  if (name == "fig3_symmetric") {
    s.policies = kAoiPolicies;
    n_sweep(s);
  } else if (name == "fig4_sqrt_weights") {
    s.policies = kAoiPolicies;
    s.weight_scheme = WeightScheme::Sqrt;
    n_sweep(s);
  } else if (name == "fig5_alpha_sweep") {
    s.policies = {PolicyKind::MaxWeight, PolicyKind::IdealizedFreshCsma,
                  PolicyKind::NearRealisticFreshCsma};
    s.sweep_param = SweepParam::Alpha;
    s.sweep_values = {1.01, 1.05, 1.1, 1.5, 2, 3, 5, 10};
  } else if (name == "fig6_beta_collisions") {
    s.policies = {PolicyKind::NearRealisticFreshCsma};
    s.sweep_param = SweepParam::Beta;
    s.sweep_values = {1.01, 1.03, 1.05, 1.07, 1.1, 1.2, 1.3, 1.5, 1.75, 2.0};
  } else if (name == "fig7_B_collisions") {
    s.policies = {PolicyKind::NearRealisticFreshCsma};
    s.sweep_param = SweepParam::BOffset;
    s.sweep_values = {0, 5, 10, 20, 30, 40, 50, 100, 150, 200, 260, 300, 400};
  } else if (name == "fig8_beta_overhead") {
    s.policies = {PolicyKind::NearRealisticFreshCsma};
    s.sweep_param = SweepParam::Beta;
    s.sweep_values = {1.07, 1.1, 1.2, 1.3, 1.5, 1.75, 2.0};
  } else if (name == "fig9_B_overhead") {
    s.policies = {PolicyKind::NearRealisticFreshCsma};
    s.sweep_param = SweepParam::BOffset;
    s.sweep_values = {100, 150, 200, 250, 260, 300, 350, 400};
  } else if (name == "fig10_aoii" || name == "fig11_aoii_aoi") {
    s.policies = kAoiiPolicies;
    s.markov_q = kAoiiFlipProb;
    n_sweep(s);
  } else {
    throw ParameterError("unknown preset '" + name + "'");
  }
  if (n) {
    if (*n == 0) throw ParameterError("n must be positive");
    if (s.sweep_param == SweepParam::NSources) {
      s.sweep_values = {static_cast<double>(*n)};
    } else {
      s.n_sources = *n;
    }
  }
  s.validate();
  return s;
}

}  // namespace freshcsma
