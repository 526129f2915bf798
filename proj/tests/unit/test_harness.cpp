#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "freshcsma/core/error.hpp"
#include "freshcsma/harness/config.hpp"
#include "freshcsma/harness/experiment.hpp"
#include "freshcsma/harness/preset.hpp"
#include "freshcsma/harness/record.hpp"
#include "freshcsma/harness/verify.hpp"

using namespace freshcsma;

namespace {

std::string csv_of(const ExperimentSpec& spec) {
  std::ostringstream out;
  write_csv(out, run_experiment(spec));
  return out.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("config text parses into a spec") {
  const auto spec = parse_config_text(R"(# comment line
scenario = demo
policies = max_weight, near_realistic_fresh_csma   # trailing comment
n_sources = 4
weights = sqrt
beta = 1.2
horizon_deliveries = 500
replications = 2
seed = 42
sweep_param = b_offset
sweep_values = 300, 100, 200
)");
  CHECK(spec.scenario == "demo");
  CHECK(spec.policies.size() == 2);
  CHECK(spec.weight_scheme == WeightScheme::Sqrt);
  CHECK(*spec.beta == 1.2);
  CHECK(spec.seed == 42);
  const auto pts = expand(spec);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].value == 100);
  CHECK(pts[0].params.b_offset == 100);
  CHECK(pts[2].params.b_offset == 300);
  CHECK(pts[0].params.beta == 1.2);
  CHECK(pts[0].params.alpha == doctest::Approx(1.0 + 1.0 / (1 + std::sqrt(2.0) + std::sqrt(3.0) + 2)));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config_text("policies = max_weight\nbogus = 1\n"), ParameterError);
  CHECK_THROWS_AS(parse_config_text("n_sources = 3\n"), ParameterError);
  CHECK_THROWS_AS(parse_config_text("policies = max_weight\nseed = 1\nseed = 2\n"), ParameterError);
  CHECK_THROWS_AS(parse_config_text("policies = max_weight\nalpha = x\n"), ParameterError);
  CHECK_THROWS_AS(parse_config_text("policies = max_weight\nalpha = 0.5\n"), ParameterError);
  CHECK_THROWS_AS(parse_config_text("policies = max_aoii\n"), ParameterError);
  CHECK_THROWS_AS(parse_config_text("policies = max_weight\nsweep_param = beta\n"), ParameterError);
  CHECK_THROWS_AS(parse_config_text("policies = max_weight\nsweep_param = n\nsweep_values = 1.5\n"),
                  ParameterError);
  CHECK_THROWS_AS(parse_config_text("policies = max_weight\nsweep_param = n\nsweep_values = 2,2\n"),
                  ParameterError);
  CHECK_THROWS_AS(parse_config_text("policies = max_weight\nno equals sign\n"), ParameterError);
  CHECK_THROWS_AS(parse_config_file("/nonexistent/file.cfg"), ParameterError);
  try {
    parse_config_text("policies = max_weight\n\nbogus = 1\n");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("explicit weight lists set the system size") {
  const auto spec = parse_config_text("policies = max_weight\nweights = 1, 2, 3\n");
  CHECK(spec.n_sources == 3);
  CHECK(expand(spec)[0].config.weights == std::vector<double>{1, 2, 3});
}

TEST_CASE("value lists and ranges") {
  CHECK(parse_value_list("1, 2.5,3") == std::vector<double>{1, 2.5, 3});
  const auto r = parse_value_list("1:2:0.25");
  CHECK(r.size() == 5);
  CHECK(r.back() == doctest::Approx(2.0));
  CHECK_THROWS_AS(parse_value_list("1:0:1"), ParameterError);
  CHECK_THROWS_AS(parse_value_list(""), ParameterError);
}

TEST_CASE("figure presets instantiate the default formulas") {
  auto s = preset("fig3_symmetric", 10);
  auto p = expand(s);
  REQUIRE(p.size() == 1);
  CHECK(p[0].config.weights == std::vector<double>(10, 1.0));
  CHECK(p[0].params.alpha == doctest::Approx(1.1));
  CHECK(p[0].params.beta == doctest::Approx(1.1));
  CHECK(p[0].params.b_offset == 260);
  CHECK(p[0].params.minislots_per_update == 10000);
  CHECK(s.horizon_deliveries == 100000);

  p = expand(preset("fig3_symmetric", 10, LogBase::Natural));
  CHECK(p[0].params.beta == doctest::Approx(1.934).epsilon(1e-3));

  p = expand(preset("fig4_sqrt_weights", 4));
  CHECK(p[0].config.weights[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(p[0].config.weights[3] == doctest::Approx(2.0));

  p = expand(preset("fig10_aoii", 10));
  REQUIRE(p[0].markov);
  CHECK(p[0].markov->flip_prob == std::vector<double>(10, 0.05));
  CHECK(p[0].params.alpha == doctest::Approx(2.1));
  CHECK(p[0].params.b_offset == 252);

  CHECK(expand(preset("fig3_symmetric")).size() == kPresetNRange.size());
  CHECK(preset("fig6_beta_collisions", 5).n_sources == 5);
  for (const auto& name : preset_names()) CHECK_NOTHROW(preset(name));
  CHECK_THROWS_AS(preset("fig99"), ParameterError);
}

TEST_CASE("experiment tables: ordering, columns, reproducibility") {
  auto spec = preset("fig6_beta_collisions");
  spec.policies = {PolicyKind::NearRealisticFreshCsma, PolicyKind::IdealizedFreshCsma};
  spec.sweep_values = {1.5, 1.1, 1.2};
  spec.horizon_deliveries = 2000;
  spec.replications = 2;
  const auto table = run_experiment(spec);
  REQUIRE(table.rows.size() == 6);
  CHECK(table.rows[0].sweep_value == 1.1);
  CHECK(table.rows[0].policy == PolicyKind::NearRealisticFreshCsma);
  CHECK(table.rows[1].policy == PolicyKind::IdealizedFreshCsma);
  CHECK(table.rows[5].sweep_value == 1.5);
  CHECK(table.rows[0].overhead_bound_minislots.has_value());
  CHECK(table.rows[0].distinct_timer_bound.has_value());
  CHECK_FALSE(table.rows[1].overhead_bound_minislots.has_value());
  CHECK(table.rows[0].aoi.std_error.has_value());

  const auto a = csv_of(spec);
  CHECK(a == csv_of(spec));
  const auto ls = lines(a);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0].rfind("scenario,policy,n_sources,sweep_param,sweep_value", 0) == 0);
  spec.seed = 2;
  CHECK(a != csv_of(spec));
}

TEST_CASE("AoII column is blank without Markov sources") {
  auto spec = parse_config_text("policies = max_weight\nn_sources = 3\nhorizon_deliveries = 100\n");
  const auto ls = lines(csv_of(spec));
  REQUIRE(ls.size() == 2);
  CHECK(ls[1].find(",,") != std::string::npos);
  auto m = parse_config_text(
      "policies = max_weight, max_aoii\nn_sources = 3\nmarkov_q = 0.1\nhorizon_deliveries = 100\n");
  const auto t = run_experiment(m);
  CHECK(t.rows[0].aoii.has_value());
  CHECK(t.rows[1].aoii.has_value());
}

TEST_CASE("numbers print shortest round-trip") {
  for (double v : {0.1, 1.0 / 3.0, 5.5, 1e-300, 123456789.125}) {
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("bound reports serialize as records") {
  BoundReport r;
  r.bound_value = 0.5;
  std::ostringstream out;
  write_csv(out, std::vector<Record>{to_record(r, "x")});
  CHECK(out.str() == "label,bound_value,empirical,mc_std_error,satisfied\nx,0.5,,,\n");
  r.empirical = 0.6;
  r.mc_std_error = 0.01;
  r.satisfied = true;
  std::ostringstream out2;
  write_csv(out2, std::vector<Record>{to_record(r, "a,b")});
  CHECK(lines(out2.str())[1] == "\"a,b\",0.5,0.6,0.01,true");
}

TEST_CASE("verifiers pass at compliant parameters and fail below") {
  VerifyOptions o;
  o.trials = 300;
  CHECK(verify(TheoremCheck::Thm1, o).passed());
  CHECK(verify(TheoremCheck::Thm5, o).passed());
  CHECK(verify(TheoremCheck::Lemma2, o).passed());
  o.alpha = 2.0;
  const auto bad = verify(TheoremCheck::Thm1, o);
  CHECK_FALSE(bad.passed());
  CHECK(bad.worst_margin < 0.0);
  CHECK(parse_theorem_check("thm4") == TheoremCheck::Thm4);
  CHECK_THROWS_AS(parse_theorem_check("thm9"), ParameterError);
}
