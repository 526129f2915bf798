#include "freshcsma/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "freshcsma/core/error.hpp"

namespace freshcsma {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty() || !std::isfinite(v)) {
    throw ParameterError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

template <typename T>
T parse_integer(std::string_view s) {
  T v{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw ParameterError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

bool is_integral(double v) { return std::floor(v) == v; }

}  // namespace

std::string_view to_string(SweepParam p) {
  switch (p) {
    case SweepParam::None: return "none";
    case SweepParam::NSources: return "n_sources";
    case SweepParam::Alpha: return "alpha";
    case SweepParam::Beta: return "beta";
    case SweepParam::BOffset: return "b_offset";
    case SweepParam::MinislotsPerUpdate: return "minislots_per_update";
    case SweepParam::MarkovQ: return "markov_q";
  }
  return "none";
}

SweepParam parse_sweep_param(std::string_view text) {
  for (auto p : {SweepParam::None, SweepParam::NSources, SweepParam::Alpha, SweepParam::Beta,
                 SweepParam::BOffset, SweepParam::MinislotsPerUpdate, SweepParam::MarkovQ}) {
    if (text == to_string(p)) return p;
  }
  if (text == "n" || text == "N") return SweepParam::NSources;
  if (text == "B") return SweepParam::BOffset;
  if (text == "M") return SweepParam::MinislotsPerUpdate;
  if (text == "q") return SweepParam::MarkovQ;
  throw ParameterError("unknown sweep parameter '" + std::string(text) + "'");
}

std::vector<double> parse_value_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParameterError("empty value list");
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ParameterError("range must be start:stop:step");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0) || stop < start) throw ParameterError("range needs step > 0, stop >= start");
    const auto count = static_cast<std::uint64_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000) throw ParameterError("range has too many points");
    std::vector<double> out;
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
    return out;
  }
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_double(part));
  return out;
}

std::vector<PolicyKind> parse_policy_list(std::string_view text) {
  std::vector<PolicyKind> out;
  for (auto part : split(text, ',')) {
    const auto kind = parse_policy_kind(std::string(part));
    if (std::find(out.begin(), out.end(), kind) != out.end()) {
      throw ParameterError("policy listed twice: '" + std::string(part) + "'");
    }
    out.push_back(kind);
  }
  return out;
}

std::vector<double> make_weights(WeightScheme scheme, std::size_t n,
                                 const std::vector<double>& list) {
  switch (scheme) {
    case WeightScheme::Uniform: return std::vector<double>(n, 1.0);
    case WeightScheme::Sqrt: {
      std::vector<double> w(n);
      for (std::size_t k = 0; k < n; ++k) w[k] = std::sqrt(static_cast<double>(k + 1));
      return w;
    }
    case WeightScheme::List:
      if (list.size() != n) throw ParameterError("weight list length must equal n_sources");
      return list;
  }
  return {};
}

void ExperimentSpec::validate() const {
  if (policies.empty()) throw ParameterError("at least one policy is required");
  if (n_sources == 0) throw ParameterError("n_sources must be positive");
  if (weight_scheme == WeightScheme::List && sweep_param == SweepParam::NSources) {
    throw ParameterError("an explicit weight list cannot be combined with an n_sources sweep");
  }
  if (horizon_deliveries == 0) throw ParameterError("horizon_deliveries must be positive");
  if (max_frames_factor == 0) throw ParameterError("max_frames_factor must be positive");
  if (replications == 0) throw ParameterError("replications must be positive");
  if ((sweep_param == SweepParam::None) != sweep_values.empty()) {
    throw ParameterError("sweep_param and sweep_values must be given together");
  }
  std::vector<double> sorted = sweep_values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParameterError("sweep_values contains duplicates");
  }
  for (double v : sweep_values) {
    switch (sweep_param) {
      case SweepParam::NSources:
      case SweepParam::BOffset:
      case SweepParam::MinislotsPerUpdate:
        if (!is_integral(v) || v < 0) throw ParameterError("sweep value must be a whole number");
        break;
      case SweepParam::MarkovQ:
        if (!markov_q) throw ParameterError("a markov_q sweep needs Markov sources (markov_q)");
        break;
      default: break;
    }
  }
  for (auto kind : policies) {
    if (traits(kind).input == Freshness::Aoii && !markov_q) {
      throw ParameterError("policy " + std::string(to_string(kind)) + " needs markov_q");
    }
  }
  for (const auto& point : expand(*this)) {
    point.config.validate();
    point.params.validate();
    if (point.markov) MarkovNetState::with_probs(point.markov->flip_prob).validate();
  }
}

std::vector<SweepPoint> expand(const ExperimentSpec& spec) {
  std::vector<double> values = spec.sweep_values;
  if (spec.sweep_param == SweepParam::None) values = {0.0};
  std::sort(values.begin(), values.end());

  std::vector<SweepPoint> points;
  for (double v : values) {
    std::size_t n = spec.n_sources;
    if (spec.sweep_param == SweepParam::NSources) {
      if (v < 1) throw ParameterError("n_sources must be positive");
      n = static_cast<std::size_t>(v);
    }
    SweepPoint p;
    p.value = v;
    p.config.n_sources = n;
    p.config.weights = make_weights(spec.weight_scheme, n, spec.weight_list);
    p.config.horizon_frames = spec.horizon_deliveries;
    p.config.seed = spec.seed;

    p.params = spec.markov_q ? default_aoii_params(n, spec.log_base)
                             : default_aoi_params(p.config.weights, spec.log_base);
    if (spec.alpha) p.params.alpha = *spec.alpha;
    if (spec.beta) p.params.beta = *spec.beta;
    if (spec.b_offset) p.params.b_offset = *spec.b_offset;
    if (spec.minislots_per_update) p.params.minislots_per_update = *spec.minislots_per_update;
    p.params.delta_scale = spec.delta_scale;
    double q = spec.markov_q.value_or(0.0);

    switch (spec.sweep_param) {
      case SweepParam::Alpha: p.params.alpha = v; break;
      case SweepParam::Beta: p.params.beta = v; break;
      case SweepParam::BOffset: p.params.b_offset = static_cast<std::int64_t>(v); break;
      case SweepParam::MinislotsPerUpdate:
        p.params.minislots_per_update = static_cast<std::int64_t>(v);
        break;
      case SweepParam::MarkovQ: q = v; break;
      default: break;
    }
    if (spec.markov_q) p.markov = MarkovSettings::symmetric(n, q);
    points.push_back(std::move(p));
  }
  return points;
}

ExperimentSpec parse_config(std::istream& in) {
  ExperimentSpec spec;
  std::map<std::string, int> seen;
  std::string raw;
  int line_no = 0;
  bool have_policies = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ParameterError(where + "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (seen.count(key)) throw ParameterError(where + "duplicate key '" + key + "'");
    seen[key] = line_no;
    if (value.empty()) throw ParameterError(where + "empty value for '" + key + "'");
    try {
      if (key == "scenario") {
        spec.scenario = std::string(value);
      } else if (key == "policies") {
        spec.policies = parse_policy_list(value);
        have_policies = true;
      } else if (key == "n_sources") {
        spec.n_sources = parse_integer<std::size_t>(value);
      } else if (key == "weights") {
        if (value == "uniform") {
          spec.weight_scheme = WeightScheme::Uniform;
        } else if (value == "sqrt") {
          spec.weight_scheme = WeightScheme::Sqrt;
        } else {
          spec.weight_scheme = WeightScheme::List;
          spec.weight_list = parse_value_list(value);
        }
      } else if (key == "alpha") {
        spec.alpha = parse_double(value);
      } else if (key == "beta") {
        spec.beta = parse_double(value);
      } else if (key == "b_offset") {
        spec.b_offset = parse_integer<std::int64_t>(value);
      } else if (key == "minislots_per_update") {
        spec.minislots_per_update = parse_integer<std::int64_t>(value);
      } else if (key == "delta_scale") {
        spec.delta_scale = parse_double(value);
      } else if (key == "log_base") {
        spec.log_base = parse_log_base(std::string(value));
      } else if (key == "markov_q") {
        spec.markov_q = parse_double(value);
      } else if (key == "horizon_deliveries") {
        spec.horizon_deliveries = parse_integer<std::uint64_t>(value);
      } else if (key == "max_frames_factor") {
        spec.max_frames_factor = parse_integer<std::uint64_t>(value);
      } else if (key == "replications") {
        spec.replications = parse_integer<std::uint64_t>(value);
      } else if (key == "seed") {
        spec.seed = parse_integer<std::uint64_t>(value);
      } else if (key == "output") {
        spec.output = std::string(value);
      } else if (key == "sweep_param") {
        spec.sweep_param = parse_sweep_param(value);
      } else if (key == "sweep_values") {
        spec.sweep_values = parse_value_list(value);
      } else {
        throw ParameterError("unknown key '" + key + "'");
      }
    } catch (const ParameterError& e) {
      throw ParameterError(where + e.what());
    }
  }
  if (!have_policies) throw ParameterError("config must list policies");
  if (spec.weight_scheme == WeightScheme::List && !seen.count("n_sources")) {
    spec.n_sources = spec.weight_list.size();
  }
  spec.validate();
  return spec;
}

ExperimentSpec parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ExperimentSpec parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace freshcsma
