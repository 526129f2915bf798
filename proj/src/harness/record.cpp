#include "freshcsma/harness/record.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "freshcsma/core/error.hpp"

namespace freshcsma {

namespace {

std::string escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw EvaluationError("number formatting failed");
  return std::string(buf.data(), ptr);
}

Record& Record::add(std::string key, std::string_view value) {
  fields_.emplace_back(std::move(key), std::string(value));
  return *this;
}

Record& Record::add(std::string key, double value) {
  return add(std::move(key), std::string_view(format_number(value)));
}

Record& Record::add(std::string key, std::uint64_t value) {
  return add(std::move(key), std::string_view(std::to_string(value)));
}

Record& Record::add(std::string key, std::int64_t value) {
  return add(std::move(key), std::string_view(std::to_string(value)));
}

Record& Record::add(std::string key, const std::optional<double>& value) {
  return value ? add(std::move(key), *value) : add(std::move(key), std::string_view());
}

void write_csv_header(std::ostream& out, const Record& record) {
  bool first = true;
  for (const auto& [k, v] : record.fields()) {
    out << (first ? "" : ",") << escape(k);
    first = false;
  }
  out << '\n';
}

void write_csv_row(std::ostream& out, const Record& record) {
  bool first = true;
  for (const auto& [k, v] : record.fields()) {
    out << (first ? "" : ",") << escape(v);
    first = false;
  }
  out << '\n';
}

void write_csv(std::ostream& out, const std::vector<Record>& records) {
  if (records.empty()) return;
  write_csv_header(out, records.front());
  for (const auto& r : records) {
    if (r.fields().size() != records.front().fields().size()) {
      throw ParameterError("CSV rows must share one set of columns");
    }
    write_csv_row(out, r);
  }
}

Record to_record(const BoundReport& report, std::string_view label) {
  Record r;
  r.add("label", label);
  r.add("bound_value", report.bound_value);
  r.add("empirical", report.empirical);
  r.add("mc_std_error", report.mc_std_error);
  r.add("satisfied", report.satisfied ? (*report.satisfied ? "true" : "false") : "");
  return r;
}

Record to_record(const SimulationResult& result) {
  Record r;
  r.add("policy", to_string(result.policy));
  r.add("n_sources", static_cast<std::uint64_t>(result.config.n_sources));
  r.add("normalized_weighted_avg_aoi", result.normalized_weighted_avg_aoi);
  r.add("normalized_avg_aoii", result.normalized_avg_aoii);
  r.add("collision_rate", result.collision_rate);
  r.add("avg_overhead_minislots", result.avg_overhead_minislots);
  r.add("frames", result.frames);
  r.add("deliveries", result.deliveries);
  r.add("elapsed_time", result.elapsed_time);
  r.add("alpha", result.params.alpha);
  r.add("beta", result.params.beta);
  r.add("b_offset", result.params.b_offset);
  r.add("minislots_per_update", result.params.minislots_per_update);
  r.add("seed", result.seed);
  return r;
}

}  // namespace freshcsma
