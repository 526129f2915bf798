#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freshcsma/analysis/collision.hpp"
#include "freshcsma/engine/metrics.hpp"

namespace freshcsma {

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double v);

/// An ordered list of named fields, written as one CSV row.
class Record {
 public:
  Record& add(std::string key, std::string_view value);
  Record& add(std::string key, const char* value) { return add(std::move(key), std::string_view(value)); }
  Record& add(std::string key, double value);
  Record& add(std::string key, std::uint64_t value);
  Record& add(std::string key, std::int64_t value);
  /// Absent values become empty cells.
  Record& add(std::string key, const std::optional<double>& value);

  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

void write_csv_header(std::ostream& out, const Record& record);
void write_csv_row(std::ostream& out, const Record& record);
/// Header followed by rows; all records must share one key sequence.
void write_csv(std::ostream& out, const std::vector<Record>& records);

Record to_record(const BoundReport& report, std::string_view label);
Record to_record(const SimulationResult& result);

}  // namespace freshcsma
