#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dosc {

using ParamValue = std::variant<double, long long, bool, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

struct ExperimentReport {
  std::string name;
  ParamList inputs;
  std::vector<std::pair<std::string, double>> values;  // residuals or ratios
  double tolerance = 0.0;
  bool passed = false;
  long long runtime_ms = 0;
  std::string resolution;
  std::uint64_t seed = 0;
  std::string note;

  // Largest finite-or-infinite value, NaN ignored; 0 when empty.
  double max_value() const;
};

// Doubles with 17 significant digits; non-finite values as the strings
// "inf", "-inf", "nan".
std::string format_double(double v);
std::string to_json_line(const ExperimentReport& r);
void write_jsonl(const std::vector<ExperimentReport>& reports, std::ostream& os);
// name,passed,max_residual_or_ratio,runtime_ms
void write_summary_csv(const std::vector<ExperimentReport>& reports, std::ostream& os);

}  // namespace dosc
