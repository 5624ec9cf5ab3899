#include "dosc/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace dosc {

double ExperimentReport::max_value() const {
  double m = 0.0;
  bool any = false;
  for (const auto& [k, v] : values) {
    if (std::isnan(v)) continue;
    m = any ? std::max(m, v) : v;
    any = true;
  }
  return m;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string value_json(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) return format_double(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(x);
        else return quote(x);
      },
      v);
}

}  // namespace

std::string to_json_line(const ExperimentReport& r) {
  std::string s = "{\"name\":" + quote(r.name) + ",\"inputs\":{";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    if (i) s += ',';
    s += quote(r.inputs[i].first) + ':' + value_json(r.inputs[i].second);
  }
  s += "},\"residuals_or_ratios\":[";
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    if (i) s += ',';
    s += "[" + quote(r.values[i].first) + ',' + format_double(r.values[i].second) + ']';
  }
  s += "],\"tolerance\":" + format_double(r.tolerance);
  s += std::string(",\"passed\":") + (r.passed ? "true" : "false");
  s += ",\"runtime_ms\":" + std::to_string(r.runtime_ms);
  s += ",\"resolution\":" + quote(r.resolution);
  s += ",\"seed\":" + std::to_string(r.seed);
  if (!r.note.empty()) s += ",\"note\":" + quote(r.note);
  s += '}';
  return s;
}

void write_jsonl(const std::vector<ExperimentReport>& reports, std::ostream& os) {
  for (const auto& r : reports) os << to_json_line(r) << '\n';
}

void write_summary_csv(const std::vector<ExperimentReport>& reports, std::ostream& os) {
  os << "name,passed,max_residual_or_ratio,runtime_ms\n";
  for (const auto& r : reports) {
    std::string name = r.name;
    if (name.find_first_of(",\"") != std::string::npos) {
      std::string q = "\"";
      for (char c : name) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      name = q + "\"";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", r.max_value());
    os << name << ',' << (r.passed ? "true" : "false") << ',' << buf << ',' << r.runtime_ms << '\n';
  }
}

}  // namespace dosc
