#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lorentz {

enum class CheckStatus { Pass, Fail, ReportOnly, Trivial, Divergent };

const char* status_name(CheckStatus s);

// One inequality instance.  Known-constant checks carry a margin and a
// pass/fail status; free-constant (report-only) checks carry a ratio.
struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;  // ordered
  double lhs = 0.0;
  double rhs = 0.0;
  bool has_constant = false;
  double constant = 0.0;  // "free" when absent
  bool has_margin = false;
  double margin = 0.0;  // rhs - lhs
  bool has_ratio = false;
  double ratio = 0.0;  // lhs / rhs
  CheckStatus status = CheckStatus::ReportOnly;
  std::string notes;
  std::uint64_t seed = 0;

  void param(const std::string& key, const std::string& value);
  void param(const std::string& key, double value);
  void param(const std::string& key, std::uint64_t value);
  std::string params_string() const;  // "k=v;k=v" (CSV form and sort key)
};

// 17 significant digits; non-finite values render as "inf"/"-inf"/"nan"
std::string format_g17(double v);

std::string to_json_line(const CheckReport& r);
std::string csv_header();
std::string to_csv_row(const CheckReport& r);

// deterministic order: by check name, then parameter string
void sort_reports(std::vector<CheckReport>& reports);

// writes <dir>/<stem>.jsonl and <dir>/<stem>.csv; creates dir if needed
bool write_reports(const std::string& dir, const std::string& stem,
                   const std::vector<CheckReport>& reports);

}  // namespace lorentz
