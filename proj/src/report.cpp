#include "lorentz/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace lorentz {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::ReportOnly:
      return "report-only";
    case CheckStatus::Trivial:
      return "trivial-pass";
    case CheckStatus::Divergent:
      return "divergent";
  }
  return "?";
}

void CheckReport::param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}
void CheckReport::param(const std::string& key, double value) {
  params.emplace_back(key, format_g17(value));
}
void CheckReport::param(const std::string& key, std::uint64_t value) {
  params.emplace_back(key, std::to_string(value));
}

std::string CheckReport::params_string() const {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k;
    s += '=';
    s += v;
  }
  return s;
}

std::string format_g17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// numbers render as JSON numbers; non-finite as strings
std::string json_number(double v) {
  if (!std::isfinite(v)) return "\"" + format_g17(v) + "\"";
  return format_g17(v);
}

}  // namespace

std::string to_json_line(const CheckReport& r) {
  std::string s = "{\"check\":\"" + json_escape(r.check) + "\",\"params\":{";
  bool first = true;
  for (const auto& [k, v] : r.params) {
    if (!first) s += ',';
    first = false;
    s += "\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
  }
  s += "},\"lhs\":" + json_number(r.lhs);
  s += ",\"rhs\":" + json_number(r.rhs);
  s += ",\"constant\":";
  s += r.has_constant ? json_number(r.constant) : std::string("\"free\"");
  s += ",\"margin\":";
  s += r.has_margin ? json_number(r.margin) : std::string("null");
  s += ",\"ratio\":";
  s += r.has_ratio ? json_number(r.ratio) : std::string("null");
  s += ",\"status\":\"";
  s += status_name(r.status);
  s += "\",\"notes\":\"" + json_escape(r.notes) + "\"";
  s += ",\"seed\":" + std::to_string(r.seed) + "}";
  return s;
}

std::string csv_header() {
  return "check,params,lhs,rhs,constant,margin,ratio,status,notes,seed";
}

namespace {
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace

std::string to_csv_row(const CheckReport& r) {
  std::string s = csv_escape(r.check) + ',';
  s += csv_escape(r.params_string()) + ',';
  s += format_g17(r.lhs) + ',';
  s += format_g17(r.rhs) + ',';
  s += r.has_constant ? format_g17(r.constant) : std::string("free");
  s += ',';
  s += r.has_margin ? format_g17(r.margin) : std::string("");
  s += ',';
  s += r.has_ratio ? format_g17(r.ratio) : std::string("");
  s += ',';
  s += status_name(r.status);
  s += ',';
  s += csv_escape(r.notes) + ',';
  s += std::to_string(r.seed);
  return s;
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     if (a.check != b.check) return a.check < b.check;
                     return a.params_string() < b.params_string();
                   });
}

bool write_reports(const std::string& dir, const std::string& stem,
                   const std::vector<CheckReport>& reports) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream jl(std::filesystem::path(dir) / (stem + ".jsonl"));
  std::ofstream cs(std::filesystem::path(dir) / (stem + ".csv"));
  if (!jl || !cs) return false;
  cs << csv_header() << '\n';
  for (const auto& r : reports) {
    jl << to_json_line(r) << '\n';
    cs << to_csv_row(r) << '\n';
  }
  return static_cast<bool>(jl) && static_cast<bool>(cs);
}

}  // namespace lorentz
