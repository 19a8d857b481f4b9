#include "cfstat/report_io.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

namespace cfstat {

namespace {

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

nlohmann::json deviation_json(std::span<const DeviationEntry> entries) {
  auto arr = nlohmann::json::array();
  for (const auto& d : entries) arr.push_back({{"eps", d.eps}, {"prob", d.prob}, {"count", d.count}});
  return arr;
}

std::string statistic_name(const Window& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(w.word()[i]);
  }
  return s;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{}", value);
}

nlohmann::json report_to_json(const DeviationReport& report, std::optional<double> runtime_ms) {
  nlohmann::json j;
  j["q"] = report.q;
  j["ensemble"] = report.ensemble;
  j["ensemble_size"] = report.ensemble_size;
  j["too_short"] = report.too_short;
  auto windows = nlohmann::json::array();
  for (const auto& w : report.windows) {
    windows.push_back({{"w", std::vector<Int>(w.window.word().begin(), w.window.word().end())},
                       {"target", w.target},
                       {"mean", number_or_null(w.empirical_mean)},
                       {"too_short", w.too_short},
                       {"dev", deviation_json(w.deviation)}});
  }
  j["windows"] = std::move(windows);
  j["length"] = {{"target", report.length.target},
                 {"mean_ratio", report.length.mean_ratio},
                 {"dev", deviation_json(report.length.deviation)}};
  j["runtime_ms"] = runtime_ms ? nlohmann::json(*runtime_ms) : nlohmann::json(nullptr);
  return j;
}

void write_report_csv_rows(std::ostream& out, const DeviationReport& report) {
  for (const auto& w : report.windows) {
    for (const auto& d : w.deviation) {
      out << report.q << ',' << csv_field(report.ensemble) << ',' << statistic_name(w.window) << ',' << format_double(d.eps)
          << ',' << format_double(w.target) << ',' << format_double(w.empirical_mean) << ',' << d.count << ','
          << format_double(d.prob) << '\n';
    }
  }
  for (const auto& d : report.length.deviation) {
    out << report.q << ',' << csv_field(report.ensemble) << ",len," << format_double(d.eps) << ','
        << format_double(report.length.target) << ',' << format_double(report.length.mean_ratio) << ','
        << d.count << ',' << format_double(d.prob) << '\n';
  }
}

}  // namespace cfstat
