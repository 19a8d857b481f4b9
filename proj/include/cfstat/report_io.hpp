#pragma once

// Serialization of deviation reports.
//
// JSON fields: q, ensemble, ensemble_size, too_short,
//   windows[{w, target, mean, too_short, dev[{eps, prob, count}]}],
//   length{target, mean_ratio, dev[...]}, runtime_ms.
// CSV columns: q,ensemble,statistic,eps,target,mean,count,prob with one row
// per (q, statistic, eps); statistic is the window digits joined by '-'
// (e.g. "1-2") or "len".

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "cfstat/statistics.hpp"

namespace cfstat {

/// runtime_ms is written as null unless a value is passed, which keeps
/// repeated runs byte-identical.
nlohmann::json report_to_json(const DeviationReport& report, std::optional<double> runtime_ms = std::nullopt);

inline constexpr std::string_view kReportCsvHeader = "q,ensemble,statistic,eps,target,mean,count,prob";

void write_report_csv_rows(std::ostream& out, const DeviationReport& report);

/// Shortest round-trip decimal form; "nan" / "inf" for non-finite values.
std::string format_double(double value);

}  // namespace cfstat
