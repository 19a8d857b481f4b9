#include "cfstat/zaremba_io.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "cfstat/report_io.hpp"

namespace cfstat {

void write_zaremba_row(std::ostream& out, const ZarembaRow& row) {
  out << row.q << ',' << row.k << ',' << row.count_all << ',' << row.count_prime << ',';
  if (row.witness_prime) out << *row.witness_prime;
  out << ',';
  if (row.ratio_all) out << format_double(*row.ratio_all);
  out << ',';
  if (row.ratio_prime) out << format_double(*row.ratio_prime);
  out << '\n';
}

namespace {

constexpr double kPanelW = 360, kPanelH = 300, kMargin = 40, kGap = 30;

void panel(std::string& svg, std::span<const ZarembaRow> rows, bool prime, double x0, double q_lo, double q_hi,
           double r_lo, double r_hi, std::string_view colour, std::string_view title) {
  const double left = x0 + kMargin, top = kMargin, w = kPanelW - kMargin - 10, h = kPanelH - 2 * kMargin;
  svg += fmt::format(R"(<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>)"
                     "\n",
                     left, top, w, h);
  svg += fmt::format(R"(<text x="{}" y="{}" font-size="12">{}</text>)"
                     "\n",
                     left, top - 8, title);
  svg += fmt::format(R"(<text x="{}" y="{}" font-size="10">{}</text>)"
                     "\n",
                     left, top + h + 14, q_lo);
  svg += fmt::format(R"(<text x="{}" y="{}" font-size="10" text-anchor="end">{}</text>)"
                     "\n",
                     left + w, top + h + 14, q_hi);
  svg += fmt::format(R"(<text x="{}" y="{}" font-size="10" text-anchor="end">{:.2f}</text>)"
                     "\n",
                     left - 4, top + h, r_lo);
  svg += fmt::format(R"(<text x="{}" y="{}" font-size="10" text-anchor="end">{:.2f}</text>)"
                     "\n",
                     left - 4, top + 10, r_hi);
  for (const auto& row : rows) {
    const auto& ratio = prime ? row.ratio_prime : row.ratio_all;
    if (!ratio) continue;
    const double fx = q_hi > q_lo ? (static_cast<double>(row.q) - q_lo) / (q_hi - q_lo) : 0.5;
    const double fy = r_hi > r_lo ? (*ratio - r_lo) / (r_hi - r_lo) : 0.5;
    svg += fmt::format(R"(<circle cx="{:.2f}" cy="{:.2f}" r="1" fill="{}"/>)"
                       "\n",
                       left + fx * w, top + (1.0 - fy) * h, colour);
  }
}

}  // namespace

std::string zaremba_svg(std::span<const ZarembaRow> rows) {
  double q_lo = 0, q_hi = 1, r_lo = 0, r_hi = 1;
  if (!rows.empty()) {
    q_lo = static_cast<double>(rows.front().q);
    q_hi = static_cast<double>(rows.back().q);
    r_lo = 1.0;
    r_hi = 0.0;
    for (const auto& row : rows) {
      for (const auto& r : {row.ratio_all, row.ratio_prime}) {
        if (!r) continue;
        r_lo = std::min(r_lo, *r);
        r_hi = std::max(r_hi, *r);
      }
    }
    if (r_lo > r_hi) std::swap(r_lo, r_hi);
  }
  std::string svg = fmt::format(
      R"(<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}">)"
      "\n",
      2 * kPanelW + kGap, kPanelH);
  panel(svg, rows, false, 0, q_lo, q_hi, r_lo, r_hi, "green", "all numerators");
  panel(svg, rows, true, kPanelW + kGap, q_lo, q_hi, r_lo, r_hi, "blue", "prime numerators");
  svg += "</svg>\n";
  return svg;
}

}  // namespace cfstat
