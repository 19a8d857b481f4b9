#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "cfstat/zaremba.hpp"

namespace cfstat {

inline constexpr std::string_view kZarembaCsvHeader = "q,k,count_all,count_prime,witness_prime,ratio_all,ratio_prime";

/// One row; absent witness and ratio fields are left empty.
void write_zaremba_row(std::ostream& out, const ZarembaRow& row);

/// Two side-by-side scatter panels of log(count)/log(q) against q: all
/// numerators (left, green) and prime numerators (right, blue). Rows with a
/// zero count are skipped.
std::string zaremba_svg(std::span<const ZarembaRow> rows);

}  // namespace cfstat
