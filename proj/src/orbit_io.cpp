#include "cfstat/orbit_io.hpp"

#include <ostream>

#include "cfstat/report_io.hpp"

namespace cfstat {

void write_profile_csv(std::ostream& out, const OrbitProfile& profile, double step) {
  out << "#breakpoints: ";
  const auto bps = profile.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (i) out << ',';
    out << format_double(bps[i]);
  }
  out << "\nt,alpha1\n";
  for (const auto& [t, a] : profile.sample(step)) out << format_double(t) << ',' << format_double(a) << '\n';
}

void write_excursion_row(std::ostream& out, const OrbitProfile& profile, const ExcursionSummary& s) {
  out << profile.q() << ',' << profile.p() << ',' << format_double(s.horizon) << ',' << format_double(s.M) << ','
      << format_double(s.fraction_above) << ',' << format_double(s.sampled_fraction) << ',' << format_double(s.grid)
      << ',' << s.intervals.size() << '\n';
}

}  // namespace cfstat
