#pragma once

#include <iosfwd>
#include <string_view>

#include "cfstat/orbit.hpp"

namespace cfstat {

/// "#breakpoints: t0,t1,...", then "t,alpha1" and one row per sample.
void write_profile_csv(std::ostream& out, const OrbitProfile& profile, double step);

inline constexpr std::string_view kMassCsvHeader = "q,M,retained_mass,n_orbits,grid";
inline constexpr std::string_view kDualCsvHeader = "q,p,p_dual,M,lhs,rhs,residual";
inline constexpr std::string_view kExcursionCsvHeader = "q,p,T,M,fraction_above,sampled_fraction,grid,n_intervals";

void write_excursion_row(std::ostream& out, const OrbitProfile& profile, const ExcursionSummary& s);

}  // namespace cfstat
