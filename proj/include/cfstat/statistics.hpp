#pragma once

// Empirical continued-fraction statistics over numerator ensembles: window
// densities D_w(j/q), normalized lengths len(j/q)/log q, deviation
// probabilities and fitted polynomial rates.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cfstat/ensemble.hpp"
#include "cfstat/gauss_kuzmin.hpp"

namespace cfstat {

struct DeviationEntry {
  double eps;
  std::int64_t count;  // fractions with |statistic - target| > eps
  double prob;         // count / ensemble_size
};

struct WindowStat {
  Window window;
  double target;          // D_w
  double empirical_mean;  // over fractions whose expansion is at least |w| long
  std::int64_t too_short; // expansions shorter than w; counted as deviating
  std::vector<DeviationEntry> deviation;
};

struct LengthStat {
  double target;      // Lévy constant
  double mean_ratio;  // mean of len / log q
  std::int64_t total_length;
  std::vector<DeviationEntry> deviation;
};

struct DeviationReport {
  Int q = 0;
  EnsembleKind kind = EnsembleKind::All;
  std::string ensemble;
  std::int64_t ensemble_size = 0;
  std::int64_t too_short = 0;  // shorter than the longest requested window
  std::vector<WindowStat> windows;
  LengthStat length{};
  double runtime_ms = 0.0;
};

/// Overlapping occurrences of w among the n - k + 1 windows of the canonical
/// expansion, divided by n - k + 1. Throws WindowTooLong when k > n.
double window_density(const ReducedFraction& f, const Window& w);

/// Same count over an arbitrary digit string, canonical or not.
double window_density(std::span<const Int> digits, const Window& w);

/// Statistics over an already realized residue set. Integer tallies are
/// merged in a fixed order, so the result does not depend on `workers`.
DeviationReport deviation_report(Int q, std::span<const Int> residues, EnsembleKind kind, std::string ensemble,
                                 std::span<const Window> windows, std::span<const double> eps_list,
                                 unsigned workers = 1);

DeviationReport deviation_report(const EnsembleSpec& spec, std::span<const Window> windows,
                                 std::span<const double> eps_list, unsigned workers = 1);

struct RateFit {
  double eps;
  std::vector<double> window_alpha;  // one per window, report order
  double length_alpha;
};

/// Least-squares slope of -log P_q against log q. Zero probabilities are
/// replaced by 1 / (|Λ_q| + 1). Throws InsufficientData unless at least two
/// distinct q share one ensemble kind, the same windows, and `eps`.
RateFit rate_fit(std::span<const DeviationReport> reports, double eps);

double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace cfstat
