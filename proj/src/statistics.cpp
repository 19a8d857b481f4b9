#include "cfstat/statistics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>

#include "cfstat/parallel.hpp"

namespace cfstat {

namespace {

constexpr std::size_t kChunk = 4096;

std::int64_t count_occurrences(std::span<const Int> digits, std::span<const Int> word) {
  const std::size_t n = digits.size(), k = word.size();
  std::int64_t c = 0;
  for (std::size_t l = 0; l + k <= n; ++l) {
    if (std::equal(word.begin(), word.end(), digits.begin() + static_cast<std::ptrdiff_t>(l))) ++c;
  }
  return c;
}

struct WindowTally {
  std::int64_t too_short = 0;
  // occurrences[m] sums occurrence counts over fractions with m windows, so
  // the mean of c/m is an exact function of integer tallies.
  std::vector<std::int64_t> occurrences;
  std::vector<std::int64_t> deviating;
};

struct Tally {
  std::vector<WindowTally> windows;
  std::int64_t total_length = 0;
  std::vector<std::int64_t> length_deviating;

  Tally(std::size_t n_windows, std::size_t n_eps) : windows(n_windows), length_deviating(n_eps, 0) {
    for (auto& w : windows) w.deviating.assign(n_eps, 0);
  }

  void merge(Tally&& other) {
    for (std::size_t i = 0; i < windows.size(); ++i) {
      auto& a = windows[i];
      auto& b = other.windows[i];
      a.too_short += b.too_short;
      if (a.occurrences.size() < b.occurrences.size()) a.occurrences.resize(b.occurrences.size(), 0);
      for (std::size_t m = 0; m < b.occurrences.size(); ++m) a.occurrences[m] += b.occurrences[m];
      for (std::size_t e = 0; e < a.deviating.size(); ++e) a.deviating[e] += b.deviating[e];
    }
    total_length += other.total_length;
    for (std::size_t e = 0; e < length_deviating.size(); ++e) length_deviating[e] += other.length_deviating[e];
  }
};

}  // namespace

double window_density(const ReducedFraction& f, const Window& w) {
  const CfDigits d = expand(f);
  const std::size_t n = d.size(), k = w.size();
  if (k > n) {
    throw WindowTooLong("window of length " + std::to_string(k) + " exceeds expansion length " +
                        std::to_string(n) + " of " + f.to_string());
  }
  return static_cast<double>(count_occurrences(d.digits(), w.word())) / static_cast<double>(n - k + 1);
}

double window_density(std::span<const Int> digits, const Window& w) {
  const std::size_t n = digits.size(), k = w.size();
  if (k > n) {
    throw WindowTooLong("window of length " + std::to_string(k) + " exceeds digit string length " +
                        std::to_string(n));
  }
  return static_cast<double>(count_occurrences(digits, w.word())) / static_cast<double>(n - k + 1);
}

DeviationReport deviation_report(Int q, std::span<const Int> residues, EnsembleKind kind, std::string ensemble,
                                 std::span<const Window> windows, std::span<const double> eps_list,
                                 unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  if (q < 2) throw InvalidArgument("modulus must be at least 2");
  if (q > kScanModulusCap) throw OverflowError("modulus exceeds the 2^31 scan cap");
  if (residues.empty()) throw EmptyEnsemble("ensemble '" + ensemble + "' is empty for q = " + std::to_string(q));
  for (double e : eps_list) {
    if (!(e >= 0.0) || !std::isfinite(e)) throw InvalidArgument("eps values must be finite and nonnegative");
  }

  std::vector<double> targets;
  targets.reserve(windows.size());
  for (const auto& w : windows) targets.push_back(target_density(w));
  const double log_q = std::log(static_cast<double>(q));
  const double levy = levy_constant();

  auto map = [&](std::size_t begin, std::size_t end) {
    Tally t(windows.size(), eps_list.size());
    std::vector<Int> digits;
    for (std::size_t i = begin; i < end; ++i) {
      expand_into(residues[i], q, digits);
      const std::size_t n = digits.size();
      t.total_length += static_cast<std::int64_t>(n);
      const double ratio = static_cast<double>(n) / log_q;
      for (std::size_t e = 0; e < eps_list.size(); ++e) {
        if (std::abs(ratio - levy) > eps_list[e]) ++t.length_deviating[e];
      }
      for (std::size_t wi = 0; wi < windows.size(); ++wi) {
        auto& wt = t.windows[wi];
        const std::size_t k = windows[wi].size();
        if (k > n) {
          ++wt.too_short;
          for (auto& c : wt.deviating) ++c;
          continue;
        }
        const std::size_t m = n - k + 1;
        const std::int64_t c = count_occurrences(digits, windows[wi].word());
        if (wt.occurrences.size() <= m) wt.occurrences.resize(m + 1, 0);
        wt.occurrences[m] += c;
        const double density = static_cast<double>(c) / static_cast<double>(m);
        for (std::size_t e = 0; e < eps_list.size(); ++e) {
          if (std::abs(density - targets[wi]) > eps_list[e]) ++wt.deviating[e];
        }
      }
    }
    return t;
  };

  Tally total = chunked_reduce(residues.size(), kChunk, workers, Tally(windows.size(), eps_list.size()), map,
                               [](Tally& acc, Tally&& part) { acc.merge(std::move(part)); });

  const auto size = static_cast<std::int64_t>(residues.size());
  DeviationReport report;
  report.q = q;
  report.kind = kind;
  report.ensemble = std::move(ensemble);
  report.ensemble_size = size;

  std::size_t longest = 0;
  for (std::size_t wi = 0; wi < windows.size(); ++wi) {
    const auto& wt = total.windows[wi];
    WindowStat stat{windows[wi], targets[wi], std::numeric_limits<double>::quiet_NaN(), wt.too_short, {}};
    const std::int64_t counted = size - wt.too_short;
    if (counted > 0) {
      double sum = 0.0;
      for (std::size_t m = 1; m < wt.occurrences.size(); ++m) {
        sum += static_cast<double>(wt.occurrences[m]) / static_cast<double>(m);
      }
      stat.empirical_mean = sum / static_cast<double>(counted);
    }
    for (std::size_t e = 0; e < eps_list.size(); ++e) {
      stat.deviation.push_back(
          {eps_list[e], wt.deviating[e], static_cast<double>(wt.deviating[e]) / static_cast<double>(size)});
    }
    if (windows[wi].size() >= longest) {
      longest = windows[wi].size();
      report.too_short = wt.too_short;
    }
    report.windows.push_back(std::move(stat));
  }

  report.length.target = levy;
  report.length.total_length = total.total_length;
  report.length.mean_ratio = static_cast<double>(total.total_length) / static_cast<double>(size) / log_q;
  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    report.length.deviation.push_back({eps_list[e], total.length_deviating[e],
                                       static_cast<double>(total.length_deviating[e]) / static_cast<double>(size)});
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

DeviationReport deviation_report(const EnsembleSpec& spec, std::span<const Window> windows,
                                 std::span<const double> eps_list, unsigned workers) {
  const std::vector<Int> residues = realize_ensemble(spec);
  return deviation_report(spec.q, residues, spec.kind, spec.descriptor(), windows, eps_list, workers);
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InsufficientData("slope needs at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InsufficientData("slope needs at least two distinct abscissae");
  return sxy / sxx;
}

namespace {

const DeviationEntry& find_eps(std::span<const DeviationEntry> entries, double eps) {
  for (const auto& d : entries) {
    if (std::abs(d.eps - eps) <= 1e-12 * std::max(1.0, std::abs(eps))) return d;
  }
  throw InsufficientData("eps " + std::to_string(eps) + " is missing from a report");
}

double smoothed_neg_log(const DeviationEntry& d, std::int64_t size) {
  const double p = d.count == 0 ? 1.0 / static_cast<double>(size + 1) : d.prob;
  return -std::log(p);
}

}  // namespace

RateFit rate_fit(std::span<const DeviationReport> reports, double eps) {
  if (reports.size() < 2) throw InsufficientData("rate fit needs at least two reports");
  std::set<Int> distinct;
  for (const auto& r : reports) {
    distinct.insert(r.q);
    if (r.kind != reports.front().kind) throw InsufficientData("reports mix ensemble kinds");
    if (r.windows.size() != reports.front().windows.size()) throw InsufficientData("reports use different windows");
    for (std::size_t i = 0; i < r.windows.size(); ++i) {
      if (!(r.windows[i].window == reports.front().windows[i].window)) {
        throw InsufficientData("reports use different windows");
      }
    }
  }
  if (distinct.size() < 2) throw InsufficientData("rate fit needs at least two distinct q");

  std::vector<double> x;
  for (const auto& r : reports) x.push_back(std::log(static_cast<double>(r.q)));

  RateFit fit{eps, {}, 0.0};
  std::vector<double> y(reports.size());
  for (std::size_t wi = 0; wi < reports.front().windows.size(); ++wi) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      y[i] = smoothed_neg_log(find_eps(reports[i].windows[wi].deviation, eps), reports[i].ensemble_size);
    }
    fit.window_alpha.push_back(least_squares_slope(x, y));
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    y[i] = smoothed_neg_log(find_eps(reports[i].length.deviation, eps), reports[i].ensemble_size);
  }
  fit.length_alpha = least_squares_slope(x, y);
  return fit;
}

}  // namespace cfstat
