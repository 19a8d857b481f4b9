#pragma once

// Gauss–Kuzmin reference values: cylinder sets, the Gauss measure, and the
// Lévy length constant. Measures are double precision with relative error
// around 1e-12 or better.

#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "cfstat/cfe.hpp"

namespace cfstat {

/// A digit word w = (w1, ..., wk), k >= 1, every wi >= 1.
class Window {
 public:
  explicit Window(std::vector<Int> word);
  static Window parse(std::string_view text);  // "1,2"

  std::span<const Int> word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  std::string to_string() const { return format_digit_list(word_); }

  /// w followed by one more digit.
  Window extended(Int digit) const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::vector<Int> word_;
};

/// Rational endpoint in [0, 1]; unlike ReducedFraction it may be 0/1 or 1/1.
struct Endpoint {
  Int num;
  Int den;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Interval [lo, hi] with 0 <= lo < hi <= 1. Openness of the endpoints is
/// irrelevant for measures and is not tracked.
struct RationalInterval {
  Endpoint lo;
  Endpoint hi;
};

/// The cylinder I_w of numbers whose expansion starts with w. Endpoints are
/// [w1..wk] and [w1..wk + 1], which are Farey neighbours.
RationalInterval cylinder_interval(const Window& w);

/// log2((1 + hi) / (1 + lo)).
double gauss_measure(const RationalInterval& interval);

/// Asymptotic frequency of w in a Gauss-typical expansion.
double target_density(const Window& w);

/// Closed form for one-digit windows: log2(1 + 1/(a(a+2))).
double single_digit_density(Int a);

/// 12 log 2 / pi^2, the typical ratio len(x) / log(den).
inline constexpr double levy_constant() noexcept {
  return 12.0 * std::numbers::ln2 / (std::numbers::pi * std::numbers::pi);
}

}  // namespace cfstat
