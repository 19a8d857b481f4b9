#include "cfstat/gauss_kuzmin.hpp"

#include <cmath>
#include <utility>

namespace cfstat {

Window::Window(std::vector<Int> word) : word_(std::move(word)) {
  if (word_.empty()) throw InvalidArgument("window must contain at least one digit");
  for (Int a : word_) {
    if (a < 1) throw InvalidArgument("window digits must be positive, got " + std::to_string(a));
  }
}

Window Window::parse(std::string_view text) { return Window(parse_digit_list(text)); }

Window Window::extended(Int digit) const {
  std::vector<Int> w = word_;
  w.push_back(digit);
  return Window(std::move(w));
}

RationalInterval cylinder_interval(const Window& w) {
  const Convergents c = convergents(w.word());
  // The other endpoint replaces wk by wk + 1, i.e. adds (p_{k-1}, q_{k-1}).
  const Convergent& last = c[c.size() - 1];
  const Convergent& prev = c[c.size() - 2];
  const Endpoint a{last.p, last.q};
  const Endpoint b{checked::add(last.p, prev.p), checked::add(last.q, prev.q)};
  // a < b iff a.num * b.den < b.num * a.den; the cross difference is +-1.
  const __int128 lhs = static_cast<__int128>(a.num) * b.den;
  const __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs < rhs ? RationalInterval{a, b} : RationalInterval{b, a};
}

double gauss_measure(const RationalInterval& interval) {
  const auto& [lo, hi] = interval;
  // (1 + hi) / (1 + lo) = 1 + (hi - lo) / (1 + lo); the difference is formed
  // exactly so that narrow cylinders keep full relative precision.
  const __int128 width_num = static_cast<__int128>(hi.num) * lo.den - static_cast<__int128>(lo.num) * hi.den;
  const long double width = static_cast<long double>(width_num) /
                            (static_cast<long double>(hi.den) * static_cast<long double>(lo.den));
  const long double one_plus_lo = 1.0L + static_cast<long double>(lo.num) / static_cast<long double>(lo.den);
  return static_cast<double>(std::log1p(width / one_plus_lo) / std::numbers::ln2_v<long double>);
}

double target_density(const Window& w) { return gauss_measure(cylinder_interval(w)); }

double single_digit_density(Int a) {
  if (a < 1) throw InvalidArgument("digit must be positive");
  const long double x = static_cast<long double>(a);
  return static_cast<double>(std::log1p(1.0L / (x * (x + 2.0L))) / std::numbers::ln2_v<long double>);
}

}  // namespace cfstat
