#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's expansion or orbit code.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Int = std::int64_t;

/// Digits via the Gauss map on exact rationals x = num/den: a = floor(1/x),
/// x <- 1/x - a. Written as a recursion on (den, num) pairs.
inline std::vector<Int> gauss_map_digits(Int num, Int den) {
  std::vector<Int> out;
  while (num > 0) {
    // 1/x = den/num
    const Int a = den / num;
    out.push_back(a);
    const Int next_num = den - a * num;
    den = num;
    num = next_num;
  }
  return out;
}

/// Value of [a1, ..., an] evaluated from the innermost digit outwards as an
/// exact fraction (num, den), not reduced through convergents.
inline std::pair<Int, Int> evaluate_inside_out(const std::vector<Int>& digits) {
  // Start from 1/an, then x <- 1/(a + x).
  Int num = 1, den = digits.back();
  for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
    // 1/(a + num/den) = den / (a den + num)
    const Int new_den = *it * den + num;
    num = den;
    den = new_den;
  }
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

inline bool all_digits_at_most(Int num, Int den, Int k) {
  for (Int a : gauss_map_digits(num, den)) {
    if (a > k) return false;
  }
  return true;
}

/// O(Q^2 log Q) double loop.
inline std::int64_t zaremba_pairs_brute_force(Int max_q, Int k) {
  std::int64_t count = 0;
  for (Int q = 2; q <= max_q; ++q) {
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1 && all_digits_at_most(p, q, k)) ++count;
    }
  }
  return count;
}

inline bool is_prime_trial(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Shortest nonzero vector of a_t u_{p/q} Z^2 by enumeration. Lattice
/// vectors are (e^{t/2} (m q + n p) / q, e^{-t/2} n); for each height n the
/// best m leaves horizontal part dist(n p, qZ) / q. Heights beyond
/// 1.08 e^{t/2} cannot beat the Hermite bound (4/3)^{1/4} < 1.08.
inline long double shortest_by_enumeration(Int p, Int q, long double t) {
  const long double grow = std::exp(t / 2), shrink = std::exp(-t / 2);
  long double best = grow;  // (1, 0)
  const auto max_n = static_cast<Int>(std::ceil(1.08L * grow)) + 1;
  for (Int n = 1; n <= max_n; ++n) {
    const Int r = static_cast<Int>((static_cast<__int128>(n) * p) % q);
    const Int d = std::min(r, q - r);
    const long double x = grow * static_cast<long double>(d) / static_cast<long double>(q);
    const long double y = shrink * static_cast<long double>(n);
    best = std::min(best, std::sqrt(x * x + y * y));
  }
  return best;
}

/// Lagrange–Gauss reduction of a_t u_{p/q} Z^2 carried out on exact integer
/// coordinates: a lattice vector is stored as (x, n) with x = m q + n p, and
/// only norms and inner products are evaluated in floating point, so the
/// basis never suffers cancellation.
inline long double shortest_by_integer_gauss(Int p, Int q, long double t) {
  struct V {
    __int128 x, n;
  };
  const long double grow = std::exp(t) / (static_cast<long double>(q) * static_cast<long double>(q));
  const long double shrink = std::exp(-t);
  auto dot = [&](const V& a, const V& b) {
    return grow * static_cast<long double>(a.x) * static_cast<long double>(b.x) +
           shrink * static_cast<long double>(a.n) * static_cast<long double>(b.n);
  };
  V u{q, 0}, v{p, 1};
  for (int iter = 0; iter < 100000; ++iter) {
    if (dot(u, u) > dot(v, v)) std::swap(u, v);
    const long double mu = std::round(dot(u, v) / dot(u, u));
    if (mu == 0) break;
    const auto m = static_cast<__int128>(mu);
    v = {v.x - m * u.x, v.n - m * u.n};
  }
  return std::sqrt(std::min(dot(u, u), dot(v, v)));
}

}  // namespace oracle
