#pragma once

// Exact continued-fraction kernel for rationals in (0, 1).
//
// Conventions: x = 1/(a1 + 1/(a2 + ... + 1/an)), digits ai >= 1, and the
// canonical expansion of a rational never ends in 1. Convergents are seeded
// with (p_-1, q_-1) = (1, 0) and (p_0, q_0) = (0, 1), so after consuming
// every digit (p_n, q_n) = (num, den).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfstat/error.hpp"

namespace cfstat {

using Int = std::int64_t;

/// Largest modulus accepted by ensemble scans. Continuants of fractions with
/// den <= 2^31 and their squares stay inside a signed 64-bit integer.
inline constexpr Int kScanModulusCap = Int{1} << 31;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

/// p/q with gcd(p, q) = 1 and 0 < p < q.
class ReducedFraction {
 public:
  /// Rejects anything that is not already reduced; see reduce().
  ReducedFraction(Int num, Int den);

  /// Divides out the gcd first. Still rejects values outside (0, 1).
  static ReducedFraction reduce(Int num, Int den);

  /// Parses "p/q".
  static ReducedFraction parse(std::string_view text);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;

 private:
  Int num_;
  Int den_;
};

/// Canonical digit string [a1, ..., an]: n >= 1, ai >= 1, an >= 2.
class CfDigits {
 public:
  explicit CfDigits(std::vector<Int> digits);

  /// Parses the comma-separated serialization, e.g. "1,1,3".
  static CfDigits parse(std::string_view text);

  std::span<const Int> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  Int operator[](std::size_t i) const { return digits_[i]; }
  auto begin() const noexcept { return digits_.begin(); }
  auto end() const noexcept { return digits_.end(); }

  std::string to_string() const;

  friend bool operator==(const CfDigits&, const CfDigits&) = default;

 private:
  std::vector<Int> digits_;
};

struct Convergent {
  Int p;
  Int q;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Entry k holds (p_k, q_k) for k = 0..n; entry 0 is the (0, 1) seed.
using Convergents = std::vector<Convergent>;

/// Comma-separated positive integers without the canonical check.
std::vector<Int> parse_digit_list(std::string_view text);
std::string format_digit_list(std::span<const Int> digits);

CfDigits expand(const ReducedFraction& f);

/// Accepts non-canonical strings ending in 1. Throws OverflowError when a
/// continuant leaves the 64-bit range and InvalidArgument when the value
/// is not inside (0, 1) (only the string [1]).
ReducedFraction evaluate(std::span<const Int> digits);
inline ReducedFraction evaluate(const CfDigits& d) { return evaluate(d.digits()); }

/// Folds a trailing 1 into the previous digit: (..., a, 1) -> (..., a + 1).
CfDigits canonicalize(std::span<const Int> digits);

inline std::size_t len(const CfDigits& d) noexcept { return d.size(); }

Convergents convergents(std::span<const Int> digits);
inline Convergents convergents(const CfDigits& d) { return convergents(d.digits()); }

/// (den - num) / den.
ReducedFraction mirror(const ReducedFraction& f);

/// The unique p' in [1, q) with p * p' = -1 (mod q). Throws NotCoprime.
Int neg_mod_inverse(Int p, Int q);

// ---------------------------------------------------------------------------
// Allocation-free kernels for ensemble scans. Callers guarantee
// 0 < num < den; no validation happens here.

/// Calls visit(digit) for each canonical digit in order until it returns
/// false. Returns true when the whole expansion was visited.
template <class Visitor>
inline bool visit_digits(Int num, Int den, Visitor&& visit) {
  while (num != 0) {
    const Int a = den / num;
    const Int r = den - a * num;
    if (!visit(a)) return false;
    den = num;
    num = r;
  }
  return true;
}

inline int expansion_length(Int num, Int den) noexcept {
  int n = 0;
  while (num != 0) {
    const Int r = den % num;
    den = num;
    num = r;
    ++n;
  }
  return n;
}

inline void expand_into(Int num, Int den, std::vector<Int>& out) {
  out.clear();
  visit_digits(num, den, [&out](Int a) {
    out.push_back(a);
    return true;
  });
}

}  // namespace cfstat
