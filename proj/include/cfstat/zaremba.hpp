#pragma once

// Bounded partial quotients: k-Zaremba predicates, per-denominator counts,
// prime-numerator witness searches and continuant-tree counting.
//
// A numerator j is k-Zaremba for q when every digit of the canonical
// expansion of j/q is <= k. A prime numerator is a prime integer p < q with
// p not dividing q.

#include <cstdint>
#include <optional>
#include <vector>

#include "cfstat/cfe.hpp"
#include "cfstat/primes.hpp"

namespace cfstat {

struct ZarembaRow {
  Int q = 0;
  Int k = 0;
  std::int64_t count_all = 0;
  std::int64_t count_prime = 0;
  std::optional<Int> witness_prime;  // smallest k-Zaremba prime numerator
  std::optional<double> ratio_all;   // log count_all / log q, when count_all > 0
  std::optional<double> ratio_prime;
};

inline bool is_k_zaremba(Int num, Int den, Int k) {
  return visit_digits(num, den, [k](Int a) { return a <= k; });
}

bool is_k_zaremba(const ReducedFraction& f, Int k);

/// `primes` must cover [0, q].
ZarembaRow scan_denominator(Int q, Int k, const PrimeTable& primes);
ZarembaRow scan_denominator(Int q, Int k);

/// Rows for q_min..q_max, parallel over q.
std::vector<ZarembaRow> scan_range(Int q_min, Int q_max, Int k, unsigned workers = 1);

struct ConjectureScan {
  /// q in (1, q_max] with no k-Zaremba numerator of the requested sort.
  std::vector<Int> counterexamples;
  /// q for which no prime numerator exists at all (only q = 2); kept apart
  /// because the prime-numerator statement is vacuous there.
  std::vector<Int> vacuous;
};

/// Witness search with early exit per q.
ConjectureScan conjecture_scan(Int q_max, Int k, bool primes_only, unsigned workers = 1);

/// #{(p, q) : gcd(p, q) = 1, 1 <= p < q <= max_q, all canonical digits <= k}
/// by depth-first traversal of the continuant tree.
std::int64_t hensley_count(Int max_q, Int k, unsigned workers = 1);

/// The part of hensley_count whose first digit is `first_digit`.
std::int64_t hensley_branch(Int max_q, Int k, Int first_digit);

}  // namespace cfstat
