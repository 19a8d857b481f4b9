#include "cfstat/zaremba.hpp"

#include <cmath>
#include <numeric>

#include "cfstat/parallel.hpp"

namespace cfstat {

namespace {

void check_bound(Int k) {
  if (k < 1) throw InvalidArgument("digit bound k must be at least 1");
}

void check_q_range(Int q_max) {
  if (q_max < 2) throw InvalidArgument("q_max must be at least 2");
  if (q_max > kScanModulusCap) throw OverflowError("q_max " + std::to_string(q_max) + " exceeds the 2^31 scan cap");
}

// Fibonacci growth of continuants bounds the depth far below this for
// q <= 2^31.
constexpr int kMaxTreeDepth = 95;

}  // namespace

bool is_k_zaremba(const ReducedFraction& f, Int k) {
  check_bound(k);
  return is_k_zaremba(f.num(), f.den(), k);
}

ZarembaRow scan_denominator(Int q, Int k, const PrimeTable& primes) {
  check_bound(k);
  check_q_range(q);
  if (primes.limit() < q) throw InvalidArgument("prime table does not cover q");
  ZarembaRow row;
  row.q = q;
  row.k = k;
  for (Int j = 1; j < q; ++j) {
    if (std::gcd(j, q) != 1 || !is_k_zaremba(j, q, k)) continue;
    ++row.count_all;
    if (primes.is_prime(j)) {
      ++row.count_prime;
      if (!row.witness_prime) row.witness_prime = j;
    }
  }
  const double log_q = std::log(static_cast<double>(q));
  if (row.count_all > 0) row.ratio_all = std::log(static_cast<double>(row.count_all)) / log_q;
  if (row.count_prime > 0) row.ratio_prime = std::log(static_cast<double>(row.count_prime)) / log_q;
  return row;
}

ZarembaRow scan_denominator(Int q, Int k) {
  check_q_range(q);
  return scan_denominator(q, k, PrimeTable(q));
}

std::vector<ZarembaRow> scan_range(Int q_min, Int q_max, Int k, unsigned workers) {
  check_bound(k);
  check_q_range(q_max);
  if (q_min < 2 || q_min > q_max) throw InvalidArgument("need 2 <= q_min <= q_max");
  const PrimeTable primes(q_max);
  const auto n = static_cast<std::size_t>(q_max - q_min + 1);
  return chunked_reduce(
      n, 16, workers, std::vector<ZarembaRow>{},
      [&](std::size_t b, std::size_t e) {
        std::vector<ZarembaRow> rows;
        for (std::size_t i = b; i < e; ++i) rows.push_back(scan_denominator(q_min + static_cast<Int>(i), k, primes));
        return rows;
      },
      [](std::vector<ZarembaRow>& acc, std::vector<ZarembaRow>&& part) {
        acc.insert(acc.end(), part.begin(), part.end());
      });
}

ConjectureScan conjecture_scan(Int q_max, Int k, bool primes_only, unsigned workers) {
  check_bound(k);
  check_q_range(q_max);
  const PrimeTable table(q_max);
  const std::vector<Int> primes = table.primes_below(q_max);

  auto map = [&](std::size_t b, std::size_t e) {
    ConjectureScan part;
    for (std::size_t i = b; i < e; ++i) {
      const Int q = static_cast<Int>(i) + 2;
      bool any_candidate = false;
      bool found = false;
      if (primes_only) {
        for (Int p : primes) {
          if (p >= q) break;
          if (q % p == 0) continue;
          any_candidate = true;
          if (is_k_zaremba(p, q, k)) {
            found = true;
            break;
          }
        }
      } else {
        any_candidate = true;
        for (Int j = 1; j < q && !found; ++j) {
          if (std::gcd(j, q) == 1 && is_k_zaremba(j, q, k)) found = true;
        }
      }
      if (!any_candidate) {
        part.vacuous.push_back(q);
      } else if (!found) {
        part.counterexamples.push_back(q);
      }
    }
    return part;
  };
  return chunked_reduce(static_cast<std::size_t>(q_max - 1), 64, workers, ConjectureScan{}, map,
                        [](ConjectureScan& acc, ConjectureScan&& part) {
                          acc.counterexamples.insert(acc.counterexamples.end(), part.counterexamples.begin(),
                                                     part.counterexamples.end());
                          acc.vacuous.insert(acc.vacuous.end(), part.vacuous.begin(), part.vacuous.end());
                        });
}

std::int64_t hensley_branch(Int max_q, Int k, Int first_digit) {
  check_bound(k);
  check_q_range(max_q);
  if (first_digit < 1 || first_digit > k) throw InvalidArgument("first digit must lie in [1, k]");
  if (first_digit > max_q) return 0;

  struct Node {
    Int q_prev;
    Int q_cur;
    int depth;
  };
  std::vector<Node> stack;
  // After the first digit a1: (q_0, q_1) = (1, a1).
  std::int64_t count = first_digit >= 2 ? 1 : 0;
  stack.push_back(Node{1, first_digit, 1});

  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    for (Int a = 1; a <= k; ++a) {
      Int next;
      if (__builtin_mul_overflow(a, node.q_cur, &next) || __builtin_add_overflow(next, node.q_prev, &next) ||
          next > max_q) {
        break;  // larger digits only grow the continuant
      }
      if (a >= 2) ++count;
      if (node.depth + 1 > kMaxTreeDepth) throw OverflowError("continuant tree deeper than expected");
      stack.push_back(Node{node.q_cur, next, node.depth + 1});
    }
  }
  return count;
}

std::int64_t hensley_count(Int max_q, Int k, unsigned workers) {
  check_bound(k);
  check_q_range(max_q);
  const Int branches = std::min(k, max_q);
  return chunked_reduce(
      static_cast<std::size_t>(branches), 1, workers, std::int64_t{0},
      [&](std::size_t b, std::size_t e) {
        std::int64_t c = 0;
        for (std::size_t i = b; i < e; ++i) c += hensley_branch(max_q, k, static_cast<Int>(i) + 1);
        return c;
      },
      [](std::int64_t& acc, std::int64_t part) { acc += part; });
}

}  // namespace cfstat
