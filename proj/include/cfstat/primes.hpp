#pragma once

#include <cstdint>
#include <vector>

#include "cfstat/cfe.hpp"

namespace cfstat {

/// Sieve of Eratosthenes over [0, limit].
class PrimeTable {
 public:
  explicit PrimeTable(Int limit);

  Int limit() const noexcept { return limit_; }
  bool is_prime(Int n) const;

  /// Primes p with 2 <= p < bound (bound <= limit + 1).
  std::vector<Int> primes_below(Int bound) const;

 private:
  Int limit_;
  std::vector<bool> composite_;
};

/// Number of primes p <= n.
Int prime_count(Int n);

Int euler_phi(Int q);

}  // namespace cfstat
