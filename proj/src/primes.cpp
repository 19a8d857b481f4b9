#include "cfstat/primes.hpp"

#include <string>

namespace cfstat {

PrimeTable::PrimeTable(Int limit) : limit_(limit) {
  if (limit < 0) throw InvalidArgument("sieve limit must be nonnegative");
  if (limit > kScanModulusCap) throw OverflowError("sieve limit exceeds 2^31");
  composite_.assign(static_cast<std::size_t>(limit) + 1, false);
  composite_[0] = true;
  if (limit >= 1) composite_[1] = true;
  for (Int i = 2; i * i <= limit; ++i) {
    if (composite_[static_cast<std::size_t>(i)]) continue;
    for (Int j = i * i; j <= limit; j += i) composite_[static_cast<std::size_t>(j)] = true;
  }
}

bool PrimeTable::is_prime(Int n) const {
  if (n < 0 || n > limit_) {
    throw InvalidArgument("value " + std::to_string(n) + " outside sieve range [0, " + std::to_string(limit_) + "]");
  }
  return !composite_[static_cast<std::size_t>(n)];
}

std::vector<Int> PrimeTable::primes_below(Int bound) const {
  if (bound > limit_ + 1) throw InvalidArgument("bound exceeds sieve range");
  std::vector<Int> out;
  for (Int n = 2; n < bound; ++n) {
    if (!composite_[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

Int prime_count(Int n) {
  if (n < 2) return 0;
  const PrimeTable table(n);
  Int count = 0;
  for (Int k = 2; k <= n; ++k) count += table.is_prime(k) ? 1 : 0;
  return count;
}

Int euler_phi(Int q) {
  if (q < 1) throw InvalidArgument("phi needs a positive argument");
  Int result = q;
  Int n = q;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace cfstat
