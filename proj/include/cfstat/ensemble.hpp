#pragma once

// Numerator ensembles Λ_q ⊆ (Z/qZ)^×.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cfstat/cfe.hpp"

namespace cfstat {

enum class EnsembleKind { All, Primes, RandomSparse, Explicit };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::All;
  Int q = 0;
  double h = 1.0;              // RandomSparse only
  std::uint64_t seed = 0;      // RandomSparse only
  std::vector<Int> residues;   // Explicit only

  static EnsembleSpec all(Int q);
  static EnsembleSpec primes(Int q);
  static EnsembleSpec random_sparse(Int q, double h, std::uint64_t seed);
  static EnsembleSpec explicit_residues(Int q, std::vector<Int> residues);

  /// "all", "primes", "random:h=H,seed=S". Explicit sets come from files and
  /// are handled by the caller.
  static EnsembleSpec parse(std::string_view text, Int q);

  /// Stable textual form used in reports: all | primes |
  /// random:h=H,seed=S | explicit:n=N.
  std::string descriptor() const;
};

/// Every 1 <= j < q with gcd(j, q) = 1, ascending.
std::vector<Int> coprime_residues(Int q);

/// Realizes the set, ascending and duplicate free.
///   All          -> every unit residue
///   Primes       -> primes p < q with p not dividing q
///   RandomSparse -> ceil(q^h) units (clamped to phi(q)) drawn without
///                   replacement by a partial Fisher–Yates shuffle driven by
///                   std::mt19937_64(seed) and bounded_draw below
///   Explicit     -> residues reduced mod q and validated
/// Throws EmptyEnsemble, NotCoprime, InvalidArgument, OverflowError.
std::vector<Int> realize_ensemble(const EnsembleSpec& spec);

/// Unbiased integer in [0, bound) from the raw 64-bit stream (rejection of
/// the short final interval). Platform independent, unlike
/// std::uniform_int_distribution.
std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound);

}  // namespace cfstat
