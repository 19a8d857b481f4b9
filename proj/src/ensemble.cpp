#include "cfstat/ensemble.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "cfstat/primes.hpp"

namespace cfstat {

namespace {

void check_modulus(Int q) {
  if (q < 2) throw InvalidArgument("modulus must be at least 2, got " + std::to_string(q));
  if (q > kScanModulusCap) throw OverflowError("modulus " + std::to_string(q) + " exceeds the 2^31 scan cap");
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

EnsembleSpec EnsembleSpec::all(Int q) { return {EnsembleKind::All, q, 1.0, 0, {}}; }

EnsembleSpec EnsembleSpec::primes(Int q) { return {EnsembleKind::Primes, q, 1.0, 0, {}}; }

EnsembleSpec EnsembleSpec::random_sparse(Int q, double h, std::uint64_t seed) {
  if (!(h > 0.0 && h <= 1.0)) throw InvalidArgument("sparsity exponent h must lie in (0, 1]");
  return {EnsembleKind::RandomSparse, q, h, seed, {}};
}

EnsembleSpec EnsembleSpec::explicit_residues(Int q, std::vector<Int> residues) {
  return {EnsembleKind::Explicit, q, 1.0, 0, std::move(residues)};
}

EnsembleSpec EnsembleSpec::parse(std::string_view text, Int q) {
  if (text == "all") return all(q);
  if (text == "primes") return primes(q);
  constexpr std::string_view kRandom = "random:";
  if (text.starts_with(kRandom)) {
    text.remove_prefix(kRandom.size());
    double h = -1.0;
    std::uint64_t seed = 0;
    bool have_h = false, have_seed = false;
    while (!text.empty()) {
      const auto comma = text.find(',');
      const auto item = text.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw InvalidArgument("expected key=value in ensemble spec");
      const auto key = item.substr(0, eq);
      const auto value = item.substr(eq + 1);
      if (key == "h") {
        h = parse_number<double>(value, "h");
        have_h = true;
      } else if (key == "seed") {
        seed = parse_number<std::uint64_t>(value, "seed");
        have_seed = true;
      } else {
        throw InvalidArgument("unknown ensemble key '" + std::string(key) + "'");
      }
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    if (!have_h || !have_seed) throw InvalidArgument("random ensemble needs both h= and seed=");
    return random_sparse(q, h, seed);
  }
  throw InvalidArgument("unknown ensemble '" + std::string(text) + "' (all|primes|random:h=H,seed=S|file:PATH)");
}

std::string EnsembleSpec::descriptor() const {
  switch (kind) {
    case EnsembleKind::All:
      return "all";
    case EnsembleKind::Primes:
      return "primes";
    case EnsembleKind::RandomSparse:
      return fmt::format("random:h={},seed={}", h, seed);
    case EnsembleKind::Explicit:
      return fmt::format("explicit:n={}", residues.size());
  }
  return "unknown";
}

std::vector<Int> coprime_residues(Int q) {
  check_modulus(q);
  std::vector<Int> out;
  for (Int j = 1; j < q; ++j) {
    if (std::gcd(j, q) == 1) out.push_back(j);
  }
  return out;
}

std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("bounded_draw needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % bound;
  }
}

std::vector<Int> realize_ensemble(const EnsembleSpec& spec) {
  check_modulus(spec.q);
  const Int q = spec.q;
  std::vector<Int> out;
  switch (spec.kind) {
    case EnsembleKind::All:
      out = coprime_residues(q);
      break;
    case EnsembleKind::Primes: {
      const PrimeTable table(q);
      for (Int p : table.primes_below(q)) {
        if (q % p != 0) out.push_back(p);
      }
      break;
    }
    case EnsembleKind::RandomSparse: {
      if (!(spec.h > 0.0 && spec.h <= 1.0)) throw InvalidArgument("sparsity exponent h must lie in (0, 1]");
      std::vector<Int> units = coprime_residues(q);
      const double wanted = std::ceil(std::pow(static_cast<double>(q), spec.h));
      const std::size_t m = std::min(units.size(), static_cast<std::size_t>(std::max(1.0, wanted)));
      std::mt19937_64 gen(spec.seed);
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded_draw(gen, units.size() - i));
        std::swap(units[i], units[j]);
      }
      units.resize(m);
      std::sort(units.begin(), units.end());
      out = std::move(units);
      break;
    }
    case EnsembleKind::Explicit: {
      for (Int r : spec.residues) {
        const Int j = ((r % q) + q) % q;
        if (j == 0) throw InvalidArgument("residue " + std::to_string(r) + " is 0 modulo " + std::to_string(q));
        if (std::gcd(j, q) != 1) {
          throw NotCoprime("residue " + std::to_string(r) + " is not coprime to " + std::to_string(q));
        }
        out.push_back(j);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
    }
  }
  if (out.empty()) {
    throw EmptyEnsemble("ensemble '" + spec.descriptor() + "' is empty for q = " + std::to_string(q));
  }
  return out;
}

}  // namespace cfstat
