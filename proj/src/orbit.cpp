#include "cfstat/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cfstat/parallel.hpp"

namespace cfstat {

namespace {

using Real = long double;
constexpr Real kNegInf = -std::numeric_limits<Real>::infinity();
constexpr Real kPosInf = std::numeric_limits<Real>::infinity();

Real log_or_neg_inf(Int x) { return x == 0 ? kNegInf : std::log(static_cast<Real>(x)); }

Real log_add_exp(Real a, Real b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const Real hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log |v(t)|^2 = log(e^t s^2 / q^2 + e^{-t} h^2).
Real log_norm_sq(const CandidateVector& c, Real log_q, Real t) {
  return log_add_exp(t + 2 * log_or_neg_inf(c.offset) - 2 * log_q, -t + 2 * log_or_neg_inf(c.height));
}

// Time after which candidate j (later in the family) is strictly shorter than
// candidate i; -inf when j is never longer.
Real crossing_time(const CandidateVector& i, const CandidateVector& j, Real log_q) {
  const __int128 dh = static_cast<__int128>(j.height) * j.height - static_cast<__int128>(i.height) * i.height;
  const __int128 ds = static_cast<__int128>(i.offset) * i.offset - static_cast<__int128>(j.offset) * j.offset;
  if (dh <= 0) return kNegInf;
  if (ds <= 0) return kPosInf;
  return (std::log(static_cast<Real>(dh)) + 2 * log_q - std::log(static_cast<Real>(ds))) / 2;
}

void check_orbit_input(Int p, Int q) {
  if (q < 2) throw InvalidArgument("orbit modulus must be at least 2");
  if (q > kScanModulusCap) throw OverflowError("orbit modulus exceeds the 2^31 cap");
  if (p <= 0 || p >= q) throw InvalidArgument("numerator must lie in [1, q)");
  if (std::gcd(p, q) != 1) throw NotCoprime(std::to_string(p) + " is not coprime to " + std::to_string(q));
}

}  // namespace

OrbitSpec OrbitSpec::standard(Int p, Int q) {
  check_orbit_input(p, q);
  return OrbitSpec{p, q, 2.0 * std::log(static_cast<double>(q))};
}

std::vector<CandidateVector> orbit_candidates(Int p, Int q) {
  check_orbit_input(p, q);
  std::vector<CandidateVector> out;
  out.push_back({q, 0});  // (1, 0)
  // Remaining candidates: (s_k, q_k) where s_k runs through the Euclidean
  // remainders p, q mod p, ... down to 0.
  Int q_prev = 0, q_cur = 1;
  Int r_prev = q, r_cur = p;
  out.push_back({r_cur, q_cur});
  while (r_cur != 0) {
    const Int a = r_prev / r_cur;
    const Int r_next = r_prev - a * r_cur;
    const Int q_next = checked::add(checked::mul(a, q_cur), q_prev);
    r_prev = r_cur;
    r_cur = r_next;
    q_prev = q_cur;
    q_cur = q_next;
    out.push_back({r_cur, q_cur});
  }
  return out;
}

OrbitProfile::OrbitProfile(Int p, Int q, double horizon, std::vector<CandidateVector> candidates,
                           std::vector<OrbitSegment> segments)
    : p_(p), q_(q), horizon_(horizon), candidates_(std::move(candidates)), segments_(std::move(segments)) {}

OrbitProfile alpha1_profile(const OrbitSpec& spec) {
  if (!(spec.horizon > 0.0) || !std::isfinite(spec.horizon)) throw InvalidArgument("horizon T must be positive");
  auto candidates = orbit_candidates(spec.p, spec.q);
  const Real log_q = std::log(static_cast<Real>(spec.q));

  // Lower envelope of |v_k(t)|^2. Offsets strictly decrease and heights
  // weakly increase along the family, so any two curves cross at most once
  // with the later one winning afterwards.
  struct Active {
    std::size_t index;
    Real start;
  };
  std::vector<Active> hull;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    Real start = kNegInf;
    while (!hull.empty()) {
      const Real c = crossing_time(candidates[hull.back().index], candidates[j], log_q);
      if (c <= hull.back().start) {
        hull.pop_back();
        continue;
      }
      start = c;
      break;
    }
    if (hull.empty() || start < kPosInf) hull.push_back({j, start});
  }

  std::vector<OrbitSegment> segments;
  const Real horizon = spec.horizon;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Real begin = std::max<Real>(hull[i].start, 0);
    const Real end = std::min<Real>(i + 1 < hull.size() ? hull[i + 1].start : kPosInf, horizon);
    if (end > begin) {
      segments.push_back({static_cast<double>(begin), static_cast<double>(end), hull[i].index});
    }
  }
  segments.front().begin = 0.0;
  segments.back().end = spec.horizon;
  return OrbitProfile(spec.p, spec.q, spec.horizon, std::move(candidates), std::move(segments));
}

std::vector<double> OrbitProfile::breakpoints() const {
  std::vector<double> out;
  out.reserve(segments_.size() + 1);
  for (const auto& s : segments_) out.push_back(s.begin);
  out.push_back(segments_.back().end);
  return out;
}

std::size_t OrbitProfile::segment_at(double t) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](double value, const OrbitSegment& s) { return value < s.end; });
  if (it == segments_.end()) return segments_.size() - 1;
  return static_cast<std::size_t>(it - segments_.begin());
}

double OrbitProfile::candidate_log_length(std::size_t k, double t) const {
  return static_cast<double>(log_norm_sq(candidates_.at(k), std::log(static_cast<Real>(q_)), t) / 2);
}

double OrbitProfile::log_alpha1(double t) const {
  return -candidate_log_length(segments_[segment_at(t)].candidate, t);
}

double OrbitProfile::alpha1(double t) const { return std::exp(log_alpha1(t)); }

std::vector<std::pair<double, double>> OrbitProfile::sample(double step) const {
  if (!(step > 0.0)) throw InvalidArgument("sampling step must be positive");
  std::vector<std::pair<double, double>> out;
  const auto n = static_cast<std::size_t>(std::floor(horizon_ / step));
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) * step;
    if (t >= horizon_) break;
    out.emplace_back(t, alpha1(t));
  }
  out.emplace_back(horizon_, alpha1(horizon_));
  return out;
}

double OrbitProfile::time_above(double M, double t0, double t1,
                                std::vector<std::pair<double, double>>* intervals) const {
  if (!(M > 0.0)) throw InvalidArgument("cusp threshold M must be positive");
  const Real log_q = std::log(static_cast<Real>(q_));
  const Real r_sq = 1.0L / (static_cast<Real>(M) * static_cast<Real>(M));
  double total = 0.0;
  for (const auto& seg : segments_) {
    const Real a = std::max<Real>(seg.begin, t0);
    const Real b = std::min<Real>(seg.end, t1);
    if (!(b > a)) continue;
    const auto& c = candidates_[seg.candidate];
    // Solve e^t s^2/q^2 + e^{-t} h^2 < r^2 for t.
    Real lo = kNegInf, hi = kPosInf;
    if (c.offset == 0) {
      lo = 2 * log_or_neg_inf(c.height) - std::log(r_sq);
    } else if (c.height == 0) {
      hi = std::log(r_sq) + 2 * log_q - 2 * std::log(static_cast<Real>(c.offset));
    } else {
      const Real cross = 2 * static_cast<Real>(c.offset) * static_cast<Real>(c.height) / static_cast<Real>(q_);
      const Real disc = r_sq * r_sq - cross * cross;
      if (disc <= 0) continue;
      const Real log_a = 2 * std::log(static_cast<Real>(c.offset)) - 2 * log_q;
      const Real log_b = 2 * std::log(static_cast<Real>(c.height));
      hi = std::log(r_sq + std::sqrt(disc)) - std::log(2.0L) - log_a;
      lo = log_b - log_a - hi;
    }
    const auto x = static_cast<double>(std::max(a, lo)), y = static_cast<double>(std::min(b, hi));
    if (!(y > x)) continue;
    total += y - x;
    if (intervals) {
      if (!intervals->empty() && intervals->back().second == x) {
        intervals->back().second = y;
      } else {
        intervals->emplace_back(x, y);
      }
    }
  }
  return std::min(total, t1 - t0);
}

ExcursionSummary excursion_fraction(const OrbitProfile& profile, double M, double grid) {
  if (!(grid > 0.0)) throw InvalidArgument("grid step must be positive");
  ExcursionSummary s{M, profile.horizon(), 0.0, {}, grid, 0.0};
  s.fraction_above = profile.time_above(M, 0.0, profile.horizon(), &s.intervals) / profile.horizon();

  const auto cells = static_cast<std::size_t>(std::ceil(profile.horizon() / grid));
  const double width = profile.horizon() / static_cast<double>(cells);
  const double log_m = std::log(M);
  std::size_t above = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    if (profile.log_alpha1((static_cast<double>(i) + 0.5) * width) > log_m) ++above;
  }
  s.sampled_fraction = static_cast<double>(above) / static_cast<double>(cells);
  return s;
}

ExcursionSummary excursion_fraction(const OrbitSpec& spec, double M, double grid) {
  return excursion_fraction(alpha1_profile(spec), M, grid);
}

std::vector<DualResidual> dual_orbit_identity(Int p, Int q, std::span<const double> thresholds, double grid) {
  if (!(grid > 0.0)) throw InvalidArgument("grid step must be positive");
  const Int dual_p = neg_mod_inverse(p, q);
  const double half = std::log(static_cast<double>(q));
  const OrbitProfile full = alpha1_profile(OrbitSpec{p, q, 2 * half});
  const OrbitProfile first = alpha1_profile(OrbitSpec{p, q, half});
  const OrbitProfile dual = alpha1_profile(OrbitSpec{dual_p, q, half});
  std::vector<DualResidual> out;
  for (double M : thresholds) {
    const double lhs = full.time_above(M, 0.0, 2 * half) / (2 * half);
    const double rhs = 0.5 * first.time_above(M, 0.0, half) / half + 0.5 * dual.time_above(M, 0.0, half) / half;
    out.push_back({M, lhs, rhs, std::abs(lhs - rhs)});
  }
  return out;
}

double ensemble_mass(Int q, std::span<const Int> residues, double M, unsigned workers) {
  if (residues.empty()) throw EmptyEnsemble("ensemble is empty for q = " + std::to_string(q));
  const double horizon = 2.0 * std::log(static_cast<double>(q));
  const double sum = chunked_reduce(
      residues.size(), 256, workers, 0.0,
      [&](std::size_t b, std::size_t e) {
        double part = 0.0;
        for (std::size_t i = b; i < e; ++i) {
          const OrbitProfile profile = alpha1_profile(OrbitSpec{residues[i], q, horizon});
          part += 1.0 - profile.time_above(M, 0.0, horizon) / horizon;
        }
        return part;
      },
      [](double& acc, double part) { acc += part; });
  return sum / static_cast<double>(residues.size());
}

double ensemble_mass(const EnsembleSpec& spec, double M, unsigned workers) {
  const auto residues = realize_ensemble(spec);
  return ensemble_mass(spec.q, residues, M, workers);
}

}  // namespace cfstat
