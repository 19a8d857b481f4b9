#pragma once

// Diagonal-flow orbits t -> a_t u_{p/q} Z^2 on the space of unimodular
// planar lattices, and their cusp excursions.
//
// The lattice a_t u_{p/q} Z^2 contains, for every convergent (p_k, q_k) of
// p/q (seeds included), the vector
//     v_k(t) = (e^{t/2} (q_k p - p_k q) / q,  e^{-t/2} q_k).
// A shortest vector at any time t >= 0 is one of these (best approximations
// are convergents), so with s_k = |q_k p - p_k q| and h_k = q_k
//     |v_k(t)|^2 = e^t s_k^2 / q^2 + e^{-t} h_k^2
// and alpha_1(t) = max_k 1 / |v_k(t)|. The lower envelope of these convex
// curves gives an exact piecewise description of alpha_1, and the cusp
// condition alpha_1 > M reduces to one quadratic in e^t per piece.

#include <span>
#include <utility>
#include <vector>

#include "cfstat/cfe.hpp"
#include "cfstat/ensemble.hpp"
#include "cfstat/lattice.hpp"

namespace cfstat {

struct OrbitSpec {
  Int p = 0;
  Int q = 0;
  double horizon = 0.0;  // T

  /// T = 2 log q.
  static OrbitSpec standard(Int p, Int q);
};

/// Lattice vector with horizontal part offset/q and vertical part height at
/// t = 0 (up to sign).
struct CandidateVector {
  Int offset;  // s_k
  Int height;  // h_k
};

struct OrbitSegment {
  double begin;
  double end;
  std::size_t candidate;  // index into OrbitProfile::candidates
};

class OrbitProfile {
 public:
  OrbitProfile(Int p, Int q, double horizon, std::vector<CandidateVector> candidates,
               std::vector<OrbitSegment> segments);

  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }
  double horizon() const noexcept { return horizon_; }
  const std::vector<CandidateVector>& candidates() const noexcept { return candidates_; }
  const std::vector<OrbitSegment>& segments() const noexcept { return segments_; }

  /// 0 = t_0 < t_1 < ... < t_m = T.
  std::vector<double> breakpoints() const;

  /// log alpha_1 at t in [0, T]; closed form of the active segment.
  double log_alpha1(double t) const;
  double alpha1(double t) const;

  /// log |v_k(t)| for candidate k, valid for any t.
  double candidate_log_length(std::size_t k, double t) const;

  /// (t, alpha_1) at t = 0, step, 2 step, ... and finally T.
  std::vector<std::pair<double, double>> sample(double step) const;

  /// Lebesgue measure of {t in [t0, t1] : alpha_1(t) > M}, solved exactly per
  /// segment. Appends the pieces to `intervals` when given.
  double time_above(double M, double t0, double t1, std::vector<std::pair<double, double>>* intervals = nullptr) const;

 private:
  std::size_t segment_at(double t) const;

  Int p_;
  Int q_;
  double horizon_;
  std::vector<CandidateVector> candidates_;
  std::vector<OrbitSegment> segments_;
};

/// Candidate family of p/q: (1, 0) seed, (0, 1) seed, then every convergent.
std::vector<CandidateVector> orbit_candidates(Int p, Int q);

OrbitProfile alpha1_profile(const OrbitSpec& spec);

struct ExcursionSummary {
  double M;
  double horizon;
  double fraction_above;  // exact
  std::vector<std::pair<double, double>> intervals;
  double grid;
  double sampled_fraction;  // midpoint rule on the grid, for validation
};

ExcursionSummary excursion_fraction(const OrbitProfile& profile, double M, double grid);
ExcursionSummary excursion_fraction(const OrbitSpec& spec, double M, double grid);

struct DualResidual {
  double M;
  double lhs;  // fraction above M over [0, 2 log q] at p/q
  double rhs;  // half of [0, log q] at p/q plus half of [0, log q] at p'/q
  double residual;
};

/// Checks the dual-orbit splitting of the [0, 2 log q] average, where
/// p p' = -1 (mod q).
std::vector<DualResidual> dual_orbit_identity(Int p, Int q, std::span<const double> thresholds, double grid);

/// Mean over the ensemble of the fraction of [0, 2 log q] spent in
/// {alpha_1 <= M}. Fixed chunking keeps the sum independent of `workers`.
double ensemble_mass(Int q, std::span<const Int> residues, double M, unsigned workers = 1);
double ensemble_mass(const EnsembleSpec& spec, double M, unsigned workers = 1);

/// a_t u_{p/q} as a basis matrix, for reduction-based cross-checks.
template <class Scalar>
lattice::Basis<Scalar> orbit_basis(Int p, Int q, Scalar t) {
  return lattice::diagonal_flow<Scalar>(t) *
         lattice::horocycle<Scalar>(static_cast<Scalar>(p) / static_cast<Scalar>(q));
}

}  // namespace cfstat
