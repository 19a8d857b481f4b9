#pragma once

// Planar lattices as 2x2 bases (columns are basis vectors) and
// Lagrange–Gauss reduction. Templated on the scalar so the same code runs
// in double for Monte Carlo work and in long double for validation.

#include <cmath>

#include <Eigen/Dense>

namespace cfstat::lattice {

template <class Scalar>
using Basis = Eigen::Matrix<Scalar, 2, 2>;

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, 2, 1>;

/// a_t = diag(e^{t/2}, e^{-t/2}).
template <class Scalar>
Basis<Scalar> diagonal_flow(Scalar t) {
  using std::exp;
  Basis<Scalar> a;
  a << exp(t / 2), Scalar(0), Scalar(0), exp(-t / 2);
  return a;
}

/// u_s = [[1, s], [0, 1]].
template <class Scalar>
Basis<Scalar> horocycle(Scalar s) {
  Basis<Scalar> u;
  u << Scalar(1), s, Scalar(0), Scalar(1);
  return u;
}

/// Basis of the dual lattice, B^{-T}.
template <class Scalar>
Basis<Scalar> dual_basis(const Basis<Scalar>& b) {
  return b.inverse().transpose();
}

/// Returns a basis (v1, v2) with |v1| <= |v2| and |<v1, v2>| <= |v1|^2 / 2;
/// v1 is then a shortest nonzero vector.
template <class Scalar>
Basis<Scalar> lagrange_gauss_reduce(Basis<Scalar> b) {
  using std::round;
  for (int iter = 0; iter < 10000; ++iter) {
    if (b.col(0).squaredNorm() > b.col(1).squaredNorm()) b.col(0).swap(b.col(1));
    const Scalar mu = round(b.col(0).dot(b.col(1)) / b.col(0).squaredNorm());
    if (mu == Scalar(0)) break;
    b.col(1) -= mu * b.col(0);
  }
  if (b.col(0).squaredNorm() > b.col(1).squaredNorm()) b.col(0).swap(b.col(1));
  return b;
}

template <class Scalar>
Scalar shortest_length(const Basis<Scalar>& b) {
  return lagrange_gauss_reduce(b).col(0).norm();
}

/// alpha_1 = 1 / (length of a shortest nonzero vector).
template <class Scalar>
Scalar alpha1(const Basis<Scalar>& b) {
  return Scalar(1) / shortest_length(b);
}

}  // namespace cfstat::lattice
