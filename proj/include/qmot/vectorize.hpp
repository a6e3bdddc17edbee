#pragma once

// Orthonormal real coordinates for the Hermitian and skew-Hermitian subspaces,
// isometric with respect to the trace inner product. Both spaces have real
// dimension n^2. Used to pose operator equations as dense real linear systems.

#include <Eigen/Dense>

#include "qmot/hermitian.hpp"

namespace qmot {

template <typename Scalar>
Eigen::Index hermitianCoordCount(Eigen::Index n) {
  return n * n;
}

/// Coordinates: diagonal entries, then for each j<k the pair
/// (sqrt(2) Re a_jk, sqrt(2) Im a_jk).
template <typename Scalar>
RealVector<Scalar> hermitianToVector(const ComplexMatrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  const Scalar r2 = std::sqrt(Scalar(2));
  RealVector<Scalar> v(n * n);
  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < n; ++j) v(p++) = a(j, j).real();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      v(p++) = r2 * a(j, k).real();
      v(p++) = r2 * a(j, k).imag();
    }
  return v;
}

template <typename Scalar>
ComplexMatrix<Scalar> vectorToHermitian(const RealVector<Scalar>& v, Eigen::Index n) {
  const Scalar inv_r2 = Scalar(1) / std::sqrt(Scalar(2));
  ComplexMatrix<Scalar> a = ComplexMatrix<Scalar>::Zero(n, n);
  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < n; ++j) a(j, j) = v(p++);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const Scalar re = v(p++) * inv_r2;
      const Scalar im = v(p++) * inv_r2;
      a(j, k) = std::complex<Scalar>(re, im);
      a(k, j) = std::complex<Scalar>(re, -im);
    }
  return a;
}

/// Coordinates: imaginary diagonal parts, then (sqrt(2) Re a_jk, sqrt(2) Im a_jk) for j<k.
template <typename Scalar>
RealVector<Scalar> skewToVector(const ComplexMatrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  const Scalar r2 = std::sqrt(Scalar(2));
  RealVector<Scalar> v(n * n);
  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < n; ++j) v(p++) = a(j, j).imag();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      v(p++) = r2 * a(j, k).real();
      v(p++) = r2 * a(j, k).imag();
    }
  return v;
}

template <typename Scalar>
ComplexMatrix<Scalar> vectorToSkew(const RealVector<Scalar>& v, Eigen::Index n) {
  const Scalar inv_r2 = Scalar(1) / std::sqrt(Scalar(2));
  ComplexMatrix<Scalar> a = ComplexMatrix<Scalar>::Zero(n, n);
  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < n; ++j) a(j, j) = std::complex<Scalar>(0, v(p++));
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const Scalar re = v(p++) * inv_r2;
      const Scalar im = v(p++) * inv_r2;
      a(j, k) = std::complex<Scalar>(re, im);
      a(k, j) = std::complex<Scalar>(-re, im);
    }
  return a;
}

}  // namespace qmot
