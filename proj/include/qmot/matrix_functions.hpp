#pragma once

// Eigendecomposition-based matrix functions. One primitive (the self-adjoint
// eigensolver) backs log, exp, spectral maps, and the Sylvester solve; target
// dimensions are small enough that O(n^3) per call is irrelevant.

#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Dense>

#include "qmot/errors.hpp"
#include "qmot/hermitian.hpp"

namespace qmot {

template <typename Scalar>
struct EigDecomposition {
  RealVector<Scalar> eigenvalues;    // ascending
  ComplexMatrix<Scalar> eigenvectors;
};

template <typename Scalar>
EigDecomposition<Scalar> eigSelfAdjoint(const Hermitian<Scalar>& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> es(h.mat());
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::Internal, "eigSelfAdjoint: eigensolver failed to converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

template <typename Scalar>
Scalar minEigenvalue(const Hermitian<Scalar>& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> es(h.mat(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// True iff the smallest eigenvalue exceeds `floor`.
template <typename Scalar>
bool isPositiveDefinite(const Hermitian<Scalar>& h, Scalar floor = kPdFloor<Scalar>) {
  return minEigenvalue(h) > floor;
}

template <typename Scalar>
void requirePositiveDefinite(const Hermitian<Scalar>& h, Scalar floor, const char* who) {
  const Scalar lo = minEigenvalue(h);
  if (!(lo > floor)) {
    std::ostringstream msg;
    msg << who << ": matrix is not positive definite above the floor " << floor
        << " (smallest eigenvalue " << lo << ")";
    throw Error(ErrorCode::NotPositiveDefinite, msg.str());
  }
}

/// U f(diag) U^dagger for a real spectral map f.
template <typename Scalar, typename F>
Hermitian<Scalar> spectralMap(const Hermitian<Scalar>& h, F&& f) {
  auto eig = eigSelfAdjoint(h);
  RealVector<Scalar> mapped = eig.eigenvalues.unaryExpr([&](Scalar x) { return Scalar(f(x)); });
  ComplexMatrix<Scalar> m = eig.eigenvectors *
                            mapped.template cast<std::complex<Scalar>>().asDiagonal() *
                            eig.eigenvectors.adjoint();
  return Hermitian<Scalar>(m);
}

template <typename Scalar>
Hermitian<Scalar> matrixLog(const Hermitian<Scalar>& h, Scalar floor = kPdFloor<Scalar>) {
  requirePositiveDefinite(h, floor, "matrixLog");
  return spectralMap(h, [](Scalar x) { return std::log(x); });
}

template <typename Scalar>
Hermitian<Scalar> matrixExp(const Hermitian<Scalar>& h) {
  return spectralMap(h, [](Scalar x) { return std::exp(x); });
}

template <typename Scalar>
Hermitian<Scalar> matrixInverse(const Hermitian<Scalar>& h, Scalar floor = kPdFloor<Scalar>) {
  requirePositiveDefinite(h, floor, "matrixInverse");
  return spectralMap(h, [](Scalar x) { return Scalar(1) / x; });
}

/// Unique Hermitian G with rho G + G rho = delta, computed in rho's eigenbasis
/// as G~_jk = delta~_jk / (lambda_j + lambda_k). Requires rho positive definite
/// so the denominators cannot vanish.
template <typename Scalar>
Hermitian<Scalar> sylvesterSolve(const Hermitian<Scalar>& rho, const Hermitian<Scalar>& delta,
                                 Scalar floor = kPdFloor<Scalar>) {
  if (rho.dim() != delta.dim())
    throw Error(ErrorCode::DimensionMismatch, "sylvesterSolve: operand dimensions differ");
  requirePositiveDefinite(rho, floor, "sylvesterSolve");
  auto eig = eigSelfAdjoint(rho);
  ComplexMatrix<Scalar> d = eig.eigenvectors.adjoint() * delta.mat() * eig.eigenvectors;
  for (Eigen::Index j = 0; j < d.rows(); ++j)
    for (Eigen::Index k = 0; k < d.cols(); ++k)
      d(j, k) /= eig.eigenvalues(j) + eig.eigenvalues(k);
  return Hermitian<Scalar>(eig.eigenvectors * d * eig.eigenvectors.adjoint());
}

}  // namespace qmot
