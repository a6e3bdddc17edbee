#pragma once

// Local Riemannian structure at a positive-definite point rho: the linear
// operator sending a Hermitian potential lambda to a tangent direction delta,
// its inversion on the n^2-dimensional real Hermitian space, the induced local
// inner product, the Fisher-Rao tangent cost, and the Bures trace identity.

#include <string>
#include <utility>

#include <Eigen/Dense>

#include "qmot/errors.hpp"
#include "qmot/hermitian.hpp"
#include "qmot/lindblad.hpp"
#include "qmot/matrix_functions.hpp"
#include "qmot/vectorize.hpp"

namespace qmot {

enum class MetricKind {
  WassersteinFisherRao,  // transport + trace(rho r^2) source penalty
  WassersteinFrobenius,  // transport + trace(s^2) source penalty
  Balanced,              // transport only, trace-preserving
};

inline std::string metricKindName(MetricKind k) {
  switch (k) {
    case MetricKind::WassersteinFisherRao: return "wfs";
    case MetricKind::WassersteinFrobenius: return "wf";
    case MetricKind::Balanced: return "balanced";
  }
  return "?";
}

template <typename Scalar = double>
struct MetricMode {
  MetricKind kind = MetricKind::WassersteinFisherRao;
  Scalar alpha = 1;  // source weight; ignored by Balanced

  static MetricMode wfs(Scalar alpha = 1) { return {MetricKind::WassersteinFisherRao, alpha}; }
  static MetricMode wf(Scalar alpha = 1) { return {MetricKind::WassersteinFrobenius, alpha}; }
  static MetricMode balanced() { return {MetricKind::Balanced, Scalar(1)}; }

  void validate() const {
    if (kind != MetricKind::Balanced && !(alpha > Scalar(0)))
      throw Error(ErrorCode::InvalidArgument, "MetricMode: alpha must be positive");
  }
};

/// delta = -1/2 div(rho grad(lambda) + grad(lambda) rho) - source term, where the
/// source term is (1/2a)(rho lambda + lambda rho) for Wasserstein-Fisher-Rao,
/// (1/a) lambda for Wasserstein-Frobenius, and absent in balanced mode.
template <typename Scalar>
Hermitian<Scalar> metricApply(const Hermitian<Scalar>& rho, const Hermitian<Scalar>& lambda,
                              const MetricMode<Scalar>& mode, const LindbladBasis<Scalar>& basis) {
  mode.validate();
  if (rho.dim() != lambda.dim())
    throw Error(ErrorCode::DimensionMismatch, "metricApply: dimension mismatch");
  const SkewStack<Scalar> grad = basis.gradient(lambda);
  const Hermitian<Scalar> transport = basis.divergence(anticommute(rho, grad));
  ComplexMatrix<Scalar> out = Scalar(-0.5) * transport.mat();
  switch (mode.kind) {
    case MetricKind::WassersteinFisherRao:
      out -= (rho.mat() * lambda.mat() + lambda.mat() * rho.mat()) / (Scalar(2) * mode.alpha);
      break;
    case MetricKind::WassersteinFrobenius:
      out -= lambda.mat() / mode.alpha;
      break;
    case MetricKind::Balanced:
      break;
  }
  return Hermitian<Scalar>(out);
}

/// Matrix of metricApply in the orthonormal real Hermitian coordinates.
/// Symmetric; negative definite for WFS/WF, negative semidefinite with kernel
/// span{I} in balanced mode.
template <typename Scalar>
RealMatrix<Scalar> assembleMetricMatrix(const Hermitian<Scalar>& rho, const MetricMode<Scalar>& mode,
                                        const LindbladBasis<Scalar>& basis) {
  const Eigen::Index n = rho.dim();
  const Eigen::Index d = n * n;
  RealMatrix<Scalar> m(d, d);
  RealVector<Scalar> e = RealVector<Scalar>::Zero(d);
  for (Eigen::Index c = 0; c < d; ++c) {
    e(c) = 1;
    const Hermitian<Scalar> basis_elem(detail::AssumeExact{}, vectorToHermitian(e, n));
    m.col(c) = hermitianToVector(metricApply(rho, basis_elem, mode, basis).mat());
    e(c) = 0;
  }
  return m;
}

/// Inverts metricApply: the unique Hermitian lambda with
/// metricApply(rho, lambda) = delta. In balanced mode delta must be traceless
/// (within kHermTolerance) and lambda is gauge-fixed to trace zero.
template <typename Scalar>
Hermitian<Scalar> metricSolve(const Hermitian<Scalar>& rho, const Hermitian<Scalar>& delta,
                              const MetricMode<Scalar>& mode, const LindbladBasis<Scalar>& basis,
                              Scalar floor = kPdFloor<Scalar>) {
  mode.validate();
  if (rho.dim() != delta.dim())
    throw Error(ErrorCode::DimensionMismatch, "metricSolve: dimension mismatch");
  requirePositiveDefinite(rho, floor, "metricSolve");
  const Eigen::Index n = rho.dim();
  RealMatrix<Scalar> neg = -assembleMetricMatrix(rho, mode, basis);  // positive (semi)definite
  RealVector<Scalar> rhs = -hermitianToVector(delta.mat());

  if (mode.kind == MetricKind::Balanced) {
    if (std::abs(delta.trace()) > kHermTolerance<Scalar> * (1 + delta.norm()))
      throw Error(ErrorCode::TraceMismatch,
                  "metricSolve: balanced mode requires a traceless tangent direction");
    // Rank-one shift along the kernel direction vech(I)/sqrt(n); the solve then
    // returns the traceless representative.
    RealVector<Scalar> kernel = hermitianToVector(ComplexMatrix<Scalar>::Identity(n, n).eval());
    kernel /= kernel.norm();
    const Scalar shift = neg.norm() / Scalar(n * n) + Scalar(1);
    neg += shift * (kernel * kernel.transpose());
  }

  Eigen::LDLT<RealMatrix<Scalar>> ldlt(neg);
  if (ldlt.info() != Eigen::Success)
    throw Error(ErrorCode::Internal, "metricSolve: factorization failed");
  const RealVector<Scalar> x = ldlt.solve(rhs);
  Hermitian<Scalar> lambda(detail::AssumeExact{}, vectorToHermitian(x, n));
  if (mode.kind == MetricKind::Balanced) {
    // Remove any residual trace component left by roundoff.
    lambda -= (lambda.trace() / Scalar(n)) * Hermitian<Scalar>::identity(n);
  }
  return lambda;
}

/// Local inner product <delta1, delta2>_rho evaluated through the potentials:
/// 1/2 tr(rho grad(l1)* grad(l2) + rho grad(l2)* grad(l1)) plus the mode's
/// source term, 1/(2a) tr(rho(l1 l2 + l2 l1)) for WFS and (1/a) tr(l1 l2) for WF.
template <typename Scalar>
Scalar localInner(const Hermitian<Scalar>& rho, const Hermitian<Scalar>& delta1,
                  const Hermitian<Scalar>& delta2, const MetricMode<Scalar>& mode,
                  const LindbladBasis<Scalar>& basis, Scalar floor = kPdFloor<Scalar>) {
  const Hermitian<Scalar> l1 = metricSolve(rho, delta1, mode, basis, floor);
  const Hermitian<Scalar> l2 = metricSolve(rho, delta2, mode, basis, floor);
  const SkewStack<Scalar> g1 = basis.gradient(l1);
  const SkewStack<Scalar> g2 = basis.gradient(l2);
  ComplexMatrix<Scalar> acc = ComplexMatrix<Scalar>::Zero(rho.dim(), rho.dim());
  for (int k = 0; k < g1.count(); ++k)
    acc += g1[k].mat().adjoint() * g2[k].mat() + g2[k].mat().adjoint() * g1[k].mat();
  Scalar value = Scalar(0.5) * (rho.mat() * acc).trace().real();
  switch (mode.kind) {
    case MetricKind::WassersteinFisherRao:
      value += (rho.mat() * (l1.mat() * l2.mat() + l2.mat() * l1.mat())).trace().real() /
               (Scalar(2) * mode.alpha);
      break;
    case MetricKind::WassersteinFrobenius:
      value += (l1.mat() * l2.mat()).trace().real() / mode.alpha;
      break;
    case MetricKind::Balanced:
      break;
  }
  return value;
}

/// Pure-source tangent cost: solve rho r + r rho = 2 delta and return trace(rho r^2).
template <typename Scalar>
Scalar fisherRaoTangentCost(const Hermitian<Scalar>& rho, const Hermitian<Scalar>& delta,
                            Scalar floor = kPdFloor<Scalar>) {
  const Hermitian<Scalar> r = sylvesterSolve(rho, Hermitian<Scalar>(Scalar(2) * delta.mat()), floor);
  return (rho.mat() * r.mat() * r.mat()).trace().real();
}

/// Bures identity pair: with rho G + G rho = delta, returns
/// (1/2 trace(G delta), trace(rho G^2)); the two agree analytically.
template <typename Scalar>
std::pair<Scalar, Scalar> buresPair(const Hermitian<Scalar>& rho, const Hermitian<Scalar>& delta,
                                    Scalar floor = kPdFloor<Scalar>) {
  const Hermitian<Scalar> g = sylvesterSolve(rho, delta, floor);
  const Scalar lhs = Scalar(0.5) * (g.mat() * delta.mat()).trace().real();
  const Scalar rhs = (rho.mat() * g.mat() * g.mat()).trace().real();
  return {lhs, rhs};
}

}  // namespace qmot
