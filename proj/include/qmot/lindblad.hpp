#pragma once

// Matricial differential operators built from a tuple of Hermitian matrices
// (L_1,...,L_N): the gradient X -> [L_k X - X L_k]_k, its adjoint divergence
// Y -> sum_k (L_k Y_k - Y_k L_k), and the induced Laplacian, which coincides
// with the diffusion term of the Lindblad master equation for Hermitian L_k.

#include <sstream>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qmot/errors.hpp"
#include "qmot/hermitian.hpp"
#include "qmot/vectorize.hpp"

namespace qmot {

struct NullSpaceReport {
  int rank = 0;
  bool identityInNull = false;  // rank == n^2 - 1, i.e. null space is exactly span{I}
};

/// Relative singular-value cutoff for the numerical rank of the gradient operator.
template <typename Scalar>
inline constexpr Scalar kRankThreshold = Scalar(1e-8);

/// Hermitianity tolerance for matrices accepted from files.
template <typename Scalar>
inline constexpr Scalar kHermTolerance = Scalar(1e-9);

/// The operator tuple. Construction verifies that every generator is Hermitian
/// and that the induced gradient annihilates exactly the span of the identity;
/// bases failing the rank condition are rejected.
template <typename Scalar = double>
class LindbladBasis {
 public:
  /// Standard orthonormal basis of real-symmetric type generators
  /// {e_j e_j^T} u {(e_j e_k^T + e_k e_j^T)/sqrt(2)}, N = n(n+1)/2.
  /// With `full` set, the antisymmetric-type generators
  /// {(i e_j e_k^T - i e_k e_j^T)/sqrt(2)} are appended, giving N = n^2.
  static LindbladBasis hermitianBasis(Eigen::Index n, bool full = false) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "hermitianBasis: n must be >= 1");
    const Scalar inv_r2 = Scalar(1) / std::sqrt(Scalar(2));
    std::vector<Hermitian<Scalar>> ls;
    ComplexMatrix<Scalar> m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      m.setZero();
      m(j, j) = Scalar(1);
      ls.emplace_back(detail::AssumeExact{}, m);
    }
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = j + 1; k < n; ++k) {
        m.setZero();
        m(j, k) = inv_r2;
        m(k, j) = inv_r2;
        ls.emplace_back(detail::AssumeExact{}, m);
      }
    if (full) {
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) {
          m.setZero();
          m(j, k) = std::complex<Scalar>(0, inv_r2);
          m(k, j) = std::complex<Scalar>(0, -inv_r2);
          ls.emplace_back(detail::AssumeExact{}, m);
        }
    }
    return LindbladBasis(std::move(ls));
  }

  /// Custom generators, e.g. loaded from a basis file. Symmetry defects up to
  /// kHermTolerance are repaired by exact symmetrization; larger ones are errors.
  static LindbladBasis fromMatrices(const std::vector<ComplexMatrix<Scalar>>& raw) {
    if (raw.empty()) throw Error(ErrorCode::InvalidArgument, "LindbladBasis: empty generator list");
    std::vector<Hermitian<Scalar>> ls;
    ls.reserve(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
      const auto& a = raw[k];
      if (a.rows() != a.cols() || a.rows() != raw.front().rows())
        throw Error(ErrorCode::DimensionMismatch, "LindbladBasis: generators must be square and equally sized");
      const Scalar defect = (a - a.adjoint()).template lpNorm<Eigen::Infinity>();
      if (defect > kHermTolerance<Scalar>) {
        std::ostringstream msg;
        msg << "LindbladBasis: generator " << k << " has Hermitian defect " << defect;
        throw Error(ErrorCode::NotHermitian, msg.str());
      }
      ls.emplace_back(a);
    }
    return LindbladBasis(std::move(ls));
  }

  Eigen::Index dim() const { return n_; }
  int count() const { return static_cast<int>(ls_.size()); }
  const Hermitian<Scalar>& operator[](int k) const { return ls_[k]; }
  const std::vector<Hermitian<Scalar>>& matrices() const { return ls_; }

  /// Gradient: stack of commutators [L_k, X]; skew-Hermitian for Hermitian X.
  SkewStack<Scalar> gradient(const Hermitian<Scalar>& x) const {
    requireDim(x.dim(), "gradient");
    std::vector<SkewHermitian<Scalar>> out;
    out.reserve(ls_.size());
    for (const auto& l : ls_)
      out.emplace_back(SkewHermitian<Scalar>(l.mat() * x.mat() - x.mat() * l.mat()));
    return SkewStack<Scalar>(std::move(out));
  }

  /// Divergence (the gradient's adjoint): sum_k (L_k Y_k - Y_k L_k).
  /// Hermitian-valued on skew stacks.
  Hermitian<Scalar> divergence(const SkewStack<Scalar>& y) const {
    requireCount(y.count(), "divergence");
    if (y.count() > 0) requireDim(y.dim(), "divergence");
    ComplexMatrix<Scalar> acc = ComplexMatrix<Scalar>::Zero(n_, n_);
    for (int k = 0; k < y.count(); ++k)
      acc += ls_[k].mat() * y[k].mat() - y[k].mat() * ls_[k].mat();
    return Hermitian<Scalar>(acc);
  }

  ComplexMatrix<Scalar> divergence(const GeneralStack<Scalar>& y) const {
    requireCount(static_cast<int>(y.size()), "divergence");
    ComplexMatrix<Scalar> acc = ComplexMatrix<Scalar>::Zero(n_, n_);
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (y[k].rows() != n_ || y[k].cols() != n_)
        throw Error(ErrorCode::DimensionMismatch, "divergence: stack block dimension mismatch");
      acc += ls_[k].mat() * y[k] - y[k] * ls_[k].mat();
    }
    return acc;
  }

  /// Laplacian: sum_k (2 L_k X L_k - X L_k L_k - L_k L_k X) = -divergence(gradient(X)).
  Hermitian<Scalar> laplacian(const Hermitian<Scalar>& x) const {
    requireDim(x.dim(), "laplacian");
    ComplexMatrix<Scalar> acc = ComplexMatrix<Scalar>::Zero(n_, n_);
    for (const auto& l : ls_) {
      const ComplexMatrix<Scalar> lx = l.mat() * x.mat();
      acc += Scalar(2) * (lx * l.mat()) - x.mat() * (l.mat() * l.mat()) - l.mat() * lx;
    }
    return Hermitian<Scalar>(acc);
  }

  /// Numerical rank of the gradient as a real-linear operator on the
  /// n^2-dimensional real space of Hermitian matrices, with singular values
  /// below kRankThreshold relative to the largest treated as zero.
  NullSpaceReport nullSpaceReport() const {
    const Eigen::Index cols = n_ * n_;
    const Eigen::Index rows = static_cast<Eigen::Index>(ls_.size()) * n_ * n_;
    RealMatrix<Scalar> op(rows, cols);
    RealVector<Scalar> e = RealVector<Scalar>::Zero(cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
      e(c) = 1;
      const Hermitian<Scalar> x(detail::AssumeExact{}, vectorToHermitian(e, n_));
      const SkewStack<Scalar> g = gradient(x);
      for (int k = 0; k < g.count(); ++k)
        op.block(k * n_ * n_, c, n_ * n_, 1) = skewToVector(g[k].mat());
      e(c) = 0;
    }
    Eigen::JacobiSVD<RealMatrix<Scalar>> svd(op);
    const auto& sv = svd.singularValues();
    NullSpaceReport report;
    if (sv.size() > 0 && sv(0) > Scalar(0)) {
      const Scalar cut = kRankThreshold<Scalar> * sv(0);
      for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++report.rank;
    }
    report.identityInNull = (report.rank == static_cast<int>(n_ * n_ - 1));
    return report;
  }

 private:
  explicit LindbladBasis(std::vector<Hermitian<Scalar>> ls) : ls_(std::move(ls)), n_(ls_.front().dim()) {
    const NullSpaceReport report = nullSpaceReport();
    if (!report.identityInNull) {
      std::ostringstream msg;
      msg << "LindbladBasis: gradient rank " << report.rank << " != n^2-1 = " << (n_ * n_ - 1)
          << "; null space must be exactly span{I}";
      throw Error(ErrorCode::InvalidArgument, msg.str());
    }
  }

  void requireDim(Eigen::Index d, const char* who) const {
    if (d != n_) {
      std::ostringstream msg;
      msg << who << ": argument dimension " << d << " != basis dimension " << n_;
      throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
  }
  void requireCount(int c, const char* who) const {
    if (c != count()) {
      std::ostringstream msg;
      msg << who << ": stack length " << c << " != basis count " << count();
      throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
  }

  std::vector<Hermitian<Scalar>> ls_;
  Eigen::Index n_;
};

/// rho * stack and stack * rho in the block-column sense.
template <typename Scalar>
GeneralStack<Scalar> leftMultiply(const ComplexMatrix<Scalar>& a, const SkewStack<Scalar>& y) {
  GeneralStack<Scalar> out;
  out.reserve(y.count());
  for (int k = 0; k < y.count(); ++k) out.push_back(a * y[k].mat());
  return out;
}

/// Symmetrized product rho Y_k + Y_k rho, skew-Hermitian for Hermitian rho and skew Y.
template <typename Scalar>
SkewStack<Scalar> anticommute(const Hermitian<Scalar>& rho, const SkewStack<Scalar>& y) {
  std::vector<SkewHermitian<Scalar>> out;
  out.reserve(y.count());
  for (int k = 0; k < y.count(); ++k)
    out.emplace_back(SkewHermitian<Scalar>(rho.mat() * y[k].mat() + y[k].mat() * rho.mat()));
  return SkewStack<Scalar>(std::move(out));
}

}  // namespace qmot
