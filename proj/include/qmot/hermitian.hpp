#pragma once

// Dense complex-matrix kernel: Hermitian and skew-Hermitian value types with
// construction-time symmetrization, stacks of them, and the trace inner product.

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qmot/errors.hpp"

namespace qmot {

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Positive-definiteness floor shared by every module.
template <typename Scalar>
inline constexpr Scalar kPdFloor = Scalar(1e-9);

template <typename Derived>
auto hermitianPart(const Eigen::MatrixBase<Derived>& a) {
  using Plain = typename Derived::PlainMatrix;
  return Plain((a + a.adjoint()) / typename Derived::RealScalar(2));
}

template <typename Derived>
auto skewHermitianPart(const Eigen::MatrixBase<Derived>& a) {
  using Plain = typename Derived::PlainMatrix;
  return Plain((a - a.adjoint()) / typename Derived::RealScalar(2));
}

/// trace(X^dagger Y); real whenever both arguments are Hermitian or both skew.
template <typename Scalar>
std::complex<Scalar> innerProduct(const ComplexMatrix<Scalar>& x, const ComplexMatrix<Scalar>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(ErrorCode::DimensionMismatch, "innerProduct: operand shapes differ");
  return x.conjugate().cwiseProduct(y).sum();
}

/// Re trace(X^dagger Y): the real inner product used for gradients.
template <typename Scalar>
Scalar realInner(const ComplexMatrix<Scalar>& x, const ComplexMatrix<Scalar>& y) {
  return innerProduct(x, y).real();
}

namespace detail {
struct AssumeExact {};  // tag: entries already satisfy the symmetry invariant
}  // namespace detail

/// n x n complex matrix with A = A^dagger held exactly.
///
/// Every public constructor symmetrizes through (A + A^dagger)/2, so repeated
/// arithmetic cannot drift the invariant. Affine combinations of Hermitian
/// matrices preserve the invariant bit-exactly and skip re-symmetrization.
template <typename Scalar = double>
class Hermitian {
 public:
  using Complex = std::complex<Scalar>;
  using Dense = ComplexMatrix<Scalar>;

  Hermitian() = default;
  explicit Hermitian(Eigen::Index n) : m_(Dense::Zero(n, n)) {}

  template <typename Derived>
  explicit Hermitian(const Eigen::MatrixBase<Derived>& a) : m_(hermitianPart(a)) {
    if (m_.rows() != m_.cols())
      throw Error(ErrorCode::DimensionMismatch, "Hermitian: matrix must be square");
  }

  static Hermitian identity(Eigen::Index n) { return Hermitian(detail::AssumeExact{}, Dense::Identity(n, n)); }
  static Hermitian zero(Eigen::Index n) { return Hermitian(n); }

  Eigen::Index dim() const { return m_.rows(); }
  const Dense& mat() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  Scalar trace() const { return m_.trace().real(); }
  Scalar norm() const { return m_.norm(); }

  Hermitian& operator+=(const Hermitian& o) { m_ += o.m_; return *this; }
  Hermitian& operator-=(const Hermitian& o) { m_ -= o.m_; return *this; }
  Hermitian& operator*=(Scalar c) { m_ *= Complex(c, 0); return *this; }

  friend Hermitian operator+(Hermitian a, const Hermitian& b) { a += b; return a; }
  friend Hermitian operator-(Hermitian a, const Hermitian& b) { a -= b; return a; }
  friend Hermitian operator*(Scalar c, Hermitian a) { a *= c; return a; }
  friend Hermitian operator*(Hermitian a, Scalar c) { a *= c; return a; }
  friend Hermitian operator-(Hermitian a) { a *= Scalar(-1); return a; }

  Hermitian(detail::AssumeExact, Dense m) : m_(std::move(m)) {}

 private:
  Dense m_;
};

/// n x n complex matrix with A = -A^dagger held exactly.
template <typename Scalar = double>
class SkewHermitian {
 public:
  using Complex = std::complex<Scalar>;
  using Dense = ComplexMatrix<Scalar>;

  SkewHermitian() = default;
  explicit SkewHermitian(Eigen::Index n) : m_(Dense::Zero(n, n)) {}

  template <typename Derived>
  explicit SkewHermitian(const Eigen::MatrixBase<Derived>& a) : m_(skewHermitianPart(a)) {
    if (m_.rows() != m_.cols())
      throw Error(ErrorCode::DimensionMismatch, "SkewHermitian: matrix must be square");
  }

  Eigen::Index dim() const { return m_.rows(); }
  const Dense& mat() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  Scalar norm() const { return m_.norm(); }

  SkewHermitian& operator+=(const SkewHermitian& o) { m_ += o.m_; return *this; }
  SkewHermitian& operator-=(const SkewHermitian& o) { m_ -= o.m_; return *this; }
  SkewHermitian& operator*=(Scalar c) { m_ *= Complex(c, 0); return *this; }

  friend SkewHermitian operator+(SkewHermitian a, const SkewHermitian& b) { a += b; return a; }
  friend SkewHermitian operator-(SkewHermitian a, const SkewHermitian& b) { a -= b; return a; }
  friend SkewHermitian operator*(Scalar c, SkewHermitian a) { a *= c; return a; }

  SkewHermitian(detail::AssumeExact, Dense m) : m_(std::move(m)) {}

 private:
  Dense m_;
};

/// Unconstrained complex matrices (momentum/source variables of the convex forms).
template <typename Scalar>
using GeneralStack = std::vector<ComplexMatrix<Scalar>>;

/// Length-N stack of skew-Hermitian matrices, the codomain of the matricial gradient.
template <typename Scalar = double>
class SkewStack {
 public:
  SkewStack() = default;
  SkewStack(Eigen::Index dim, int count) : blocks_(count, SkewHermitian<Scalar>(dim)) {}
  explicit SkewStack(std::vector<SkewHermitian<Scalar>> blocks) : blocks_(std::move(blocks)) {}

  int count() const { return static_cast<int>(blocks_.size()); }
  Eigen::Index dim() const { return blocks_.empty() ? 0 : blocks_.front().dim(); }
  const SkewHermitian<Scalar>& operator[](int k) const { return blocks_[k]; }
  SkewHermitian<Scalar>& operator[](int k) { return blocks_[k]; }

  Scalar squaredNorm() const {
    Scalar s = 0;
    for (const auto& b : blocks_) s += b.mat().squaredNorm();
    return s;
  }
  Scalar norm() const { return std::sqrt(squaredNorm()); }

  GeneralStack<Scalar> toGeneral() const {
    GeneralStack<Scalar> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(b.mat());
    return out;
  }

 private:
  std::vector<SkewHermitian<Scalar>> blocks_;
};

template <typename Scalar>
std::complex<Scalar> innerProduct(const Hermitian<Scalar>& x, const Hermitian<Scalar>& y) {
  return innerProduct<Scalar>(x.mat(), y.mat());
}

/// Stack inner product: sum_k trace(X_k^dagger Y_k).
template <typename Scalar>
std::complex<Scalar> innerProduct(const SkewStack<Scalar>& x, const SkewStack<Scalar>& y) {
  if (x.count() != y.count())
    throw Error(ErrorCode::DimensionMismatch, "innerProduct: stack lengths differ");
  std::complex<Scalar> s = 0;
  for (int k = 0; k < x.count(); ++k) s += innerProduct<Scalar>(x[k].mat(), y[k].mat());
  return s;
}

template <typename Scalar>
std::complex<Scalar> innerProduct(const SkewStack<Scalar>& x, const GeneralStack<Scalar>& y) {
  if (x.count() != static_cast<int>(y.size()))
    throw Error(ErrorCode::DimensionMismatch, "innerProduct: stack lengths differ");
  std::complex<Scalar> s = 0;
  for (int k = 0; k < x.count(); ++k) s += innerProduct<Scalar>(x[k].mat(), y[k]);
  return s;
}

}  // namespace qmot
