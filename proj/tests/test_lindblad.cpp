#include <cmath>

#include "doctest.h"
#include "qmot/lindblad.hpp"
#include "qmot/matrix_functions.hpp"
#include "test_support.hpp"

using namespace qmot;
using namespace qmot::testing;

TEST_CASE("hermitian basis sizes and orthonormality") {
  const auto b1 = LindbladBasis<double>::hermitianBasis(1);
  CHECK(b1.count() == 1);
  CHECK(b1[0](0, 0).real() == doctest::Approx(1.0));

  const auto b2 = LindbladBasis<double>::hermitianBasis(2);
  CHECK(b2.count() == 3);
  for (int j = 0; j < b2.count(); ++j)
    for (int k = 0; k < b2.count(); ++k) {
      // direct Gram-matrix evaluation
      const Cx p = traceAdjointProduct(b2[j].mat(), b2[k].mat());
      CHECK(std::abs(p - Cx(j == k ? 1.0 : 0.0)) < 1e-14);
    }

  const auto b3full = LindbladBasis<double>::hermitianBasis(3, /*full=*/true);
  CHECK(b3full.count() == 9);
  for (int j = 0; j < b3full.count(); ++j)
    for (int k = 0; k < b3full.count(); ++k) {
      const Cx p = traceAdjointProduct(b3full[j].mat(), b3full[k].mat());
      CHECK(std::abs(p - Cx(j == k ? 1.0 : 0.0)) < 1e-14);
    }
}

TEST_CASE("gradient annihilates the identity and its own generators") {
  const auto b = LindbladBasis<double>::hermitianBasis(3);
  const auto gi = b.gradient(Hermitian<double>::identity(3));
  CHECK(gi.norm() == doctest::Approx(0.0));
  const auto gl = b.gradient(b[1]);
  CHECK(gl[1].norm() == doctest::Approx(0.0));
}

TEST_CASE("2x2 commutator oracle") {
  // L = sigma_x, X = sigma_z: [L, X] = [[0,-2],[2,0]]
  Mat sx(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sz << 1, 0, 0, -1;
  const Mat comm = sx * sz - sz * sx;
  CHECK(comm(0, 0) == Cx(0, 0));
  CHECK(comm(0, 1) == Cx(-2, 0));
  CHECK(comm(1, 0) == Cx(2, 0));
  CHECK(comm(1, 1) == Cx(0, 0));
  // and the stack component produced by a basis containing sigma_x/sqrt(2)
  const auto b = LindbladBasis<double>::hermitianBasis(2);
  const auto g = b.gradient(Hermitian<double>(sz));
  CHECK((std::sqrt(2.0) * g[2].mat() - comm).norm() < 1e-14);
}

TEST_CASE("adjointness of gradient and divergence") {
  const auto b = LindbladBasis<double>::hermitianBasis(4);
  auto rng = makeRng(201);
  for (int t = 0; t < 100; ++t) {
    const auto x = randomHermitian(4, rng);
    std::vector<SkewHermitian<double>> blocks;
    for (int k = 0; k < b.count(); ++k) blocks.emplace_back(randomSkewRaw(4, rng));
    const SkewStack<double> y(blocks);
    const Cx lhs = innerProduct(b.gradient(x), y);
    const Cx rhs = innerProduct(x, b.divergence(y));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1 + x.norm() * y.norm()));
  }
}

TEST_CASE("gradient components are skew with tiny pre-symmetrization defect") {
  const auto b = LindbladBasis<double>::hermitianBasis(3);
  auto rng = makeRng(202);
  for (int t = 0; t < 25; ++t) {
    const auto x = randomHermitian(3, rng);
    for (int k = 0; k < b.count(); ++k) {
      const Mat raw = b[k].mat() * x.mat() - x.mat() * b[k].mat();
      CHECK((raw + raw.adjoint()).norm() <= 1e-12 * (1 + raw.norm()));
      const auto g = b.gradient(x);
      CHECK((g[k].mat() + g[k].mat().adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("laplacian equals minus divergence of gradient and is dissipative") {
  auto rng = makeRng(203);
  for (Eigen::Index n : {2, 3, 4}) {
    const auto b = LindbladBasis<double>::hermitianBasis(n);
    CHECK(b.laplacian(Hermitian<double>::identity(n)).norm() < 1e-14);
    for (int t = 0; t < 20; ++t) {
      const auto x = randomHermitian(n, rng);
      const auto lap = b.laplacian(x);
      const auto divgrad = b.divergence(b.gradient(x));
      CHECK((lap.mat() + divgrad.mat()).norm() <= 1e-12 * (1 + lap.norm()));
      CHECK(innerProduct(x, lap).real() <= 1e-12);
    }
  }
}

TEST_CASE("laplacian matches twice the Lindblad diffusion term") {
  auto rng = makeRng(204);
  const auto b = LindbladBasis<double>::hermitianBasis(3);
  for (int t = 0; t < 20; ++t) {
    const auto x = randomHermitian(3, rng);
    Mat diffusion = Mat::Zero(3, 3);
    for (int k = 0; k < b.count(); ++k) {
      const Mat& l = b[k].mat();
      diffusion += l * x.mat() * l.adjoint() - 0.5 * x.mat() * l.adjoint() * l -
                   0.5 * l.adjoint() * l * x.mat();
    }
    CHECK((b.laplacian(x).mat() - 2.0 * diffusion).norm() <= 1e-12 * (1 + diffusion.norm()));
  }
}

TEST_CASE("Leibniz rule for the gradient") {
  const auto b = LindbladBasis<double>::hermitianBasis(3);
  auto rng = makeRng(205);
  for (int t = 0; t < 20; ++t) {
    const auto x = randomHermitian(3, rng);
    const auto y = randomHermitian(3, rng);
    const auto lhs = b.gradient(Hermitian<double>(x.mat() * y.mat() + y.mat() * x.mat()));
    const auto gx = b.gradient(x);
    const auto gy = b.gradient(y);
    for (int k = 0; k < b.count(); ++k) {
      const Mat rhs = gx[k].mat() * y.mat() + x.mat() * gy[k].mat() + gy[k].mat() * x.mat() +
                      y.mat() * gx[k].mat();
      CHECK((lhs[k].mat() - rhs).norm() <= 1e-10 * (1 + rhs.norm()));
    }
  }
}

TEST_CASE("null-space rank is n^2 - 1") {
  for (Eigen::Index n : {1, 2, 3, 4}) {
    const auto b = LindbladBasis<double>::hermitianBasis(n);
    const auto report = b.nullSpaceReport();
    CHECK(report.rank == static_cast<int>(n * n - 1));
    CHECK(report.identityInNull);
  }
  // full option has the same null space
  const auto report = LindbladBasis<double>::hermitianBasis(3, true).nullSpaceReport();
  CHECK(report.rank == 8);
}

TEST_CASE("vanishing gradient forces a multiple of the identity") {
  const auto b = LindbladBasis<double>::hermitianBasis(3);
  auto rng = makeRng(206);
  for (int t = 0; t < 20; ++t) {
    auto x = randomHermitian(3, rng);
    if (b.gradient(x).norm() < 1e-8 * x.norm()) {
      const Mat dev = x.mat() - (x.trace() / 3.0) * Mat::Identity(3, 3);
      CHECK(dev.norm() <= 1e-8 * x.norm());
    }
    // multiples of I do map to zero
    const Hermitian<double> c = 2.5 * Hermitian<double>::identity(3);
    CHECK(b.gradient(c).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("defective generator sets are rejected") {
  // a single generator cannot span the commutator directions for n = 2
  std::vector<Mat> gens;
  Mat sz(2, 2);
  sz << 1, 0, 0, -1;
  gens.push_back(sz);
  CHECK_THROWS_AS(LindbladBasis<double>::fromMatrices(gens), Error);
  // non-Hermitian generator
  Mat bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(LindbladBasis<double>::fromMatrices({bad}), Error);
}

TEST_CASE("custom valid generator set is accepted") {
  // Pauli matrices scaled to orthonormal: full commutator coverage for n=2
  Mat sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << Cx(0, 0), Cx(0, -1), Cx(0, 1), Cx(0, 0);
  sz << 1, 0, 0, -1;
  const double w = 1.0 / std::sqrt(2.0);
  const auto b = LindbladBasis<double>::fromMatrices({w * sx, w * sy, w * sz});
  CHECK(b.count() == 3);
  CHECK(b.nullSpaceReport().rank == 3);
}
