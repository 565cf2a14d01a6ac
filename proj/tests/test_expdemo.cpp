#include <wsym/expdemo.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace wsym::expdemo;

namespace {

RealMatrix random_traceless(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  RealMatrix x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = u(rng);
  x -= (x.trace() / n) * RealMatrix::Identity(n, n);
  return x;
}

}  // namespace

TEST(MatrixExp, Examples) {
  EXPECT_EQ(matrix_exp(RealMatrix::Zero(3, 3)), RealMatrix::Identity(3, 3));
  RealMatrix d = RealMatrix::Zero(3, 3);
  d(0, 0) = 1;
  d(1, 1) = -1;
  RealMatrix e = matrix_exp(d);
  EXPECT_NEAR(e(0, 0), std::exp(1.0), 1e-12);
  EXPECT_NEAR(e(1, 1), std::exp(-1.0), 1e-12);
  EXPECT_NEAR(e(2, 2), 1.0, 1e-12);
  EXPECT_NEAR(e(0, 1), 0.0, 1e-12);
}

TEST(MatrixExp, RotationGenerator) {
  RealMatrix x(2, 2);
  x << 0, -M_PI, M_PI, 0;
  RealMatrix e = matrix_exp(x);
  EXPECT_NEAR(e(0, 0), -1.0, 1e-12);
  EXPECT_NEAR(e(1, 1), -1.0, 1e-12);
  EXPECT_NEAR(e(0, 1), 0.0, 1e-12);
}

TEST(MatrixExp, DeterminantIsExpTrace) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 200; ++t) {
    RealMatrix x(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = u(rng);
    EXPECT_NEAR(matrix_exp(x).determinant(), std::exp(x.trace()), 1e-9 * std::exp(x.trace()));
  }
}

TEST(MatrixExp, InverseResidual) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    RealMatrix x = random_traceless(rng, 3);
    EXPECT_LE((matrix_exp(x) * matrix_exp(-x) - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(MatrixExp, RejectsBadInput) {
  RealMatrix x = RealMatrix::Zero(2, 2);
  x(0, 0) = std::nan("");
  EXPECT_THROW(matrix_exp(x), std::invalid_argument);
  EXPECT_THROW(matrix_exp(RealMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST(ExpImage, Examples) {
  RealMatrix g = RealMatrix::Zero(3, 3);
  g.diagonal() << -2, -0.5, 1;
  EXPECT_EQ(in_exp_image(g, true), ExpImage::no);
  EXPECT_EQ(in_exp_image(RealMatrix::Identity(3, 3), true), ExpImage::unknown);
  RealMatrix pos = RealMatrix::Zero(3, 3);
  pos.diagonal() << 2, 0.25, 2;
  EXPECT_EQ(in_exp_image(pos, true), ExpImage::unknown);
  pos.diagonal() << 2, 0.25, 4;
  EXPECT_THROW(in_exp_image(pos, true), std::invalid_argument);
  EXPECT_EQ(in_exp_image(pos, false), ExpImage::yes);
}

TEST(ExpImage, Errors) {
  EXPECT_THROW(in_exp_image(RealMatrix::Zero(3, 3), false), std::invalid_argument);
  EXPECT_THROW(in_exp_image(RealMatrix::Identity(2, 3), false), std::invalid_argument);
}

TEST(ExpImage, ConstructedExponentialsNeverNo) {
  std::mt19937_64 rng(2024);
  int decided = 0;
  for (int t = 0; t < 1000; ++t) {
    RealMatrix g = matrix_exp(random_traceless(rng, 3));
    const ExpImage v = in_exp_image(g, true);
    EXPECT_NE(v, ExpImage::no);
    if (v == ExpImage::yes) ++decided;
  }
  EXPECT_GT(decided, 900);
}
