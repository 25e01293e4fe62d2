#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lacunary/su2_rep.hpp"

using namespace lacunary;

namespace {

Mat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  double v[4], s = 0;
  for (double& x : v) {
    x = n(rng);
    s += x * x;
  }
  s = std::sqrt(s);
  const Complex a(v[0] / s, v[1] / s), b(v[2] / s, v[3] / s);
  Mat2 g;
  g << a, b, -std::conj(b), std::conj(a);
  return g;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

// Coefficient extraction by discrete Fourier averaging over M points of the
// unit circle, independent of the exact polynomial route.
CMatrix contour_oracle(int two_ell, const Mat2& g) {
  const int size = two_ell + 1;
  const Complex a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  const int points = 4 * (two_ell + 1);
  CMatrix out(size, size);
  for (int r = 0; r < size; ++r) {
    for (int col = 0; col < size; ++col) {
      const int l_minus_m = two_ell - r, l_plus_m = r;
      const int l_minus_n = two_ell - col, l_plus_n = col;
      Complex acc(0.0, 0.0);
      for (int j = 0; j < points; ++j) {
        const Complex z = std::polar(1.0, 2 * std::numbers::pi * j / points);
        acc += std::pow(a * z + c, l_minus_n) * std::pow(b * z + d, l_plus_n) *
               std::pow(z, -l_minus_m);
      }
      acc /= static_cast<double>(points);
      const double scale = std::sqrt(factorial(l_minus_m) * factorial(l_plus_m) /
                                     (factorial(l_minus_n) * factorial(l_plus_n)));
      out(r, col) = scale * acc;
    }
  }
  return out;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Su2Rep, TauHalfIsG1) {
  const RepMatrix t = tau_matrix(1);
  EXPECT_LE(max_abs(t.entries - CMatrix(g_matrix(1.0))), 1e-14);
}

TEST(Su2Rep, TauOneHandValues) {
  const double s = 1 / std::sqrt(2.0);
  CMatrix want(3, 3);
  want << -0.5, -s, -0.5, -s, 0, s, -0.5, s, -0.5;
  EXPECT_LE(max_abs(tau_matrix(2).entries - want), 1e-15);
  EXPECT_EQ(tau_matrix(2).at(0, 0), Complex(0.0, 0.0));
}

TEST(Su2Rep, TauAgainstContourOracle) {
  for (int two_ell = 1; two_ell <= 12; ++two_ell) {
    const CMatrix oracle = contour_oracle(two_ell, g_matrix(1.0));
    EXPECT_LE(max_abs(tau_matrix(two_ell).entries - oracle), 1e-11) << two_ell;
  }
}

TEST(Su2Rep, UnitarityAndPhase) {
  for (int two_ell = 1; two_ell <= 16; ++two_ell) {
    const CMatrix t = tau_matrix(two_ell).entries;
    EXPECT_LE(unitarity_residual(t), 1e-12) << two_ell;
    EXPECT_NEAR(std::abs(t.determinant()), 1.0, 1e-10);
    if (two_ell % 2 == 0)
      EXPECT_LE(t.imag().cwiseAbs().maxCoeff(), 1e-14);
    else
      EXPECT_LE(t.real().cwiseAbs().maxCoeff(), 1e-14);
  }
  EXPECT_THROW(tau_matrix(0), InvalidArgument);
  EXPECT_THROW(tau_matrix(-3), InvalidArgument);
}

TEST(Su2Rep, RepMatrixBasics) {
  for (int two_ell = 1; two_ell <= 8; ++two_ell) {
    EXPECT_LE(max_abs(rep_matrix(two_ell, Mat2::Identity()).entries -
                      CMatrix::Identity(two_ell + 1, two_ell + 1)),
              1e-15);
    EXPECT_LE(max_abs(rep_matrix(two_ell, g_matrix(1.0)).entries - tau_matrix(two_ell).entries),
              1e-13);
  }
  Mat2 bad = Mat2::Identity();
  bad(0, 1) = 0.1;
  EXPECT_THROW(rep_matrix(2, bad), InvalidArgument);
}

TEST(Su2Rep, RandomAgainstContourOracle) {
  std::mt19937_64 rng(3);
  for (int two_ell = 1; two_ell <= 6; ++two_ell)
    for (int t = 0; t < 5; ++t) {
      const Mat2 g = random_su2(rng);
      EXPECT_LE(max_abs(rep_matrix(two_ell, g).entries - contour_oracle(two_ell, g)), 1e-11);
    }
}

TEST(Su2Rep, Homomorphism) {
  std::mt19937_64 rng(4);
  for (int two_ell = 1; two_ell <= 8; ++two_ell)
    for (int t = 0; t < 100; ++t) {
      const Mat2 g = random_su2(rng), h = random_su2(rng);
      const CMatrix lhs = rep_matrix(two_ell, g).entries * rep_matrix(two_ell, h).entries;
      ASSERT_LE(max_abs(lhs - rep_matrix(two_ell, g * h).entries), 1e-9);
    }
}

TEST(Su2Rep, RepOfGOmega) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
  for (int two_ell = 1; two_ell <= 8; ++two_ell) {
    EXPECT_LE(max_abs(rep_of_g_omega(two_ell, 1.0).entries - tau_matrix(two_ell).entries), 1e-15);
    for (int t = 0; t < 20; ++t) {
      const Complex w = std::polar(1.0, u(rng));
      EXPECT_LE(max_abs(rep_of_g_omega(two_ell, w).entries -
                        rep_matrix(two_ell, g_matrix(w)).entries),
                1e-9);
      if (two_ell % 2 == 0)
        EXPECT_LE(max_abs(rep_of_g_omega(two_ell, w).entries -
                          rep_of_g_omega(two_ell, -w).entries),
                  1e-12);
    }
    if (two_ell % 2 == 0)
      EXPECT_LE(max_abs(rep_of_g_omega(two_ell, -1.0).entries - tau_matrix(two_ell).entries),
                1e-12);
  }
  EXPECT_THROW(rep_of_g_omega(2, Complex(1.1, 0)), InvalidArgument);
}

TEST(Su2Rep, SymmetricPowerIsMultiplicativeOnGl2) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> n;
  auto rnd = [&] {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = Complex(n(rng), n(rng));
    return m;
  };
  for (int two_ell = 1; two_ell <= 6; ++two_ell) {
    const Mat2 a = rnd(), b = rnd();
    const CMatrix lhs = symmetric_power(two_ell, a).entries * symmetric_power(two_ell, b).entries;
    const CMatrix rhs = symmetric_power(two_ell, a * b).entries;
    EXPECT_LE(max_abs(lhs - rhs), 1e-9 * (1 + max_abs(rhs)));
  }
}

TEST(Su2Rep, KernelAndCornerBounds) {
  const auto half = verify_propositions(1);
  EXPECT_NEAR(half.abs_tau_low_corner, std::sqrt(0.5), 1e-15);
  EXPECT_FALSE(half.abs_tau_center.has_value());
  const auto one = verify_propositions(2);
  ASSERT_TRUE(one.abs_tau_center.has_value());
  EXPECT_NEAR(*one.abs_tau_center, 0.0, 1e-15);
  for (int two_ell = 1; two_ell <= 16; ++two_ell) {
    const auto r = verify_propositions(two_ell);
    EXPECT_TRUE(r.passes()) << two_ell;
    EXPECT_GE(r.tau_min_singular_value, 1 - 1e-9);
    EXPECT_LE(r.abs_tau_low_corner, 1 - 1e-6);
    EXPECT_LE(r.abs_tau_high_corner, 1 - 1e-6);
    for (const auto& p : r.patterns) {
      EXPECT_GT(p.min_singular_value, 1e-8) << p.label;
      EXPECT_GE(p.rows.size(), p.columns.size()) << p.label;
    }
  }
}

TEST(Su2Rep, PerturbedTauFailsKernelBounds) {
  RepMatrix t = tau_matrix(4);
  t.entries(0, 0) += 1e-3;
  EXPECT_GT(unitarity_residual(t.entries), 1e-4);
  EXPECT_FALSE(verify_propositions(t).passes());
}
