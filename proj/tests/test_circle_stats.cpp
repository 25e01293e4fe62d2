#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lacunary/circle_stats.hpp"

using namespace lacunary;

namespace {

Complex direct_eval(const std::vector<std::int8_t>& c, std::size_t j, std::size_t n) {
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((i * j) % n) /
                         static_cast<double>(n);
    s += static_cast<double>(c[i]) * Complex(std::cos(angle), std::sin(angle));
  }
  return s;
}

}  // namespace

TEST(CircleStats, SmallEvaluation) {
  const auto g = eval_at_roots(generate(1), 2);
  EXPECT_NEAR(std::abs(g.values[0] - Complex(2, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g.values[1]), 0.0, 1e-15);
}

TEST(CircleStats, MatchesDirectSum) {
  const auto pair = generate(6);
  for (Which w : {Which::kP, Which::kQ}) {
    const auto g = eval_at_roots(pair, 256, w);
    const auto& c = w == Which::kP ? pair.p : pair.q;
    for (std::size_t j = 0; j < 256; ++j)
      ASSERT_NEAR(std::abs(g.values[j] - direct_eval(c, j, 256)), 0.0, 1e-11) << j;
  }
}

TEST(CircleStats, ValueAtOne) {
  for (unsigned k = 1; k <= 10; ++k) {
    const auto g = eval_at_roots(generate(k), std::size_t{1} << k);
    EXPECT_NEAR(g.values[0].real(), std::ldexp(1.0, static_cast<int>((k + 1) / 2)), 1e-9);
  }
}

TEST(CircleStats, GridIdentities) {
  for (unsigned k : {3U, 9U, 14U}) {
    const std::size_t n = std::size_t{1} << (k + 2);
    const auto pair = generate(k);
    const auto p = eval_at_roots(pair, n, Which::kP);
    const auto q = eval_at_roots(pair, n, Which::kQ);
    const double bound = std::sqrt(std::ldexp(1.0, static_cast<int>(k + 1)));
    double energy = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double a = std::norm(p.values[j]), b = std::norm(q.values[j]);
      energy += a;
      ASSERT_LE(std::sqrt(a), bound * (1 + 1e-6));
      ASSERT_NEAR((a + b) / std::ldexp(1.0, static_cast<int>(k + 1)), 1.0, 1e-8);
    }
    EXPECT_NEAR(energy / static_cast<double>(n) / std::ldexp(1.0, static_cast<int>(k)), 1.0, 1e-10);
  }
}

TEST(CircleStats, OddKVanishAtMinusOne) {
  for (unsigned k = 1; k <= 11; k += 2) {
    const std::size_t n = std::size_t{1} << k;
    const auto g = eval_at_roots(generate(k), n);
    EXPECT_LT(std::abs(g.values[n / 2]), 1e-9) << k;
  }
}

TEST(CircleStats, InvalidGrid) {
  const auto pair = generate(5);
  EXPECT_THROW(eval_at_roots(pair, 16), InvalidArgument);
  EXPECT_THROW(eval_at_roots(pair, 48), InvalidArgument);
  EXPECT_THROW(eval_at_roots(pair, std::size_t{1} << 23), InvalidArgument);
  EXPECT_THROW(saffari_report(3, 64, 1), InvalidArgument);
  EXPECT_THROW(montgomery_report(3, 64, 1), InvalidArgument);
}

TEST(CircleStats, KsOracle) {
  EXPECT_DOUBLE_EQ(ks_uniform({0.5}), 0.5);
  EXPECT_DOUBLE_EQ(ks_uniform({0.2, 0.1}), 0.8);
  EXPECT_NEAR(ks_uniform({0.25, 0.75}), 0.25, 1e-15);
}

TEST(CircleStats, DiscRectArea) {
  EXPECT_NEAR(disc_rect_area(-1, 1, -1, 1), std::numbers::pi, 1e-12);
  EXPECT_NEAR(disc_rect_area(0, 1, 0, 1), std::numbers::pi / 4, 1e-12);
  EXPECT_NEAR(disc_rect_area(-0.5, 0.5, -0.5, 0.5), 1.0, 1e-12);
  EXPECT_NEAR(disc_rect_area(0.9, 1, 0.9, 1), 0.0, 1e-12);
  // Midpoint-rule oracle on a boundary cell.
  const double x0 = 0.25, x1 = 0.75, y0 = 0.5, y1 = 1.0;
  const int m = 2000;
  double count = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double x = x0 + (x1 - x0) * (i + 0.5) / m, y = y0 + (y1 - y0) * (j + 0.5) / m;
      if (x * x + y * y <= 1) count += 1;
    }
  EXPECT_NEAR(disc_rect_area(x0, x1, y0, y1), count / (m * double(m)) * (x1 - x0) * (y1 - y0), 2e-5);
}

TEST(CircleStats, SaffariReport) {
  const auto r0 = saffari_report(0, 8, 10);
  EXPECT_NEAR(r0.ks_statistic, 0.5, 1e-12);
  const std::size_t n = std::size_t{1} << 20;
  const auto r8 = saffari_report(8, n, 16);
  const auto r16 = saffari_report(16, n, 16);
  EXPECT_LT(r16.ks_statistic, r8.ks_statistic);
  double total = 0;
  for (const auto& b : r16.bins) {
    total += b.mass;
    EXPECT_NEAR(b.mass, 1.0 / 16, 0.05);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  const auto again = saffari_report(16, n, 16);
  EXPECT_EQ(again.ks_statistic, r16.ks_statistic);
}

TEST(CircleStats, MontgomeryReport) {
  const auto r0 = montgomery_report(0, 4, 4);
  int occupied = 0;
  for (double f : r0.cell_frequency)
    if (f > 0) {
      ++occupied;
      EXPECT_DOUBLE_EQ(f, 1.0);
    }
  EXPECT_EQ(occupied, 1);

  const std::size_t n = std::size_t{1} << 20;
  const auto r8 = montgomery_report(8, n, 8);
  const auto r16 = montgomery_report(16, n, 8);
  EXPECT_LT(r16.max_cell_deviation, r8.max_cell_deviation);
  EXPECT_NEAR(r16.in_disc_frequency, 1.0, 1e-12);
  double total = 0, expected = 0;
  for (std::size_t i = 0; i < r16.cell_frequency.size(); ++i) {
    total += r16.cell_frequency[i];
    expected += r16.cell_expected[i];
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(expected, 1.0, 1e-12);
  // Real coefficients: values at conjugate points are conjugate.
  const std::size_t g = r16.grid_size;
  for (std::size_t iy = 0; iy < g; ++iy)
    for (std::size_t ix = 0; ix < g; ++ix)
      EXPECT_NEAR(r16.cell_frequency[iy * g + ix], r16.cell_frequency[(g - 1 - iy) * g + ix],
                  4.0 / static_cast<double>(n));
}

TEST(CircleStats, MinModulus) {
  EXPECT_NEAR(min_modulus_report(0, 8).value, std::sqrt(0.5), 1e-15);
  for (unsigned k = 1; k <= 11; k += 2) EXPECT_LE(min_modulus_report(k, std::size_t{1} << 14).value, 1e-10);
  for (unsigned k : {8U, 10U, 12U}) EXPECT_LT(min_modulus_report(k, std::size_t{1} << 20).value, 0.05);
}

TEST(CircleStats, LinkIdentity) {
  for (unsigned k = 0; k <= 12; ++k) {
    const auto c = link_check(k, 1000, 100 + k);
    EXPECT_LE(c.max_residual, 1e-10) << k;
    EXPECT_LE(c.max_norm_defect, 1e-12) << k;
    // The form with z^{+(2^{k+1}-1)} and P_k(z^2) does not hold.
    EXPECT_GT(c.literal_form_residual, 0.1) << k;
  }
  EXPECT_THROW(link_check(13, 10, 1), InvalidArgument);
}
