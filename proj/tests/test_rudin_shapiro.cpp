#include <gtest/gtest.h>

#include "lacunary/rudin_shapiro.hpp"

using namespace lacunary;

namespace {

// Direct recursion on int vectors, independent of the library generator.
std::pair<std::vector<int>, std::vector<int>> recursion_oracle(unsigned k) {
  std::vector<int> p{1}, q{1};
  for (unsigned j = 0; j < k; ++j) {
    std::vector<int> np(p), nq(p);
    for (int c : q) {
      np.push_back(c);
      nq.push_back(-c);
    }
    p = std::move(np);
    q = std::move(nq);
  }
  return {p, q};
}

// Sum of squared aperiodic autocorrelations = constant term of (P P*)^2.
long fourth_moment_oracle(const std::vector<int>& p) {
  const long n = static_cast<long>(p.size());
  long total = 0;
  for (long s = -(n - 1); s < n; ++s) {
    long c = 0;
    for (long i = 0; i < n; ++i)
      if (i + s >= 0 && i + s < n) c += p[i] * p[i + s];
    total += c * c;
  }
  return total;
}

}  // namespace

TEST(RudinShapiro, SmallPairs) {
  EXPECT_EQ(generate(0).p, (std::vector<std::int8_t>{1}));
  EXPECT_EQ(generate(1).q, (std::vector<std::int8_t>{1, -1}));
  EXPECT_EQ(generate(2).p, (std::vector<std::int8_t>{1, 1, 1, -1}));
  EXPECT_EQ(generate(2).q, (std::vector<std::int8_t>{1, 1, -1, 1}));
}

TEST(RudinShapiro, MatchesRecursionOracleAndPrefix) {
  for (unsigned k = 0; k <= 12; ++k) {
    const auto pair = generate(k);
    const auto [p, q] = recursion_oracle(k);
    ASSERT_EQ(pair.p.size(), std::size_t{1} << k);
    for (std::size_t i = 0; i < p.size(); ++i) {
      ASSERT_EQ(pair.p[i], p[i]);
      ASSERT_EQ(pair.q[i], q[i]);
    }
    if (k > 0) {
      const auto prev = generate(k - 1);
      EXPECT_TRUE(std::equal(prev.p.begin(), prev.p.end(), pair.p.begin()));
      EXPECT_TRUE(std::equal(prev.p.begin(), prev.p.end(), pair.q.begin()));
    }
  }
}

TEST(RudinShapiro, DepthLimit) {
  EXPECT_THROW(generate(25), ResourceLimit);
  EXPECT_THROW(generate(5, 4), ResourceLimit);
}

TEST(RudinShapiro, ValuesAtPlusMinusOne) {
  for (unsigned k = 1; k <= 10; ++k) {
    const auto pair = generate(k);
    EXPECT_EQ(evaluate_at_one(pair.p), BigInt(1) << ((k + 1) / 2)) << k;
    if (k % 2 == 1) EXPECT_EQ(evaluate_at_minus_one(pair.p), 0) << k;
  }
}

TEST(RudinShapiro, Parseval) {
  for (unsigned k : {0U, 3U, 12U}) {
    const auto c = parseval_identity_check(k);
    EXPECT_TRUE(c.holds) << k;
    EXPECT_TRUE(c.residual.is_zero());
  }
}

TEST(RudinShapiro, AltRecursion) {
  for (unsigned k : {0U, 1U, 10U}) EXPECT_TRUE(alt_recursion_check(k).holds()) << k;
}

TEST(RudinShapiro, FourthMomentOracleAndClosedForm) {
  // Oracle first: 1, 6, 20, 88 for k = 0..3.
  const long expected[] = {1, 6, 20, 88};
  for (unsigned k = 0; k <= 3; ++k)
    EXPECT_EQ(fourth_moment_oracle(recursion_oracle(k).first), expected[k]);
  for (unsigned k = 0; k <= 10; ++k) {
    const ExactMoment m = exact_even_moment(k, 2);
    EXPECT_EQ(m.constant_term, BigInt(fourth_moment_oracle(recursion_oracle(k).first)));
    // 3 * 4^{k+1} * m = 4^{k+1} - (-2)^k
    const BigInt four = BigInt(1) << (2 * (k + 1));
    BigInt minus_two_pow = BigInt(1) << k;
    if (k % 2 == 1) minus_two_pow = -minus_two_pow;
    EXPECT_EQ(Rational(m.rational * 3 * four), Rational(four - minus_two_pow)) << k;
  }
  EXPECT_EQ(exact_even_moment(1, 2).to_string(), "3/8");
  EXPECT_EQ(exact_even_moment(2, 2).to_string(), "5/16");
  EXPECT_EQ(exact_even_moment(3, 2).to_string(), "11/32");
}

TEST(RudinShapiro, SecondMomentIsHalf) {
  for (unsigned k = 0; k <= 16; ++k)
    EXPECT_EQ(exact_even_moment(k, 1).rational, Rational(1, 2)) << k;
}

TEST(RudinShapiro, MomentsInUnitInterval) {
  for (unsigned k = 0; k <= 8; ++k)
    for (unsigned n = 0; n <= 5; ++n) {
      const auto m = exact_even_moment(k, n);
      EXPECT_GT(m.rational, 0);
      EXPECT_LE(m.rational, 1);
    }
}

TEST(RudinShapiro, MixedMoments) {
  EXPECT_EQ(exact_mixed_moment(4, 0, 0).to_string(), "1");
  for (unsigned k = 0; k <= 6; ++k) {
    // Mean of P is its constant coefficient 1, scaled by 2^{-(k+1)/2}.
    const auto mean = exact_mixed_moment(k, 1, 0);
    EXPECT_NEAR(mean.to_double(), std::pow(2.0, -(k + 1.0) / 2.0), 1e-15);
    EXPECT_EQ(mean.inv_sqrt2, (k + 1) % 2 == 1);
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned m = 0; m <= 3; ++m) {
        const auto a = exact_mixed_moment(k, n, m), b = exact_mixed_moment(k, m, n);
        EXPECT_EQ(a.rational, b.rational);
        EXPECT_EQ(a.inv_sqrt2, b.inv_sqrt2);
      }
    EXPECT_EQ(exact_mixed_moment(k, 2, 2).rational, exact_even_moment(k, 2).rational);
  }
}

TEST(RudinShapiro, MomentBudget) {
  EXPECT_THROW(exact_even_moment(20, 9), ResourceLimit);
  EXPECT_NO_THROW(exact_even_moment(3, 2, 64));
  EXPECT_THROW(exact_even_moment(3, 2, 10), ResourceLimit);
}
