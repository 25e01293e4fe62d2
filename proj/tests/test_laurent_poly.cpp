#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lacunary/laurent_poly.hpp"

using namespace lacunary;

namespace {

IntPoly ip(std::int64_t low, std::vector<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(low, std::move(v));
}

// Plain O(nm) convolution over int64; values are kept small enough not to
// overflow.
std::vector<std::int64_t> naive_convolve(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <class T>
std::vector<T> naive_convolve_exact(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::size_t log_uniform_length(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_real_distribution<double> u(0.0, std::log2(static_cast<double>(max_len)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::exp2(u(rng))));
}

}  // namespace

TEST(LaurentPoly, CanonicalForm) {
  const IntPoly p = ip(-2, {0, 0, 3, 0, 4, 0});
  EXPECT_EQ(p.low(), 0);
  EXPECT_EQ(p.size(), 3U);
  EXPECT_EQ(p.high(), 2);
  const IntPoly z = ip(5, {0, 0});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.low(), 0);
  EXPECT_EQ(z, IntPoly());
}

TEST(LaurentPoly, MultiplyExamples) {
  EXPECT_EQ(multiply(ip(0, {1, 1}), ip(0, {1, -1})), ip(0, {1, 0, -1}));
  EXPECT_EQ(multiply(ip(-1, {1, 1}), ip(0, {1, 1})), ip(-1, {1, 2, 1}));
  const IntPoly a = ip(0, {1, 1, 1, -1});
  EXPECT_EQ(multiply(a, reverse(a)).constant_term(), 4);
  EXPECT_TRUE(multiply(a, IntPoly()).is_zero());
}

TEST(LaurentPoly, ReverseExamples) {
  EXPECT_EQ(reverse(ip(0, {1, 2})), ip(-1, {2, 1}));
  EXPECT_EQ(reverse(ip(0, {5})), ip(0, {5}));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<long> c(1 + rng() % 20);
    for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
    const IntPoly a = ip(static_cast<std::int64_t>(rng() % 21) - 10, c);
    EXPECT_EQ(reverse(reverse(a)), a);
    if (!a.is_zero()) {
      EXPECT_EQ(reverse(a).low(), -a.high());
      auto s1 = a.coeffs(), s2 = reverse(a).coeffs();
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      EXPECT_EQ(s1, s2);
    }
  }
}

TEST(LaurentPoly, SubstitutePower) {
  EXPECT_EQ(substitute_power(ip(0, {1, 1}), 2), ip(0, {1, 0, 1}));
  EXPECT_EQ(substitute_power(ip(-1, {1, 0, 1}), 3), ip(-3, {1, 0, 0, 0, 0, 0, 1}));
  const IntPoly a = ip(-2, {3, 1, 4});
  EXPECT_EQ(substitute_power(a, 1), a);
  EXPECT_THROW(substitute_power(a, 0), InvalidArgument);
  EXPECT_THROW(substitute_power(a, -2), InvalidArgument);
}

TEST(LaurentPoly, Coefficient) {
  const IntPoly a = ip(0, {1, 0, 3});
  EXPECT_EQ(a.coefficient(2), 3);
  EXPECT_EQ(a.coefficient(1), 0);
  EXPECT_EQ(a.coefficient(-7), 0);
  EXPECT_EQ(a.coefficient(99), 0);
  EXPECT_EQ(multiply(ip(0, {1, 1}), ip(-1, {1, 1})).constant_term(), 2);
}

TEST(LaurentPoly, Halve) {
  EXPECT_EQ(halve(ip(0, {1, 1, 1, 1})), ip(0, {1, 1}));
  EXPECT_EQ(halve(ip(-2, {1, 1, 5})), ip(-1, {1, 5}));
  EXPECT_TRUE(halve(ip(1, {7})).is_zero());
  EXPECT_EQ(halve(ip(-3, {2, 9})), ip(-1, {9}));
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    std::vector<long> c(1 + rng() % 15);
    for (auto& x : c) x = static_cast<long>(rng() % 9) - 4;
    const IntPoly a = ip(static_cast<std::int64_t>(rng() % 11) - 5, c);
    EXPECT_EQ(halve(substitute_power(a, 2)), a);
    const IntPoly even = substitute_power(a, 2);
    EXPECT_EQ(substitute_power(halve(even), 2), even);
  }
}

TEST(LaurentPoly, FastPathMatchesNaiveOracle) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> coeff(-(1 << 20), 1 << 20);
  int fast_cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t la = log_uniform_length(rng, 4096);
    const std::size_t lb = log_uniform_length(rng, 4096);
    std::vector<std::int64_t> a(la), b(lb);
    for (auto& x : a) x = coeff(rng);
    for (auto& x : b) x = coeff(rng);
    a.front() = a.back() = 1;
    b.front() = b.back() = -1;
    const std::int64_t low_a = static_cast<std::int64_t>(rng() % 41) - 20;
    const std::int64_t low_b = static_cast<std::int64_t>(rng() % 41) - 20;
    std::vector<BigInt> ba, bb;
    for (auto x : a) ba.emplace_back(static_cast<long>(x));
    for (auto x : b) bb.emplace_back(static_cast<long>(x));
    const IntPoly pa(low_a, ba), pb(low_b, bb);
    const IntPoly got = multiply(pa, pb);
    const auto want = naive_convolve(a, b);
    ASSERT_EQ(got.low(), low_a + low_b);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
      ASSERT_EQ(got.coeffs()[i], BigInt(static_cast<long>(want[i]))) << "case " << t << " index " << i;
    if (std::min(la, lb) >= MultiplyOptions{}.fast_threshold) ++fast_cases;
  }
  EXPECT_GT(fast_cases, 100);
}

TEST(LaurentPoly, FastPathLargeCoefficients) {
  gmp_randclass gr(gmp_randinit_mt);
  gr.seed(77);
  std::mt19937_64 rng(77);
  for (int t = 0; t < 20; ++t) {
    const std::size_t la = 64 + rng() % 400, lb = 64 + rng() % 400;
    std::vector<BigInt> a(la), b(lb);
    for (auto& x : a) x = gr.get_z_bits(100 + rng() % 900) - gr.get_z_bits(200);
    for (auto& x : b) x = gr.get_z_bits(100 + rng() % 900) - gr.get_z_bits(200);
    a.front() = 1;
    a.back() = 1;
    b.front() = 1;
    b.back() = 1;
    const auto want = naive_convolve_exact(a, b);
    const IntPoly got = multiply(IntPoly(0, a), IntPoly(0, b));
    ASSERT_EQ(got.coeffs(), want) << "case " << t;
  }
}

TEST(LaurentPoly, RationalFastPath) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> a(100 + rng() % 200), b(100 + rng() % 200);
    for (auto& x : a) {
      x = Rational(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97));
      x.canonicalize();
    }
    for (auto& x : b) {
      x = Rational(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 64));
      x.canonicalize();
    }
    a.front() = a.back() = b.front() = b.back() = Rational(1, 3);
    const auto want = naive_convolve_exact(a, b);
    const RationalPoly got = multiply(RationalPoly(-3, a), RationalPoly(2, b));
    EXPECT_EQ(got.low(), -1);
    ASSERT_EQ(got.coeffs(), want);
  }
}

TEST(LaurentPoly, AlgebraicLaws) {
  std::mt19937_64 rng(99);
  auto rnd = [&] {
    std::vector<long> c(1 + rng() % 150);
    for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
    return ip(static_cast<std::int64_t>(rng() % 21) - 10, c);
  };
  for (int t = 0; t < 30; ++t) {
    const IntPoly a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(multiply(a, b), multiply(b, a));
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    EXPECT_EQ(multiply(a, b + c), multiply(a, b) + multiply(a, c));
    EXPECT_EQ(power(a, 3), multiply(a, multiply(a, a)));
  }
}

TEST(LaurentPoly, ComplexSchoolbook) {
  const ComplexPoly a(-1, {Complex(1, 1), Complex(0, 2)});
  const ComplexPoly b(0, {Complex(2, 0), Complex(0, -1), Complex(1, 0)});
  const ComplexPoly got = multiply(a, b);
  const auto want = naive_convolve_exact(a.coeffs(), b.coeffs());
  EXPECT_EQ(got.low(), -1);
  EXPECT_EQ(got.coeffs(), want);
}

TEST(LaurentPoly, VariantMismatch) {
  const AnyPoly a = ip(0, {1, 2});
  const AnyPoly b = RationalPoly(0, {Rational(1, 2)});
  const AnyPoly c = ComplexPoly(0, {Complex(1, 0)});
  EXPECT_THROW(multiply(a, b), VariantMismatch);
  EXPECT_THROW(multiply(b, c), VariantMismatch);
  EXPECT_EQ(kind_of(multiply(a, a)), CoeffKind::kBigInt);
  try {
    multiply(a, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVariantMismatch);
  }
}
