#include <gtest/gtest.h>

#include <random>

#include "lacunary/dyadic_walk.hpp"

using namespace lacunary;

namespace {

// Evaluates the product at the midpoint (2i+1)/2^{k+r+1} of every dyadic
// interval, shifting the binary expansion of the midpoint directly.
std::vector<Rational> midpoint_oracle(const FiniteGroup& g, const DyadicStepFunction& f,
                                      unsigned k) {
  const unsigned r = static_cast<unsigned>(f.resolution);
  const unsigned bits = k + r + 1;
  const std::uint64_t mod = std::uint64_t{1} << bits;
  std::vector<long> counts(static_cast<std::size_t>(g.order()), 0);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << (k + r)); ++i) {
    const std::uint64_t mid = 2 * i + 1;
    int acc = g.identity();
    for (unsigned j = 0; j <= k; ++j) {
      const std::uint64_t frac = (mid << j) % mod;
      const auto idx = static_cast<std::size_t>(frac >> (bits - r));
      acc = g.multiply(f.table[idx], acc);
    }
    ++counts[static_cast<std::size_t>(acc)];
  }
  std::vector<Rational> out;
  for (long c : counts) {
    Rational q(BigInt(c), BigInt(1) << (k + r));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

DyadicStepFunction random_step(std::mt19937_64& rng, const FiniteGroup& g, int max_r) {
  DyadicStepFunction f;
  f.resolution = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_r));
  f.table.resize(std::size_t{1} << f.resolution);
  for (int& v : f.table) v = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
  return f;
}

}  // namespace

TEST(FiniteGroup, Presets) {
  EXPECT_EQ(FiniteGroup::preset("z2").order(), 2);
  EXPECT_EQ(FiniteGroup::preset("z7").order(), 7);
  EXPECT_EQ(FiniteGroup::preset("d4").order(), 8);
  EXPECT_EQ(FiniteGroup::preset("s3").order(), 6);
  EXPECT_EQ(FiniteGroup::preset("q8").order(), 8);
  EXPECT_THROW(FiniteGroup::preset("banana"), InvalidArgument);
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) abelian = abelian && s3.multiply(a, b) == s3.multiply(b, a);
  EXPECT_FALSE(abelian);
}

TEST(FiniteGroup, Validation) {
  EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 1}, 0, {}), InvalidArgument);  // not Latin
  EXPECT_THROW(FiniteGroup(2, {1, 0, 0, 1}, 0, {}), InvalidArgument);  // wrong identity
  EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 2}, 0, {}), InvalidArgument);  // out of range
  // Order-5 loop with every square trivial: Latin, has identity, not associative.
  const std::vector<int> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1,
                                 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup(5, loop, 0, {}), InvalidArgument);
}

TEST(FiniteGroup, FromJson) {
  const auto nested = nlohmann::json::parse(
      R"({"order":2,"cayley":[[0,1],[1,0]],"identity":0,"labels":["e","a"]})");
  const FiniteGroup g = FiniteGroup::from_json(nested);
  EXPECT_EQ(g.labels()[1], "a");
  const auto flat = nlohmann::json::parse(R"({"order":2,"cayley":[0,1,1,0],"identity":0})");
  EXPECT_EQ(FiniteGroup::from_json(flat).multiply(1, 1), 0);
  EXPECT_THROW(FiniteGroup::from_json(nlohmann::json::parse(R"({"order":2})")), InvalidArgument);
}

TEST(DyadicWalk, FiveEighthsCounterexample) {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const auto f = DyadicStepFunction::paper_counterexample();
  EXPECT_EQ(f.table, (std::vector<int>{0, 1, 1, 1, 0, 1, 0, 0}));
  EXPECT_EQ(exact_product_distribution(z2, f, 0).masses[0], Rational(1, 2));
  for (unsigned k = 1; k <= 12; ++k) {
    const auto d = exact_product_distribution(z2, f, k);
    EXPECT_EQ(d.masses[0], Rational(5, 8)) << k;
    EXPECT_EQ(tv_distance_to_uniform(d), Rational(1, 8));
  }
}

TEST(DyadicWalk, SixteenIntervalEnumeration) {
  // k = 1: t in [i/16, (i+1)/16); f(t) uses floor(8t) = i >> 1 and f(2t) uses
  // floor(16t) mod 8 = i mod 8.
  const int table[8] = {0, 1, 1, 1, 0, 1, 0, 0};
  int zeros = 0;
  for (int i = 0; i < 16; ++i)
    if ((table[i >> 1] + table[i % 8]) % 2 == 0) ++zeros;
  EXPECT_EQ(zeros, 10);
  const auto d = brute_force_distribution(FiniteGroup::cyclic(2),
                                          DyadicStepFunction::paper_counterexample(), 1);
  EXPECT_EQ(d.masses[0], Rational(BigInt(zeros)) / 16);
}

TEST(DyadicWalk, DpBruteForceAndMidpointOracle) {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const auto f = DyadicStepFunction::paper_counterexample();
  for (unsigned k = 0; k <= 6; ++k) {
    const auto dp = exact_product_distribution(z2, f, k);
    EXPECT_EQ(dp.masses, brute_force_distribution(z2, f, k).masses);
    EXPECT_EQ(dp.masses, midpoint_oracle(z2, f, k));
  }
  std::mt19937_64 rng(2025);
  const char* names[] = {"z2", "z3", "z4", "z5", "z6", "s3", "d3"};
  for (int t = 0; t < 50; ++t) {
    const FiniteGroup g = FiniteGroup::preset(names[rng() % 7]);
    const auto h = random_step(rng, g, 4);
    const unsigned k = static_cast<unsigned>(rng() % 7);
    const auto dp = exact_product_distribution(g, h, k);
    ASSERT_EQ(dp.masses, brute_force_distribution(g, h, k).masses) << t;
    ASSERT_EQ(dp.masses, midpoint_oracle(g, h, k)) << t;
  }
}

TEST(DyadicWalk, InvariantsAndTrivialCases) {
  std::mt19937_64 rng(7);
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  for (int t = 0; t < 20; ++t) {
    const auto h = random_step(rng, s3, 5);
    const unsigned k = static_cast<unsigned>(rng() % 10);
    const auto d = exact_product_distribution(s3, h, k);
    EXPECT_EQ(d.total(), 1);
    for (const auto& m : d.masses) {
      const BigInt den = m.get_den();
      EXPECT_EQ((BigInt(1) << (k + static_cast<unsigned>(h.resolution))) % den, 0);
    }
  }
  DyadicStepFunction ident{2, {0, 0, 0, 0}};
  for (unsigned k : {0U, 5U}) {
    const auto d = exact_product_distribution(s3, ident, k);
    EXPECT_EQ(d.masses[static_cast<std::size_t>(s3.identity())], 1);
  }
  DyadicStepFunction f{2, {1, 2, 2, 5}};
  const auto d0 = exact_product_distribution(s3, f, 0);
  EXPECT_EQ(d0.masses[1], Rational(1, 4));
  EXPECT_EQ(d0.masses[2], Rational(1, 2));
  EXPECT_EQ(d0.masses[5], Rational(1, 4));
}

TEST(DyadicWalk, SubgroupSupport) {
  const FiniteGroup z6 = FiniteGroup::cyclic(6);
  DyadicStepFunction f{3, {0, 2, 4, 2, 2, 0, 4, 4}};
  for (unsigned k = 0; k <= 8; ++k) {
    const auto d = exact_product_distribution(z6, f, k);
    for (int odd : {1, 3, 5}) EXPECT_EQ(d.masses[static_cast<std::size_t>(odd)], 0);
  }
}

TEST(DyadicWalk, TvDistance) {
  ExactDistribution uniform{{Rational(1, 3), Rational(1, 3), Rational(1, 3)}};
  EXPECT_EQ(tv_distance_to_uniform(uniform), 0);
  ExactDistribution point{{Rational(1), Rational(0)}};
  EXPECT_EQ(tv_distance_to_uniform(point), Rational(1, 2));
}

TEST(DyadicWalk, Errors) {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const auto f = DyadicStepFunction::paper_counterexample();
  EXPECT_THROW(exact_product_distribution(z2, f, 3, 4), ResourceLimit);
  EXPECT_THROW(brute_force_distribution(z2, f, 22), ResourceLimit);
  DyadicStepFunction bad_len{3, {0, 1}};
  EXPECT_THROW(exact_product_distribution(z2, bad_len, 1), InvalidArgument);
  DyadicStepFunction bad_idx{1, {0, 2}};
  EXPECT_THROW(exact_product_distribution(z2, bad_idx, 1), InvalidArgument);
  EXPECT_THROW(DyadicStepFunction::preset("nope"), InvalidArgument);
}

TEST(DyadicWalk, DistributionJson) {
  const auto d = exact_product_distribution(FiniteGroup::cyclic(2),
                                            DyadicStepFunction::paper_counterexample(), 5);
  const auto j = distribution_to_json(FiniteGroup::cyclic(2), d);
  EXPECT_EQ(j.at("0"), "5/8");
  EXPECT_EQ(j.at("1"), "3/8");
}

TEST(MatrixWalk, DeterminismAndUnitarity) {
  const auto a = monte_carlo_matrix_walk(WalkKind::kSu2G, 12, 5000, 42, 1);
  const auto b = monte_carlo_matrix_walk(WalkKind::kSu2G, 12, 5000, 42, 4);
  EXPECT_EQ(a.entry_ks, b.entry_ks);
  EXPECT_EQ(a.phase_correlation, b.phase_correlation);
  EXPECT_EQ(a.entry_histogram, b.entry_histogram);
  for (std::size_t i = 0; i < a.rep_means.size(); ++i)
    EXPECT_EQ(a.rep_means[i].mean, b.rep_means[i].mean);
  EXPECT_LE(a.max_unitarity_defect, 1e-10);
  const auto u = monte_carlo_matrix_walk(WalkKind::kU2BigG, 30, 2000, 1);
  EXPECT_LE(u.max_unitarity_defect, 1e-10);
  EXPECT_EQ(u.det_phase_histogram.size(), kWalkHistogramBins);
}

TEST(MatrixWalk, Convergence) {
  const std::size_t samples = 200000;
  const auto early = monte_carlo_matrix_walk(WalkKind::kSu2G, 4, samples, 9);
  const auto late = monte_carlo_matrix_walk(WalkKind::kSu2G, 20, samples, 9);
  EXPECT_LT(late.entry_ks, early.entry_ks);
  ASSERT_FALSE(late.rep_means.empty());
  EXPECT_EQ(late.rep_means[0].two_ell, 1);
  EXPECT_LT(late.rep_means[0].max_abs_mean, 3 * late.sigma);
  EXPECT_LT(late.phase_correlation, early.phase_correlation);
}

TEST(MatrixWalk, Errors) {
  EXPECT_THROW(monte_carlo_matrix_walk(WalkKind::kSu2G, 41, 10, 1), InvalidArgument);
  EXPECT_THROW(monte_carlo_matrix_walk(WalkKind::kSu2G, 4, 0, 1), InvalidArgument);
  EXPECT_THROW(parse_walk_kind("so3"), InvalidArgument);
}
