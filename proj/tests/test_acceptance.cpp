#include <gtest/gtest.h>

#include "lacunary/acceptance.hpp"
#include "lacunary/error.hpp"

using namespace lacunary;

TEST(Acceptance, LevelParsing) {
  EXPECT_EQ(parse_acceptance_level("fast"), AcceptanceLevel::kFast);
  EXPECT_EQ(parse_acceptance_level("full"), AcceptanceLevel::kFull);
  EXPECT_THROW(parse_acceptance_level("slow"), InvalidArgument);
}

TEST(Acceptance, InjectedTauErrorIsCaught) {
  AcceptanceOptions options;
  options.level = AcceptanceLevel::kFast;
  options.tau_perturbation = 1e-3;
  options.only = {3, 4};
  std::vector<CriterionResult> results;
  run_acceptance(options, [&](const CriterionResult& r) { results.push_back(r); });
  ASSERT_EQ(results.size(), 2U);
  for (const auto& r : results) EXPECT_FALSE(r.passed) << r.id << " " << r.measured.dump();
}

TEST(Acceptance, OnlySelectsCriteria) {
  AcceptanceOptions options;
  options.level = AcceptanceLevel::kFast;
  options.only = {7};
  std::vector<CriterionResult> results;
  run_acceptance(options, [&](const CriterionResult& r) { results.push_back(r); });
  ASSERT_EQ(results.size(), 1U);
  EXPECT_EQ(results[0].id, 7);
  EXPECT_TRUE(results[0].passed) << results[0].measured.dump();
}
