#include "toric/errors.hpp"
#include "toric/oracles.hpp"

#include <gtest/gtest.h>

using namespace toric;

TEST(Oracles, FixtureFansAreValid) {
  const auto fans = fixture_fans();
  EXPECT_EQ(fans.size(), 7U);
  for (const auto& [name, fan] : fans) EXPECT_TRUE(validate_fan(fan).valid()) << name;
  EXPECT_FALSE(is_complete(fans.back().second));
}

TEST(Oracles, SmallRunsPass) {
  EXPECT_TRUE(vandermonde_suite(1, {40}).ok());
  EXPECT_TRUE(band_suite(2, 20).ok());
  EXPECT_TRUE(complement_suite(3, 50).ok());
  EXPECT_TRUE(jetsection_suite(4, 30).ok());
  EXPECT_TRUE(membership_suite(5, 30, 30).ok());
  EXPECT_TRUE(stabilization_suite(6, 30).ok());
}

TEST(Oracles, DeterministicGivenSeed) {
  EXPECT_EQ(membership_suite(77, 10, 10).to_json(), membership_suite(77, 10, 10).to_json());
  EXPECT_EQ(vandermonde_suite(78, {10}).to_json().dump(), vandermonde_suite(78, {10}).to_json().dump());
}

TEST(Oracles, VandermondeFixedShape) {
  VandermondeOptions opt;
  opt.trials = 5;
  opt.k = 3;
  opt.n = 2;
  opt.d = 6;
  const auto s = vandermonde_suite(9, opt);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.info["max_rank"], 6);
  opt.d = 5;
  EXPECT_THROW(vandermonde_suite(9, opt), InvalidInput);
}

TEST(Oracles, BandCapAndExplicitCase) {
  EXPECT_THROW(band_suite(1, 1, {}, 13), CapExceeded);
  const auto s = band_suite(1, 0, {{"hirzebruch(1)", hirzebruch_fan(1), DegreeVector({5, 7, 5, 12}), 2}});
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.info["explicit"][0]["min_band"], 10);
}

TEST(Oracles, SummaryReportsFailures) {
  OracleSummary s{"x", 1};
  s.trials = 3;
  s.failures = 1;
  s.failed.push_back({{"trial", 2}});
  const auto j = s.to_json();
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["failed"][0]["trial"], 2);
}
