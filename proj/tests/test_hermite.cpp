#include "toric/errors.hpp"
#include "toric/hermite_oracle.hpp"
#include "toric/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

namespace {

std::vector<Rational> row(const ExactMatrix& m, Eigen::Index i) {
  std::vector<Rational> out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

HermiteSpec zero_targets(std::vector<Rational> points, int n, int d) {
  HermiteSpec spec{std::move(points), n, d, {}};
  spec.targets.assign(static_cast<std::size_t>(n), std::vector<Rational>(spec.points.size(), Rational(0)));
  return spec;
}

}  // namespace

TEST(ConfluentVandermonde, Rows) {
  const Rational x(3, 2);
  EXPECT_EQ(row(confluent_vandermonde({x}, 0, 3), 0), (std::vector<Rational>{1, x, x * x}));
  EXPECT_EQ(row(confluent_vandermonde({x}, 1, 3), 0), (std::vector<Rational>{0, 1, 2 * x}));
  EXPECT_EQ(row(confluent_vandermonde({x}, 2, 4), 0), (std::vector<Rational>{0, 0, 2, 6 * x}));
  EXPECT_THROW(confluent_vandermonde({x, x}, 0, 3), InvalidInput);
  EXPECT_THROW(confluent_vandermonde({x}, 0, 0), InvalidInput);
}

TEST(StackedSystem, Shapes) {
  const auto one = stacked_system({Rational(5)}, 1, 2);
  EXPECT_EQ(one.rows(), 1);
  EXPECT_EQ(row(one, 0), (std::vector<Rational>{1, 5}));
  const auto m = stacked_system({Rational(1), Rational(2)}, 2, 4);
  EXPECT_EQ(m.rows(), 4);
  EXPECT_EQ(m.cols(), 4);
  EXPECT_EQ(exact_rank(m), 4);
  EXPECT_EQ(stacked_system({Rational(1), Rational(2), Rational(7)}, 3, 12).rows(), 9);
}

TEST(RankClaim, RegimeAndOutside) {
  for (int d = 1; d <= 6; ++d) EXPECT_TRUE(verify_rank_claim({Rational(-4, 3)}, 1, d).holds);
  const auto outside = verify_rank_claim({Rational(1), Rational(2), Rational(3)}, 2, 4);
  EXPECT_FALSE(outside.regime);
  EXPECT_EQ(outside.rank, 4);
  EXPECT_FALSE(outside.holds);
}

TEST(RankClaim, RandomInstances) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> kd(1, 5), nd(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = kd(rng), n = nd(rng);
    const int d = std::uniform_int_distribution<int>(n * k, std::max(n * k, 30))(rng);
    const auto claim = verify_rank_claim(random_distinct_points(rng, k), n, d);
    EXPECT_TRUE(claim.regime);
    EXPECT_TRUE(claim.holds) << "k=" << k << " n=" << n << " d=" << d;
  }
}

TEST(HermiteDimension, Examples) {
  HermiteSpec spec{{Rational(1), Rational(-2)}, 2, 5, {{Rational(3), Rational(1, 2)}, {Rational(0), Rational(7)}}};
  const auto sol = hermite_dimension(spec);
  EXPECT_EQ(sol.dimension, 1);

  // Substitution check with an independently built polynomial.
  std::vector<Rational> c = sol.particular;
  c.push_back(Rational(1));
  const Polynomial<Rational> f(c);
  for (int l = 0; l < 2; ++l) {
    for (int j = 0; j < 2; ++j) {
      EXPECT_EQ(derivative(f, static_cast<std::size_t>(l))(spec.points[static_cast<std::size_t>(j)]),
                spec.targets[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]);
    }
  }

  const auto linear = hermite_dimension({{Rational(2)}, 1, 1, {{Rational(5)}}});
  EXPECT_EQ(linear.dimension, 0);
  ASSERT_EQ(linear.particular.size(), 1U);
  EXPECT_EQ(linear.particular[0], Rational(3));  // z + 3 takes 5 at 2

  EXPECT_THROW(hermite_dimension({{Rational(1)}, 2, 3, {{Rational(0)}}}), ShapeMismatch);
}

TEST(BundleRank, Values) {
  const DegreeVector d({5, 7, 5, 12});
  // 2*29 - 2*2*4*2 + 2 - 1
  EXPECT_EQ(bundle_rank(d, 2, 2, 4), 27);
  EXPECT_EQ(bundle_rank(d, 0, 2, 4), 2 * 29 - 1);
  EXPECT_EQ(bundle_rank(DegreeVector({3, 3}), 1, 1, 2), 12 - 4 + 0);
}

TEST(BundleRank, FibreDimensionsAddUp) {
  // Real dimension of the fibre over k distinct roots: each f_i ranges over a complex
  // affine space of dimension d_i - nk, plus an open (k-1)-simplex.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 3;
    const int k = 1 + trial % 4;
    const int r = 2 + trial % 3;
    std::vector<long> d;
    for (int i = 0; i < r; ++i) d.push_back(n * k + std::uniform_int_distribution<long>(0, 4)(rng));
    const auto points = random_distinct_points(rng, k);
    long real_dim = k - 1;
    for (long di : d) real_dim += 2 * hermite_dimension(zero_targets(points, n, static_cast<int>(di))).dimension;
    EXPECT_EQ(real_dim, bundle_rank(DegreeVector(d), k, n, r));
  }
}

TEST(RandomPoints, DistinctWithinHeight) {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = random_distinct_points(rng, 5, 3);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_LE(abs(numerator(pts[i])), 3);
      EXPECT_LE(denominator(pts[i]), 3);
      for (std::size_t j = 0; j < i; ++j) EXPECT_NE(pts[i], pts[j]);
    }
  }
}
