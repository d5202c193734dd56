#include "toric/exact.hpp"
#include "toric/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

namespace {

// Plain rational elimination, kept separate from the fraction-free routine under test.
long naive_rank(ExactMatrix m) {
  long rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index i = rank + 1; i < m.rows(); ++i) {
      const Rational f = m(i, col) / m(rank, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(GaussianRational, FieldOperations) {
  const GaussianRational a(Rational(1, 2), Rational(3));
  const GaussianRational b(Rational(-2), Rational(1, 3));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
  EXPECT_THROW(a / GaussianRational(0), std::domain_error);
}

TEST(ExtendedGcd, BezoutIdentity) {
  for (long p : {0L, 7L, -12L, 35L}) {
    for (long q : {0L, 5L, 18L, -9L}) {
      Integer x, y;
      const Integer g = extended_gcd(Integer(p), Integer(q), x, y);
      EXPECT_EQ(g, boost::multiprecision::gcd(Integer(p), Integer(q)));
      EXPECT_EQ(Integer(p) * x + Integer(q) * y, g);
    }
  }
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(exact_rank(ExactMatrix::Identity(3, 3)), 3);
  EXPECT_EQ(exact_rank(ExactMatrix::Zero(3, 4)), 0);
  ExactMatrix m(2, 3);
  m << Rational(1, 2), 1, 2, 1, 2, 4;
  EXPECT_EQ(exact_rank(m), 1);
}

TEST(Rank, AgreesWithPlainEliminationOnRandomMatrices) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = size(rng);
    const int cols = size(rng);
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = Rational(entry(rng), 1 + std::abs(entry(rng)));
    }
    // Force some dependence.
    if (rows > 2) m.row(rows - 1) = m.row(0) * Rational(entry(rng)) + m.row(1);
    EXPECT_EQ(exact_rank(m), naive_rank(m));
  }
}

TEST(Smith, InvariantFactors) {
  const auto inv = smith_invariants<Integer>(int_matrix({{2, 0}, {0, 1}}));
  ASSERT_EQ(inv.size(), 2U);
  EXPECT_EQ(inv[0], 1);
  EXPECT_EQ(inv[1], 2);

  const auto inv2 = smith_invariants<Integer>(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  ASSERT_EQ(inv2.size(), 3U);
  EXPECT_EQ(inv2[0], 2);
  EXPECT_EQ(inv2[1], 6);
  EXPECT_EQ(inv2[2], 12);
}

TEST(IntegerKernel, AnnihilatesAndIsSaturated) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a(2, 5);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    }
    const IntMatrix k = integer_kernel_basis(a);
    const ExactMatrix ar = a.cast<Rational>();
    EXPECT_EQ(k.cols(), a.cols() - exact_rank(ar));
    if (k.cols() == 0) continue;
    EXPECT_TRUE((a * k).isZero());
    // Saturated lattice: the basis extends to a basis of Z^r.
    for (const auto& d : smith_invariants<Integer>(k)) EXPECT_EQ(d, 1);
  }
}

TEST(SolveExact, ConsistentAndInconsistent) {
  ExactMatrix m(2, 2);
  m << 1, 2, 3, 4;
  ExactVector b(2);
  b << 5, 6;
  Eigen::Index rank = 0;
  const auto x = solve_exact<Rational>(m, b, &rank);
  ASSERT_TRUE(x);
  EXPECT_EQ(rank, 2);
  EXPECT_EQ(m * *x, b);

  ExactMatrix s(2, 2);
  s << 1, 2, 2, 4;
  ExactVector c(2);
  c << 1, 3;
  EXPECT_FALSE(solve_exact<Rational>(s, c));
}

TEST(LinearProgram, OptimumInfeasibleUnbounded) {
  // min -x - y  s.t.  x + y + s = 4, x + 3y + t = 6
  ExactMatrix a(2, 4);
  a << 1, 1, 1, 0, 1, 3, 0, 1;
  ExactVector b(2);
  b << 4, 6;
  ExactVector c(4);
  c << -1, -1, 0, 0;
  const auto x = lp_minimize<Rational>(a, b, c);
  ASSERT_TRUE(x);
  EXPECT_EQ(c.dot(*x), Rational(-4));
  EXPECT_EQ(a * *x, b);

  ExactMatrix infeasible(1, 2);
  infeasible << 1, 1;
  ExactVector neg(1);
  neg << -1;
  EXPECT_FALSE(lp_feasible<Rational>(infeasible, neg));

  ExactMatrix free_dir(1, 2);
  free_dir << 1, -1;
  ExactVector zero(1);
  zero << 0;
  ExactVector cost(2);
  cost << -1, 0;
  EXPECT_THROW(lp_minimize<Rational>(free_dir, zero, cost), LpUnbounded);
}
