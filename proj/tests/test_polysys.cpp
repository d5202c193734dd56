#include "toric/errors.hpp"
#include "toric/oracles.hpp"
#include "toric/polysys.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

namespace {

RationalPoly poly(std::initializer_list<long> ascending) {
  std::vector<GaussianRational> c;
  for (long x : ascending) c.emplace_back(Rational(x));
  return RationalPoly(std::move(c));
}

const GaussianRational kZero(0);

}  // namespace

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(poly({0, 0, 1}), 1), poly({0, 2}));
  EXPECT_EQ(derivative(poly({1, 0, 0, 1}), 3), poly({6}));
  EXPECT_EQ(derivative(poly({3, 1, 4}), 0), poly({3, 1, 4}));
  EXPECT_TRUE(derivative(poly({3, 1}), 5).is_zero());
}

TEST(Jet, Examples) {
  const auto j = jet(poly({0, 0, 1}), 2);
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[1], poly({0, 2, 1}));
  EXPECT_EQ(jet(poly({5, 1}), 1).size(), 1U);

  const auto k = jet(poly({1, 1, 1}), 3);
  EXPECT_EQ(k[0](kZero), GaussianRational(1));
  EXPECT_EQ(k[1](kZero), GaussianRational(2));
  EXPECT_EQ(k[2](kZero), GaussianRational(3));
  for (const auto& g : jet(poly({2, -1, 0, 1}), 3)) EXPECT_TRUE(g.is_monic());
}

TEST(MultPart, Examples) {
  // (z-1)^2 (z-2)
  const auto f = poly_from_roots({{GaussianRational(1), 2}, {GaussianRational(2), 1}});
  EXPECT_EQ(mult_part(f, 2), poly({-1, 1}));
  EXPECT_EQ(mult_part(f, 3), poly({1}));
  EXPECT_EQ(mult_part(poly({-6, 11, -6, 1}), 2), poly({1}));
  EXPECT_EQ(mult_part(poly({-4, 0, 2}), 1), poly({-2, 0, 1}));

  // Root of multiplicity mu >= n survives with multiplicity mu - n + 1.
  const GaussianRational i(Rational(0), Rational(1));
  const auto g = poly_from_roots({{i, 5}, {GaussianRational(3), 2}});
  EXPECT_EQ(mult_part(g, 3), poly_from_roots({{i, 3}}));
  EXPECT_THROW(mult_part(RationalPoly(), 2), InvalidInput);
}

TEST(Membership, ProjectiveLineExamples) {
  const Fan cp1 = cp_fan(1);
  CoeffSystem doubled{{poly({0, 0, 1}), poly({0, 0, 1})}};
  const auto v = is_member(doubled, cp1, 2);
  EXPECT_FALSE(v.member);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (IndexSet{0, 1}));
  ASSERT_TRUE(v.common_factor);
  EXPECT_EQ(*v.common_factor, poly({0, 1}));

  CoeffSystem clean{{poly({0, 0, 1}), poly({1, 0, 1})}};
  EXPECT_TRUE(is_member(clean, cp1, 2).member);

  RootSystem doubled_roots{{RootPoly{{{Complex(0, 0), 2}}}, RootPoly{{{Complex(0, 0), 2}}}}};
  EXPECT_FALSE(is_member(doubled_roots, cp1, 2).member);
  EXPECT_THROW(is_member(clean, cp_fan(2), 2), ShapeMismatch);
}

TEST(Membership, SmallDegreesOnProjectiveSpaces) {
  // d_min < n: the smallest polynomial has no root of multiplicity n, and on cp(m)
  // the only primitive collection contains it.
  std::mt19937_64 rng(1);
  for (int m = 1; m <= 3; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      auto system = random_dual_system(rng, cp_fan(m), 2, true);
      system.coeff.polys[0] = poly({1, 1});
      EXPECT_TRUE(is_member(system.coeff, cp_fan(m), 2).member);
    }
  }
}

TEST(Membership, NoSharingAcrossAPrimitiveCollectionMeansMember) {
  // On H(1) a multiplicity-2 root shared by f_1 and f_2 sits on a cone, not on a primitive collection.
  const GaussianRational r(Rational(1, 2));
  CoeffSystem s{{poly_from_roots({{r, 2}}), poly_from_roots({{r, 2}}), poly({1, 0, 1}), poly({0, 1})}};
  EXPECT_TRUE(is_member(s, hirzebruch_fan(1), 2).member);
  s.polys[2] = poly_from_roots({{r, 3}});
  const auto v = is_member(s, hirzebruch_fan(1), 2);
  EXPECT_FALSE(v.member);
  EXPECT_EQ(*v.witness, (IndexSet{0, 2}));
}

TEST(Membership, RepresentationsAgreeOnRandomSystems) {
  std::mt19937_64 rng(99);
  for (const auto& [name, fan] : fixture_fans()) {
    for (int n = 1; n <= 3; ++n) {
      for (bool planted : {true, false}) {
        const auto s = random_dual_system(rng, fan, n, planted);
        EXPECT_EQ(is_member(s.coeff, fan, n).member, !planted) << name;
        EXPECT_EQ(is_member(s.roots, fan, n).member, !planted) << name;
        EXPECT_EQ(s.coeff.degrees(), s.roots.degrees());
      }
    }
  }
}

TEST(Stabilization, NAndPhi) {
  const DegreeVector d({5, 7, 5, 12});
  EXPECT_EQ(n_of(d), 29);
  EXPECT_EQ(n_of(DegreeVector({3, 3})), 6);
  EXPECT_EQ(n_of(DegreeVector({1, 1, 1, 4})), 7);
  EXPECT_EQ(phi_map(d, Complex(0, 0)), Complex(28, 0));
  for (double re : {-5.0, -1.0, 0.0, 3.0, 30.0}) {
    const Complex w = phi_map(d, Complex(re, 2.5));
    EXPECT_LT(w.real(), 29.0);
    EXPECT_EQ(w.imag(), 2.5);
  }
}

TEST(Stabilization, DegreesAndMembership) {
  RootSystem member{{RootPoly{{{Complex(0, 0), 1}, {Complex(1, 1), 1}}}, RootPoly{{{Complex(0, 0), 1}}}}};
  RootSystem non_member{{RootPoly{{{Complex(0.5, 0), 2}}}, RootPoly{{{Complex(0.5, 0), 3}}}}};
  const Fan cp1 = cp_fan(1);
  const auto s = stabilize(member, {2, 1});
  EXPECT_EQ(s.degrees().entries(), (std::vector<long>{4, 2}));
  EXPECT_TRUE(is_member(s, cp1, 2).member);
  EXPECT_FALSE(is_member(stabilize(non_member, {1, 1}), cp1, 2).member);

  // a = e_1 appends exactly one root to f_1.
  const auto e1 = stabilize(member, {1, 0});
  EXPECT_EQ(e1.polys[0].roots.size(), member.polys[0].roots.size() + 1);
  EXPECT_EQ(e1.polys[1].roots.size(), member.polys[1].roots.size());
  EXPECT_EQ(e1.polys[0].roots.back().value, anchor_point(member.degrees(), 1));

  EXPECT_THROW(stabilize(member, {0, 0}), InvalidInput);
  EXPECT_THROW(stabilize(member, {1, -1}), InvalidInput);
  EXPECT_THROW(stabilize(member, {1}), ShapeMismatch);
}

TEST(JetSection, Examples) {
  EXPECT_EQ(jet_section({GaussianRational(1), GaussianRational(2), GaussianRational(3)}), poly({1, 1, 1}));
  const GaussianRational c(Rational(2, 3), Rational(-1));
  EXPECT_EQ(jet_section({c, c, c, c}), RationalPoly::constant(c));
  EXPECT_THROW(jet_section({}), InvalidInput);
}

TEST(JetSection, RoundTripAtZero) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<GaussianRational> b;
    for (int j = 0; j < n; ++j) b.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    const auto values = jet(jet_section(b), n);
    for (int j = 0; j < n; ++j) EXPECT_EQ(values[static_cast<std::size_t>(j)](kZero), b[static_cast<std::size_t>(j)]);
  }
}

TEST(EvaluateJet, Examples) {
  const Fan cp1 = cp_fan(1);
  CoeffSystem doubled{{poly({0, 0, 1}), poly({0, 0, 1})}};
  const auto x = evaluate_jet(doubled, 2, kZero);
  EXPECT_EQ(x.blocks, (std::vector<std::vector<Complex>>{{0.0, 0.0}, {0.0, 0.0}}));
  EXPECT_TRUE(in_arrangement(x, cp1));

  CoeffSystem clean{{poly({0, 0, 1}), poly({1, 0, 1})}};
  for (const auto& alpha : {kZero, GaussianRational(1), GaussianRational(Rational(0), Rational(1))}) {
    EXPECT_FALSE(in_arrangement(evaluate_jet(clean, 2, alpha), cp1));
  }
  // Where no f_i vanishes every block is nonzero.
  EXPECT_TRUE(in_polyhedral_product(evaluate_jet(clean, 1, GaussianRational(3)), SimplicialComplex(2, {})));

  RootSystem roots{{RootPoly{{{Complex(0, 0), 2}}}, RootPoly{{{Complex(0, 0), 2}}}}};
  EXPECT_TRUE(in_arrangement(evaluate_jet(roots, 2, Complex(0, 0)), cp1));
  EXPECT_FALSE(in_arrangement(evaluate_jet(clean, 2, Complex(0.25, -0.5)), cp1));
}
