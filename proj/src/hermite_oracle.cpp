#include "toric/hermite_oracle.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <string>

namespace toric {

namespace {

Rational falling(long i, long order) {
  Rational out(1);
  for (long j = 0; j < order; ++j) out *= (i - j);
  return out;
}

Rational power(const Rational& x, long e) {
  Rational out(1);
  for (long j = 0; j < e; ++j) out *= x;
  return out;
}

void check_points(const std::vector<Rational>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw InvalidInput("interpolation points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
}

}  // namespace

ExactMatrix confluent_vandermonde(const std::vector<Rational>& points, int order, int degree) {
  if (degree < 1) throw InvalidInput("degree must be >= 1");
  if (order < 0) throw InvalidInput("derivative order must be >= 0");
  check_points(points);
  const auto k = static_cast<Eigen::Index>(points.size());
  ExactMatrix m = ExactMatrix::Zero(k, degree);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (long i = order; i < degree; ++i) {
      m(j, i) = falling(i, order) * power(points[static_cast<std::size_t>(j)], i - order);
    }
  }
  return m;
}

ExactMatrix stacked_system(const std::vector<Rational>& points, int n, int degree) {
  if (n < 1) throw InvalidInput("order n must be >= 1");
  const auto k = static_cast<Eigen::Index>(points.size());
  ExactMatrix m(n * k, degree);
  for (int l = 0; l < n; ++l) m.middleRows(l * k, k) = confluent_vandermonde(points, l, degree);
  return m;
}

RankClaim verify_rank_claim(const std::vector<Rational>& points, int n, int degree) {
  RankClaim claim;
  claim.expected = static_cast<long>(n) * static_cast<long>(points.size());
  claim.regime = degree >= claim.expected;
  claim.rank = static_cast<long>(exact_rank(stacked_system(points, n, degree)));
  claim.holds = claim.rank == claim.expected;
  return claim;
}

HermiteSolution hermite_dimension(const HermiteSpec& spec) {
  const auto k = static_cast<Eigen::Index>(spec.points.size());
  if (spec.targets.size() != static_cast<std::size_t>(spec.order)) {
    throw ShapeMismatch("expected targets for " + std::to_string(spec.order) + " derivative orders");
  }
  for (const auto& row : spec.targets) {
    if (row.size() != spec.points.size()) throw ShapeMismatch("one target per point and order is required");
  }
  const ExactMatrix m = stacked_system(spec.points, spec.order, spec.degree);
  ExactVector rhs(m.rows());
  for (int l = 0; l < spec.order; ++l) {
    for (Eigen::Index j = 0; j < k; ++j) {
      // Move the contribution of the monic leading term z^d to the right-hand side.
      Rational lead = spec.degree >= l ? falling(spec.degree, l) * power(spec.points[static_cast<std::size_t>(j)],
                                                                           spec.degree - l)
                                       : Rational(0);
      rhs(l * k + j) = spec.targets[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] - lead;
    }
  }
  Eigen::Index rank = 0;
  const auto x = solve_exact<Rational>(m, rhs, &rank);
  if (!x) throw InternalError("Hermite system is inconsistent");
  HermiteSolution out;
  out.dimension = spec.degree - static_cast<long>(rank);
  out.particular.assign(x->data(), x->data() + x->size());
  return out;
}

long bundle_rank(const DegreeVector& degrees, int k, int n, int r) {
  return 2 * degrees.total() - 2L * n * r * k + k - 1;
}

std::vector<Rational> random_distinct_points(std::mt19937_64& rng, int k, int height) {
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, height);
  std::vector<Rational> points;
  while (static_cast<int>(points.size()) < k) {
    Rational x(num(rng), den(rng));
    if (std::find(points.begin(), points.end(), x) == points.end()) points.push_back(std::move(x));
  }
  return points;
}

}  // namespace toric
