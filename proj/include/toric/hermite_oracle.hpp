#ifndef TORIC_HERMITE_ORACLE_HPP
#define TORIC_HERMITE_ORACLE_HPP

#include "toric/exact.hpp"
#include "toric/lattice_fan.hpp"
#include "toric/linalg.hpp"

#include <random>
#include <vector>

namespace toric {

/// Rows j: coefficients of a_0, ..., a_{d-1} in f^{(l)}(x_j), f = z^d + sum a_i z^i.
/// Throws InvalidInput on repeated points or d < 1.
ExactMatrix confluent_vandermonde(const std::vector<Rational>& points, int order, int degree);

/// The nk x d matrix stacking orders 0, ..., n-1.
ExactMatrix stacked_system(const std::vector<Rational>& points, int n, int degree);

struct RankClaim {
  long rank = 0;
  long expected = 0;  // n*k
  bool regime = true;  // d >= n*k
  bool holds = false;  // rank == n*k
};

/// Checks rank(stacked_system) == nk. Outside the regime the check still runs.
RankClaim verify_rank_claim(const std::vector<Rational>& points, int n, int degree);

/// Hermite data f^{(l)}(x_j) = targets[l][j] for monic f of the given degree.
struct HermiteSpec {
  std::vector<Rational> points;
  int order = 1;  // n
  int degree = 1;
  std::vector<std::vector<Rational>> targets;  // [l][j]
};

struct HermiteSolution {
  long dimension = 0;
  /// Coefficients a_0, ..., a_{d-1} of one solution (free variables set to zero).
  std::vector<Rational> particular;
};

/// Dimension of the affine space of monic solutions, by exact Gauss-Jordan on the
/// augmented system. Throws InternalError if the system is inconsistent.
HermiteSolution hermite_dimension(const HermiteSpec& spec);

/// l_{D,k,n} = 2N(D) - 2nrk + k - 1.
long bundle_rank(const DegreeVector& degrees, int k, int n, int r);

/// k distinct rationals with numerator in [-height, height] and denominator in [1, height].
std::vector<Rational> random_distinct_points(std::mt19937_64& rng, int k, int height = 50);

}  // namespace toric

#endif  // TORIC_HERMITE_ORACLE_HPP
