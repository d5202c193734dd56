#ifndef TORIC_ORACLES_HPP
#define TORIC_ORACLES_HPP

// Seeded certification runs over random instances. Each suite checks an implementation
// route against an independent one and records every failing trial.

#include "toric/json_io.hpp"
#include "toric/lattice_fan.hpp"
#include "toric/polysys.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace toric {

struct OracleSummary {
  std::string suite;
  std::uint64_t seed = 0;
  long trials = 0;
  long failures = 0;
  /// Failing trials, ordered by trial index.
  Json failed = Json::array();
  /// Suite-specific aggregate information.
  Json info = Json::object();

  bool ok() const { return failures == 0; }
  Json to_json() const;
};

/// Named fans used by the batch suites: cp(1..3), hirzebruch(1..3) and a non-complete
/// subfan of hirzebruch(1).
std::vector<std::pair<std::string, Fan>> fixture_fans();

struct VandermondeOptions {
  int trials = 500;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> d;
  int height = 50;
};

/// rank(C_n) = nk, hermite_dimension = d - nk, and the particular solution satisfies every
/// interpolation condition when substituted back.
OracleSummary vandermonde_suite(std::uint64_t seed, const VandermondeOptions& options = {});

/// Brute-force A_t minima against the closed form and stability_dim + 2 on random
/// (D, Σ, n) with 1 <= d' <= max_d_prime, plus any explicit cases.
struct BandCase {
  std::string fan_name;
  Fan fan;
  DegreeVector degrees;
  int n = 2;
};
OracleSummary band_suite(std::uint64_t seed, int trials, const std::vector<BandCase>& explicit_cases = {},
                         long max_d_prime = 8);

/// in_polyhedral_product XOR in_arrangement over every zero-support pattern (r <= 12)
/// and random samples.
OracleSummary complement_suite(std::uint64_t seed, int samples_per_fan = 1000, int block_length = 2);

/// jet(jet_section(b), n) at 0 equals b exactly.
OracleSummary jetsection_suite(std::uint64_t seed, int trials = 100, int max_n = 6);

/// Planted multiplicity-n common roots are rejected and generic systems accepted by both
/// the exact gcd test and the root-multiset test.
OracleSummary membership_suite(std::uint64_t seed, int planted = 200, int generic = 200);

/// Stabilization preserves membership, adds a to the degrees, and composes additively.
OracleSummary stabilization_suite(std::uint64_t seed, int trials = 100);

/// A random system with Gaussian-rational roots in both representations.
struct DualSystem {
  CoeffSystem coeff;
  RootSystem roots;
  bool planted = false;
  std::optional<IndexSet> planted_on;
  GaussianRational planted_root;
};

/// With planted = true a multiplicity-n common root is placed on a random primitive
/// collection; otherwise every root value is distinct and has multiplicity < n.
DualSystem random_dual_system(std::mt19937_64& rng, const Fan& fan, int n, bool planted);

}  // namespace toric

#endif  // TORIC_ORACLES_HPP
