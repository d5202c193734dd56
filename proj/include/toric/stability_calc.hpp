#ifndef TORIC_STABILITY_CALC_HPP
#define TORIC_STABILITY_CALC_HPP

#include "toric/lattice_fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Largest ⌊d_min/n⌋ for which the A_t bands are enumerated.
inline constexpr long kBandEnumerationCap = 12;

struct StabilityReport {
  int n = 0;
  int r_min = 0;
  long d_min = 0;
  long d_prime = 0;  // ⌊d_min/n⌋
  long stability_dim = 0;
  std::optional<long> connectivity;  // n >= 2 only
  bool degree_null = false;
  bool homotopy = true;  // false: only a homology equivalence is granted (n = 1, r_min = 2)
};

/// (2n r_min - 3)⌊d_min/n⌋ - 2 for n >= 2. Throws InvalidInput for n <= 1.
long stability_dim(const DegreeVector& degrees, const Fan& fan, int n);

enum class EquivalenceKind { homotopy, homology };

struct StabilityN1 {
  long dimension = 0;
  EquivalenceKind kind = EquivalenceKind::homotopy;
};

/// n = 1: (2 r_min - 3) d_min - 2 (homotopy) if r_min >= 3, d_min - 2 (homology) if r_min = 2.
StabilityN1 stability_dim_n1(const DegreeVector& degrees, const Fan& fan);

/// (2mn - 3)(⌊d/n⌋ + 1) - 1. Throws InvalidInput for (m, n) = (1, 1).
long stability_dim_projective(long d, int m, int n);

/// 2n r_min - 5.
long connectivity_bound(const Fan& fan, int n);

StabilityReport stability_report(const DegreeVector& degrees, const Fan& fan, int n);

enum class CellStatus { zero, possibly_nonzero, tail_unknown };
std::string to_string(CellStatus status);

/// Vanishing pattern of E^1_{k,s} for 0 <= k <= d'+1 and s in [s_lo, s_hi].
struct E1Support {
  long d_prime = 0;
  long s_lo = 0;
  long s_hi = 0;
  std::vector<std::vector<CellStatus>> cells;  // [k][s - s_lo]

  /// Status of any cell; k outside [0, d'+1] is zero, s outside the window throws.
  CellStatus status(long k, long s) const;
};

/// Labels cells by the E1 vanishing conditions. Default window: [0, stability_dim + 2n r_min + 4].
E1Support e1_support(const DegreeVector& degrees, const Fan& fan, int n, std::optional<long> s_lo = std::nullopt,
                     std::optional<long> s_hi = std::nullopt);

struct BandTerm {
  int t = 0;
  long brute_force = 0;  // min{s - k : (k, s) in A_t} by enumeration
  long closed_form = 0;  // (2n r_min - 3) d' + t - 1
};

struct BandResult {
  /// min over all t of the brute-force minima; empty when d' = 0 ("no band").
  std::optional<long> min_band;
  long stability_dim = 0;
  std::vector<BandTerm> terms;
  /// Brute force equals the closed form for every t and min_band == stability_dim + 2.
  bool agrees = false;
};

/// Enumerates A_t over the cells 0 <= k <= d', 0 <= s <= (2n r_min - 2)d'.
/// Throws CapExceeded when d' > 12.
BandResult min_unknown_band(const DegreeVector& degrees, const Fan& fan, int n);

struct TruncationDim {
  long direct = 0;      // 2N(D) + 3d' - 2n r_min d'
  long decomposed = 0;  // l_{D,d',n} + dim C_{d';Σ} + 1
  long bundle_rank = 0;
  long config_dim = 0;
};

/// Throws InvalidInput if d' < 1, InternalError if the two expressions disagree.
TruncationDim truncation_dim(const DegreeVector& degrees, const Fan& fan, int n);

}  // namespace toric

#endif  // TORIC_STABILITY_CALC_HPP
