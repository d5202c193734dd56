#include "toric/stability_calc.hpp"

#include "toric/errors.hpp"
#include "toric/hermite_oracle.hpp"
#include "toric/stanley_reisner.hpp"

#include <limits>
#include <string>

namespace toric {

namespace {

void check_degrees(const DegreeVector& degrees, const Fan& fan) {
  if (static_cast<int>(degrees.size()) != fan.ray_count()) {
    throw ShapeMismatch("degree vector has " + std::to_string(degrees.size()) + " entries, fan has " +
                        std::to_string(fan.ray_count()) + " rays");
  }
}

void require_n2(int n) {
  if (n < 2) throw InvalidInput("this quantity is defined for n >= 2; use stability_dim_n1 for n = 1");
}

}  // namespace

long stability_dim(const DegreeVector& degrees, const Fan& fan, int n) {
  require_n2(n);
  check_degrees(degrees, fan);
  const long d_prime = degrees.min() / n;
  return (2L * n * r_min(fan) - 3) * d_prime - 2;
}

StabilityN1 stability_dim_n1(const DegreeVector& degrees, const Fan& fan) {
  check_degrees(degrees, fan);
  const int rm = r_min(fan);
  if (rm == 2) return {degrees.min() - 2, EquivalenceKind::homology};
  return {(2L * rm - 3) * degrees.min() - 2, EquivalenceKind::homotopy};
}

long stability_dim_projective(long d, int m, int n) {
  if (m == 1 && n == 1) throw InvalidInput("(m, n) = (1, 1) is excluded");
  if (d < 1 || m < 1 || n < 1) throw InvalidInput("d, m and n must be positive");
  return (2L * m * n - 3) * (d / n + 1) - 1;
}

long connectivity_bound(const Fan& fan, int n) {
  require_n2(n);
  return 2L * n * r_min(fan) - 5;
}

StabilityReport stability_report(const DegreeVector& degrees, const Fan& fan, int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  check_degrees(degrees, fan);
  StabilityReport report;
  report.n = n;
  report.r_min = r_min(fan);
  report.d_min = degrees.min();
  report.d_prime = report.d_min / n;
  report.degree_null = degree_is_null(fan, degrees);
  if (n == 1) {
    const auto n1 = stability_dim_n1(degrees, fan);
    report.stability_dim = n1.dimension;
    report.homotopy = n1.kind == EquivalenceKind::homotopy;
  } else {
    report.stability_dim = stability_dim(degrees, fan, n);
    report.connectivity = connectivity_bound(fan, n);
  }
  return report;
}

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::zero:
      return "zero";
    case CellStatus::possibly_nonzero:
      return "possibly_nonzero";
    case CellStatus::tail_unknown:
      return "tail_unknown";
  }
  return "?";
}

CellStatus E1Support::status(long k, long s) const {
  if (k < 0 || k > d_prime + 1) return CellStatus::zero;
  if (s < s_lo || s > s_hi) throw InvalidInput("s = " + std::to_string(s) + " is outside the table window");
  return cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(s - s_lo)];
}

E1Support e1_support(const DegreeVector& degrees, const Fan& fan, int n, std::optional<long> s_lo,
                     std::optional<long> s_hi) {
  require_n2(n);
  check_degrees(degrees, fan);
  const long rm = r_min(fan);
  const long r = fan.ray_count();
  E1Support table;
  table.d_prime = degrees.min() / n;
  table.s_lo = s_lo.value_or(0);
  table.s_hi = s_hi.value_or(stability_dim(degrees, fan, n) + 2L * n * rm + 4);
  if (table.s_hi < table.s_lo) throw InvalidInput("empty s window");

  const long slope = 2L * n * rm - 2;
  for (long k = 0; k <= table.d_prime + 1; ++k) {
    std::vector<CellStatus> row;
    const long config_dim = k >= 1 ? dim_config(fan, n, static_cast<int>(k)) : 0;
    for (long s = table.s_lo; s <= table.s_hi; ++s) {
      CellStatus status = CellStatus::possibly_nonzero;
      if (k == 0) {
        status = s == 0 ? CellStatus::possibly_nonzero : CellStatus::zero;
      } else if (k <= table.d_prime) {
        const long degree = 2L * n * r * k - s;  // cohomological degree on C_{k;Σ}
        if (s <= slope * k - 1 || degree < 0 || degree > config_dim) status = CellStatus::zero;
      } else {
        status = s <= slope * table.d_prime - 1 ? CellStatus::zero : CellStatus::tail_unknown;
      }
      row.push_back(status);
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

namespace {

// Sums of strictly increasing tuples 1 <= l_1 < ... < l_t with sum <= limit.
void tuple_sums(int t, long smallest, long partial, long limit, std::vector<bool>& seen) {
  if (t == 0) {
    seen[static_cast<std::size_t>(partial)] = true;
    return;
  }
  for (long l = smallest; partial + l <= limit; ++l) tuple_sums(t - 1, l + 1, partial + l, limit, seen);
}

}  // namespace

BandResult min_unknown_band(const DegreeVector& degrees, const Fan& fan, int n) {
  require_n2(n);
  check_degrees(degrees, fan);
  const long d_prime = degrees.min() / n;
  if (d_prime > kBandEnumerationCap) {
    throw CapExceeded("d' = " + std::to_string(d_prime) + " exceeds the band enumeration cap of " +
                      std::to_string(kBandEnumerationCap));
  }
  BandResult result;
  result.stability_dim = stability_dim(degrees, fan, n);
  if (d_prime < 1) {
    result.agrees = true;
    return result;
  }
  const long rm = r_min(fan);
  const long edge = (2L * n * rm - 2) * d_prime;  // v + sum(l_j - 1) >= edge
  const long total = d_prime + 1;                 // u + sum l_j = total

  long overall = std::numeric_limits<long>::max();
  bool agrees = true;
  for (int t = 1; static_cast<long>(t) * (t + 1) / 2 <= total; ++t) {
    std::vector<bool> achievable(static_cast<std::size_t>(total + 1), false);
    tuple_sums(t, 1, 0, total, achievable);
    long best = std::numeric_limits<long>::max();
    for (long u = 0; u <= d_prime; ++u) {
      const long sum = total - u;
      if (!achievable[static_cast<std::size_t>(sum)]) continue;
      for (long v = 0; v <= edge; ++v) {
        if (v + (sum - t) >= edge) {
          best = std::min(best, v - u);
          break;
        }
      }
    }
    if (best == std::numeric_limits<long>::max()) continue;
    BandTerm term{t, best, (2L * n * rm - 3) * d_prime + t - 1};
    agrees = agrees && term.brute_force == term.closed_form;
    overall = std::min(overall, best);
    result.terms.push_back(term);
  }
  result.min_band = overall;
  result.agrees = agrees && overall == result.stability_dim + 2;
  return result;
}

TruncationDim truncation_dim(const DegreeVector& degrees, const Fan& fan, int n) {
  require_n2(n);
  check_degrees(degrees, fan);
  const long d_prime = degrees.min() / n;
  if (d_prime < 1) throw InvalidInput("truncation dimension needs ⌊d_min/n⌋ >= 1");
  const long rm = r_min(fan);
  TruncationDim out;
  out.direct = 2 * degrees.total() + 3 * d_prime - 2L * n * rm * d_prime;
  out.bundle_rank = bundle_rank(degrees, static_cast<int>(d_prime), n, fan.ray_count());
  out.config_dim = dim_config(fan, n, static_cast<int>(d_prime));
  out.decomposed = out.bundle_rank + out.config_dim + 1;
  if (out.direct != out.decomposed) throw InternalError("truncation dimension formulas disagree");
  return out;
}

}  // namespace toric
