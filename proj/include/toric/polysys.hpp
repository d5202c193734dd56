#ifndef TORIC_POLYSYS_HPP
#define TORIC_POLYSYS_HPP

#include "toric/exact.hpp"
#include "toric/lattice_fan.hpp"
#include "toric/polynomial.hpp"
#include "toric/stanley_reisner.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace toric {

using RationalPoly = Polynomial<GaussianRational>;
using FloatPoly = Polynomial<Complex>;

/// A root of a root-form polynomial together with its multiplicity.
struct RootEntry {
  Complex value;
  int multiplicity = 1;
};

/// Monic polynomial prod (z - value)^multiplicity.
struct RootPoly {
  std::vector<RootEntry> roots;

  long degree() const;
  FloatPoly expand() const;
};

/// Tuple of monic polynomials in coefficient form.
struct CoeffSystem {
  std::vector<RationalPoly> polys;

  DegreeVector degrees() const;
};

/// Tuple of monic polynomials in root form.
struct RootSystem {
  std::vector<RootPoly> polys;

  DegreeVector degrees() const;
};

using PolySystem = std::variant<CoeffSystem, RootSystem>;

/// The n-tuple F_n(f) = (f, f + f', ..., f + f^{(n-1)}).
template <typename Scalar>
std::vector<Polynomial<Scalar>> jet(const Polynomial<Scalar>& f, int n) {
  std::vector<Polynomial<Scalar>> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(f);
  for (int j = 1; j < n; ++j) out.push_back(f + derivative(f, static_cast<std::size_t>(j)));
  return out;
}

/// Monic gcd(f, f', ..., f^{(n-1)}): a root of multiplicity mu >= n in f appears with
/// multiplicity mu - n + 1, other roots do not appear.
RationalPoly mult_part(const RationalPoly& f, int n);

struct Membership {
  bool member = true;
  /// A primitive collection whose polynomials share a root of multiplicity >= n.
  std::optional<IndexSet> witness;
  /// Coefficient form: gcd over the witness of mult_part(f_i, n).
  std::optional<RationalPoly> common_factor;
  /// Root form: the shared root.
  std::optional<Complex> common_root;
};

/// Relative tolerance for identifying roots of root-form polynomials.
inline constexpr double kRootClusterTolerance = 1e-6;

/// Membership in Poly^{D,Σ}_n: no primitive collection shares a root of multiplicity >= n.
/// Throws ShapeMismatch when the system size differs from the ray count.
Membership is_member(const CoeffSystem& system, const Fan& fan, int n);
Membership is_member(const RootSystem& system, const Fan& fan, int n, double tolerance = kRootClusterTolerance);
Membership is_member(const PolySystem& system, const Fan& fan, int n);

/// N(D)
long n_of(const DegreeVector& degrees);

/// (N(D) - exp(-Re w)) + i Im w, a homeomorphism of C onto {Re w < N(D)}.
Complex phi_map(const DegreeVector& degrees, Complex w);

/// Anchor root N(D) + i for the i-th polynomial (1-based i).
Complex anchor_point(const DegreeVector& degrees, int i);

/// Stabilization s_{D,D+a}: roots pushed through phi_map, then the anchor root of f_i
/// appended with multiplicity a_i. Throws InvalidInput if a is zero or negative.
RootSystem stabilize(const RootSystem& system, const std::vector<long>& a);

/// f_b(z) = b_0 + sum_{k>=1} (b_k - b_0) z^k / k!, so that F_n(f_b)(0) = b.
RationalPoly jet_section(const std::vector<GaussianRational>& b);

/// Blocks F_n(f_i)(alpha). The Gaussian-rational overload evaluates exactly.
PointInProduct evaluate_jet(const CoeffSystem& system, int n, const GaussianRational& alpha);
PointInProduct evaluate_jet(const CoeffSystem& system, int n, Complex alpha);
PointInProduct evaluate_jet(const RootSystem& system, int n, Complex alpha);

/// prod (z - root)^mult over Gaussian rationals.
RationalPoly poly_from_roots(const std::vector<std::pair<GaussianRational, int>>& roots);

}  // namespace toric

#endif  // TORIC_POLYSYS_HPP
