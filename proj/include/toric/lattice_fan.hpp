#ifndef TORIC_LATTICE_FAN_HPP
#define TORIC_LATTICE_FAN_HPP

#include "toric/exact.hpp"
#include "toric/index_set.hpp"
#include "toric/simplicial_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

using LatticeVector = IntVector;

/// Degrees d_1, ..., d_r of the polynomials in a system; every entry is at least 1.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<long> entries);

  std::size_t size() const { return entries_.size(); }
  long operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<long>& entries() const { return entries_; }
  long min() const;
  /// N(D), the total degree.
  long total() const;

  friend DegreeVector operator+(const DegreeVector& a, const std::vector<long>& shift);
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<long> entries_;
};

/// Rational polyhedral fan with simplicial cones. Cones are index sets into the ray list;
/// the zero cone is the empty set.
class Fan {
 public:
  /// Builds a fan from its maximal cones. With close_faces = false the given cones are
  /// stored verbatim, which lets validate_fan see face-closure violations.
  /// Throws StructureError on dimension mismatches or out-of-range ray indices.
  static Fan from_max_cones(int dim, std::vector<LatticeVector> rays, const std::vector<IndexSet>& max_cones,
                            bool close_faces = true);
  /// Fan whose cones are the faces of a complex on the ray indices.
  static Fan from_complex(int dim, std::vector<LatticeVector> rays, const SimplicialComplex& complex);

  int dim() const { return dim_; }
  int ray_count() const { return static_cast<int>(rays_.size()); }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const FaceSet& cones() const { return cones_; }
  bool has_cone(IndexSet cone) const { return cones_.count(cone) != 0; }
  std::vector<IndexSet> max_cones() const;

  /// m x r matrix with the rays as columns.
  IntMatrix ray_matrix() const;
  /// s x m matrix with the generators of the cone as rows.
  IntMatrix generator_matrix(IndexSet cone) const;

  friend bool operator==(const Fan& a, const Fan& b);

 private:
  int dim_ = 0;
  std::vector<LatticeVector> rays_;
  FaceSet cones_;
};

LatticeVector make_vector(const std::vector<long>& coords);

/// Divides a nonzero integer vector by the gcd of its entries. Throws InvalidInput on 0.
LatticeVector primitive_ray(const LatticeVector& v);

struct Violation {
  std::string axiom;  // "primitive", "simplicial", "strong_convexity", "face_closure", ...
  std::vector<int> cone;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks the fan axioms and the artifact's standing assumptions: primitive rays, each
/// ray spans a cone, simplicial and strongly convex cones, face closure, and that any two
/// maximal cones meet in a common face. Convexity questions are decided by exact LP.
ValidationReport validate_fan(const Fan& fan);

/// True iff the cone spanned by the given rays meets its negative only in 0.
bool is_strongly_convex(const Fan& fan, IndexSet cone);

enum class Completeness { complete, incomplete, unknown };

/// Support equals R^m. m <= 2 by exact angular sweep; m >= 3 by facet pairing on pure
/// full-dimensional fans, `unknown` for mixed-dimension fans.
Completeness completeness(const Fan& fan);
inline bool is_complete(const Fan& fan) { return completeness(fan) == Completeness::complete; }

/// Every cone's generators extend to a Z-basis (all Smith invariants equal 1).
bool is_smooth(const Fan& fan);

/// The rays generate Z^m as a group.
bool spans_lattice(const Fan& fan);

/// sum_k d_k n_k == 0. Throws ShapeMismatch if |D| != r.
bool degree_is_null(const Fan& fan, const DegreeVector& degrees);

struct DegreeSearch {
  std::optional<DegreeVector> degrees;
  /// A positive kernel vector exists but its primitive representative exceeds the bound.
  bool bound_hit = false;
  long bound = 0;
};

/// Some strictly positive integer vector in the kernel of the ray matrix. The default
/// coordinate bound is 10 * r.
DegreeSearch find_degree_vector(const Fan& fan, std::optional<long> coordinate_bound = std::nullopt);

/// Rows form a Z-basis of {q in Z^r : sum_k q_k n_k = 0}.
IntMatrix cox_relations(const Fan& fan);

/// r - m, the rank of the torus G_Σ. Throws UnsupportedFan if the rays do not span Z^m.
int cox_group_rank(const Fan& fan);

/// mu_k = prod_j t_j^{Q[j][k]}, an element of G_Σ in (C*)^r.
std::vector<Complex> cox_group_sample(const Fan& fan, const std::vector<Complex>& parameters);

/// Fan in R^{mn} with rays n_{i,j} (ray i placed in block j, vertex index i*n + j) and one
/// cone per face of K_Σ(n). For n >= 2 the result is generally not a geometric fan;
/// validate_fan reports where it fails.
Fan fan_power(const Fan& fan, int n);

/// "cp(m)", "hirzebruch(k)" or "affine(m)". Throws InvalidInput on unknown names.
Fan builtin_fan(const std::string& name);
Fan cp_fan(int m);
Fan hirzebruch_fan(int k);
Fan affine_fan(int m);

}  // namespace toric

#endif  // TORIC_LATTICE_FAN_HPP
