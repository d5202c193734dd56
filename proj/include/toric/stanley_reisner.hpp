#ifndef TORIC_STANLEY_REISNER_HPP
#define TORIC_STANLEY_REISNER_HPP

#include "toric/lattice_fan.hpp"
#include "toric/simplicial_complex.hpp"

#include <vector>

namespace toric {

/// K_Σ: the ray subsets spanning a cone of the fan.
SimplicialComplex underlying_complex(const Fan& fan);

/// Largest vertex count for which the full non-face family is materialized.
inline constexpr int kMaxMaterializedVertices = 24;

/// I(K) = {σ ⊂ [r] : σ ∉ K}. Upward closed, so it is represented by its minimal
/// elements; the full family is materialized on request for r <= 24.
class NonFaceFamily {
 public:
  NonFaceFamily(int vertex_count, std::vector<IndexSet> minimal);

  int vertex_count() const { return vertex_count_; }
  /// Minimal non-faces, in IndexSet order.
  const std::vector<IndexSet>& minimal() const { return minimal_; }
  bool contains(IndexSet s) const;
  /// Every non-face. Throws CapExceeded when vertex_count > 24.
  FaceSet materialize() const;

  /// Streams every non-face in increasing bitmask order.
  template <typename F>
  void for_each(F&& f) const {
    const std::uint64_t end = std::uint64_t{1} << vertex_count_;
    for (std::uint64_t bits = 0; bits < end; ++bits) {
      const IndexSet s(bits);
      if (contains(s)) f(s);
    }
  }

 private:
  int vertex_count_;
  std::vector<IndexSet> minimal_;
};

std::vector<IndexSet> minimal_non_faces(const SimplicialComplex& k);
NonFaceFamily non_faces(const SimplicialComplex& k);

/// Pr(Σ): minimal ray subsets that span no cone.
std::vector<IndexSet> primitive_collections(const Fan& fan);

/// Minimum size of a primitive collection. Throws UndefinedValue when there is none.
int r_min(const Fan& fan);

/// K(n) on [r] x [n] (vertex (i, j) -> i*n + j): sets containing no σ x [n] with σ a
/// minimal non-face of K.
SimplicialComplex complex_power(const SimplicialComplex& k, int n);

/// Real dimension of the coordinate arrangement L_n(Σ): 2n(r - r_min).
long dim_arrangement(const Fan& fan, int n);

/// Real dimension of the configuration space C_{k;Σ}: 2k(1 + nr - n r_min).
long dim_config(const Fan& fan, int n, int k);

/// A point (x_1, ..., x_r) of (C^n)^r.
struct PointInProduct {
  std::vector<std::vector<Complex>> blocks;

  std::size_t block_count() const { return blocks.size(); }
  /// {i : |x_i| <= tolerance}; tolerance 0 is the exact test.
  IndexSet zero_support(double tolerance = 0.0) const;
};

/// Zero tolerance for points produced by sampling rather than construction.
inline constexpr double kSampledZeroTolerance = 1e-12;

/// x ∈ Z_K(C^n, (C^n)*), i.e. the zero support of x is a face of K.
bool in_polyhedral_product(const PointInProduct& x, const SimplicialComplex& k, double tolerance = 0.0);

/// x ∈ L_n(Σ), i.e. the zero support contains a primitive collection.
bool in_arrangement(const PointInProduct& x, const Fan& fan, double tolerance = 0.0);
/// Same test against precomputed primitive collections.
bool in_arrangement(const PointInProduct& x, const std::vector<IndexSet>& primitive, double tolerance = 0.0);

}  // namespace toric

#endif  // TORIC_STANLEY_REISNER_HPP
