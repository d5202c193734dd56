#ifndef TORIC_SIMPLICIAL_COMPLEX_HPP
#define TORIC_SIMPLICIAL_COMPLEX_HPP

#include "toric/errors.hpp"
#include "toric/index_set.hpp"

#include <set>
#include <vector>

namespace toric {

using FaceSet = std::set<IndexSet>;

/// Abstract simplicial complex on the vertex set {0, ..., vertex_count-1}. The face set
/// always contains the empty face and is closed under taking subsets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Complex generated by the given faces (subset closure is taken).
  SimplicialComplex(int vertex_count, const std::vector<IndexSet>& generating_faces);

  /// Wraps an explicit face set. Throws StructureError if it is not subset-closed.
  static SimplicialComplex from_faces(int vertex_count, FaceSet faces);

  /// Complex of all sets satisfying a subset-closed predicate; enumerated depth-first in
  /// increasing vertex order so only faces are visited.
  template <typename IsFace>
  static SimplicialComplex from_predicate(int vertex_count, IsFace&& is_face) {
    SimplicialComplex k;
    k.vertex_count_ = checked_vertex_count(vertex_count);
    std::vector<IndexSet> stack{IndexSet{}};
    while (!stack.empty()) {
      const IndexSet face = stack.back();
      stack.pop_back();
      k.faces_.insert(face);
      for (int v = face.span(); v < vertex_count; ++v) {
        const IndexSet next = face.with(v);
        if (is_face(next)) stack.push_back(next);
      }
    }
    return k;
  }

  int vertex_count() const { return vertex_count_; }
  const FaceSet& faces() const { return faces_; }
  bool contains(IndexSet s) const { return faces_.count(s) != 0; }
  std::vector<IndexSet> max_faces() const;
  /// Dimension of the largest face (-1 for the complex {∅}).
  int dimension() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  static int checked_vertex_count(int vertex_count);

 private:
  int vertex_count_ = 0;
  FaceSet faces_{IndexSet{}};
};

}  // namespace toric

#endif  // TORIC_SIMPLICIAL_COMPLEX_HPP
