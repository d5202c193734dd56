#include "toric/simplicial_complex.hpp"

#include <string>

namespace toric {

int SimplicialComplex::checked_vertex_count(int vertex_count) {
  if (vertex_count < 0 || vertex_count > IndexSet::kCapacity) {
    throw StructureError("vertex count " + std::to_string(vertex_count) + " outside [0, 64]");
  }
  return vertex_count;
}

SimplicialComplex::SimplicialComplex(int vertex_count, const std::vector<IndexSet>& generating_faces)
    : vertex_count_(checked_vertex_count(vertex_count)) {
  const IndexSet all = IndexSet::full(vertex_count);
  for (IndexSet face : generating_faces) {
    if (!face.subset_of(all)) throw StructureError("face uses a vertex outside [0, vertex_count)");
    if (faces_.count(face) != 0) continue;
    face.for_each_subset([&](IndexSet s) { faces_.insert(s); });
  }
}

SimplicialComplex SimplicialComplex::from_faces(int vertex_count, FaceSet faces) {
  SimplicialComplex k;
  k.vertex_count_ = checked_vertex_count(vertex_count);
  const IndexSet all = IndexSet::full(vertex_count);
  faces.insert(IndexSet{});
  for (IndexSet face : faces) {
    if (!face.subset_of(all)) throw StructureError("face uses a vertex outside [0, vertex_count)");
    for (int v : face.to_vector()) {
      if (faces.count(face.without(v)) == 0) throw StructureError("face set is not closed under subsets");
    }
  }
  k.faces_ = std::move(faces);
  return k;
}

std::vector<IndexSet> SimplicialComplex::max_faces() const {
  std::vector<IndexSet> out;
  for (IndexSet face : faces_) {
    bool maximal = true;
    for (int v = 0; v < vertex_count_ && maximal; ++v) {
      if (!face.contains(v) && contains(face.with(v))) maximal = false;
    }
    if (maximal) out.push_back(face);
  }
  return out;
}

int SimplicialComplex::dimension() const { return faces_.rbegin()->size() - 1; }

}  // namespace toric
