#include "toric/stanley_reisner.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace toric {

SimplicialComplex underlying_complex(const Fan& fan) {
  return SimplicialComplex::from_faces(fan.ray_count(), fan.cones());
}

NonFaceFamily::NonFaceFamily(int vertex_count, std::vector<IndexSet> minimal)
    : vertex_count_(SimplicialComplex::checked_vertex_count(vertex_count)), minimal_(std::move(minimal)) {
  std::sort(minimal_.begin(), minimal_.end());
}

bool NonFaceFamily::contains(IndexSet s) const {
  return std::any_of(minimal_.begin(), minimal_.end(), [&](IndexSet m) { return m.subset_of(s); });
}

FaceSet NonFaceFamily::materialize() const {
  if (vertex_count_ > kMaxMaterializedVertices) {
    throw CapExceeded("non-face family on " + std::to_string(vertex_count_) + " vertices is not materialized");
  }
  FaceSet out;
  for_each([&](IndexSet s) { out.insert(s); });
  return out;
}

std::vector<IndexSet> minimal_non_faces(const SimplicialComplex& k) {
  // A minimal non-face minus any vertex is a face, so it has the form τ ∪ {v}.
  FaceSet found;
  for (IndexSet face : k.faces()) {
    for (int v = 0; v < k.vertex_count(); ++v) {
      if (face.contains(v)) continue;
      const IndexSet candidate = face.with(v);
      if (k.contains(candidate) || found.count(candidate) != 0) continue;
      const auto members = candidate.to_vector();
      if (std::all_of(members.begin(), members.end(), [&](int u) { return k.contains(candidate.without(u)); })) {
        found.insert(candidate);
      }
    }
  }
  return {found.begin(), found.end()};
}

NonFaceFamily non_faces(const SimplicialComplex& k) { return NonFaceFamily(k.vertex_count(), minimal_non_faces(k)); }

std::vector<IndexSet> primitive_collections(const Fan& fan) { return minimal_non_faces(underlying_complex(fan)); }

int r_min(const Fan& fan) {
  const auto prim = primitive_collections(fan);
  if (prim.empty()) throw UndefinedValue("r_min is undefined: the fan has no primitive collection");
  // IndexSet order is by cardinality first.
  return prim.front().size();
}

SimplicialComplex complex_power(const SimplicialComplex& k, int n) {
  if (n < 1) throw InvalidInput("power must be positive");
  const int r = k.vertex_count();
  if (r * n > IndexSet::kCapacity) throw CapExceeded("r*n exceeds 64 vertices");
  std::vector<IndexSet> blocked;
  for (IndexSet sigma : minimal_non_faces(k)) {
    IndexSet block;
    for (int i : sigma.to_vector()) {
      for (int j = 0; j < n; ++j) block = block.with(i * n + j);
    }
    blocked.push_back(block);
  }
  return SimplicialComplex::from_predicate(r * n, [&](IndexSet tau) {
    return std::none_of(blocked.begin(), blocked.end(), [&](IndexSet b) { return b.subset_of(tau); });
  });
}

long dim_arrangement(const Fan& fan, int n) { return 2L * n * (fan.ray_count() - r_min(fan)); }

long dim_config(const Fan& fan, int n, int k) {
  return 2L * k * (1L + static_cast<long>(n) * fan.ray_count() - static_cast<long>(n) * r_min(fan));
}

IndexSet PointInProduct::zero_support(double tolerance) const {
  if (blocks.size() > static_cast<std::size_t>(IndexSet::kCapacity)) throw StructureError("more than 64 blocks");
  const std::size_t width = blocks.empty() ? 0 : blocks.front().size();
  IndexSet support;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != width) throw ShapeMismatch("block " + std::to_string(i) + " has a different length");
    double norm = 0.0;
    for (const auto& z : blocks[i]) norm = std::max(norm, std::abs(z));
    if (norm <= tolerance) support = support.with(static_cast<int>(i));
  }
  return support;
}

bool in_polyhedral_product(const PointInProduct& x, const SimplicialComplex& k, double tolerance) {
  if (static_cast<int>(x.block_count()) != k.vertex_count()) {
    throw ShapeMismatch("point has " + std::to_string(x.block_count()) + " blocks, complex has " +
                        std::to_string(k.vertex_count()) + " vertices");
  }
  return k.contains(x.zero_support(tolerance));
}

bool in_arrangement(const PointInProduct& x, const std::vector<IndexSet>& primitive, double tolerance) {
  const IndexSet support = x.zero_support(tolerance);
  return std::any_of(primitive.begin(), primitive.end(), [&](IndexSet s) { return s.subset_of(support); });
}

bool in_arrangement(const PointInProduct& x, const Fan& fan, double tolerance) {
  if (static_cast<int>(x.block_count()) != fan.ray_count()) {
    throw ShapeMismatch("point has " + std::to_string(x.block_count()) + " blocks, fan has " +
                        std::to_string(fan.ray_count()) + " rays");
  }
  return in_arrangement(x, primitive_collections(fan), tolerance);
}

}  // namespace toric
