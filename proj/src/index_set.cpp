#include "toric/index_set.hpp"

#include "toric/errors.hpp"

#include <string>

namespace toric {

namespace {

std::uint64_t bit(int i) {
  if (i < 0 || i >= IndexSet::kCapacity) {
    throw StructureError("index " + std::to_string(i) + " outside [0, 64)");
  }
  return std::uint64_t{1} << i;
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> indices) {
  for (int i : indices) bits_ |= bit(i);
}

IndexSet IndexSet::from_indices(const std::vector<int>& indices) {
  std::uint64_t bits = 0;
  for (int i : indices) bits |= bit(i);
  return IndexSet(bits);
}

IndexSet IndexSet::full(int count) {
  if (count < 0 || count > kCapacity) throw StructureError("vertex count " + std::to_string(count) + " unsupported");
  return IndexSet(count == kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
}

std::vector<int> IndexSet::to_vector() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

}  // namespace toric
