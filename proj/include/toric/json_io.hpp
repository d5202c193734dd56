#ifndef TORIC_JSON_IO_HPP
#define TORIC_JSON_IO_HPP

#include "toric/lattice_fan.hpp"
#include "toric/polysys.hpp"
#include "toric/simplicial_complex.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace toric {

using Json = nlohmann::json;

/// Malformed input document; `pointer` is a JSON pointer to the offending value.
struct ParseError : std::runtime_error {
  ParseError(std::string pointer_, const std::string& message)
      : std::runtime_error(pointer_ + ": " + message), pointer(std::move(pointer_)) {}
  std::string pointer;
};

/// Parses text, mapping syntax errors to ParseError with pointer "".
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// {"dim": m, "rays": [[int, ...], ...], "max_cones": [[rayIdx, ...], ...]}, 0-based indices.
/// Integers may also be given as decimal strings. Out-of-range ray indices raise StructureError.
Fan fan_from_json(const Json& doc, bool close_faces = true);
Json fan_to_json(const Fan& fan);

/// {"vertices": N, "max_faces": [[...], ...]}
SimplicialComplex complex_from_json(const Json& doc);
Json complex_to_json(const SimplicialComplex& k);

/// Coefficient form {"degrees": [...], "polys": [[["p/q", "p/q"], ...], ...]} (ascending,
/// pairs are real and imaginary parts) or root form {"roots": [[[re, im, mult], ...], ...]}.
PolySystem system_from_json(const Json& doc);
Json system_to_json(const CoeffSystem& system);
Json system_to_json(const RootSystem& system);

Json index_sets_to_json(const std::vector<IndexSet>& sets);
Json poly_to_json(const RationalPoly& f);
Json complex_number_to_json(Complex z);

}  // namespace toric

#endif  // TORIC_JSON_IO_HPP
