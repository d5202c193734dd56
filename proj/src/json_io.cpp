#include "toric/json_io.hpp"

#include "toric/errors.hpp"

#include <fstream>
#include <sstream>

namespace toric {

namespace {

std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const Json& member(const Json& doc, const std::string& key, const std::string& base = "") {
  if (!doc.is_object()) throw ParseError(base.empty() ? "/" : base, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(base + "/" + key, "missing field");
  return *it;
}

const Json& array(const Json& doc, const std::string& pointer) {
  if (!doc.is_array()) throw ParseError(pointer, "expected an array");
  return doc;
}

Integer integer(const Json& v, const std::string& pointer) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::runtime_error&) {
    }
  }
  throw ParseError(pointer, "expected an integer");
}

int small_int(const Json& v, const std::string& pointer) {
  if (!v.is_number_integer()) throw ParseError(pointer, "expected an integer");
  const auto x = v.get<long long>();
  if (x < -(1LL << 30) || x > (1LL << 30)) throw ParseError(pointer, "integer out of range");
  return static_cast<int>(x);
}

Rational rational(const Json& v, const std::string& pointer) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw ParseError(pointer, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(pointer, e.what());
  }
}

double number(const Json& v, const std::string& pointer) {
  if (!v.is_number()) throw ParseError(pointer, "expected a number");
  return v.get<double>();
}

IndexSet index_list(const Json& v, const std::string& pointer, int limit) {
  array(v, pointer);
  std::vector<int> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int x = small_int(v[i], at(pointer, i));
    if (x < 0 || x >= limit) throw StructureError(at(pointer, i) + ": index " + std::to_string(x) + " out of range");
    idx.push_back(x);
  }
  return IndexSet::from_indices(idx);
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Fan fan_from_json(const Json& doc, bool close_faces) {
  const int dim = small_int(member(doc, "dim"), "/dim");
  if (dim < 1) throw ParseError("/dim", "dimension must be positive");
  const Json& rays_doc = array(member(doc, "rays"), "/rays");
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < rays_doc.size(); ++i) {
    const std::string p = at("/rays", i);
    const Json& ray = array(rays_doc[i], p);
    if (ray.size() != static_cast<std::size_t>(dim)) {
      throw ParseError(p, "expected " + std::to_string(dim) + " coordinates");
    }
    LatticeVector v(dim);
    for (std::size_t j = 0; j < ray.size(); ++j) v(static_cast<Eigen::Index>(j)) = integer(ray[j], at(p, j));
    rays.push_back(std::move(v));
  }
  if (rays.size() > static_cast<std::size_t>(IndexSet::kCapacity)) throw ParseError("/rays", "more than 64 rays");
  const Json& cones_doc = array(member(doc, "max_cones"), "/max_cones");
  std::vector<IndexSet> cones;
  for (std::size_t c = 0; c < cones_doc.size(); ++c) {
    cones.push_back(index_list(cones_doc[c], at("/max_cones", c), static_cast<int>(rays.size())));
  }
  return Fan::from_max_cones(dim, std::move(rays), cones, close_faces);
}

Json index_sets_to_json(const std::vector<IndexSet>& sets) {
  Json out = Json::array();
  for (IndexSet s : sets) out.push_back(s.to_vector());
  return out;
}

Json fan_to_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& v : fan.rays()) {
    Json ray = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) ray.push_back(integer_to_json(v(i)));
    rays.push_back(std::move(ray));
  }
  return Json{{"dim", fan.dim()}, {"rays", std::move(rays)}, {"max_cones", index_sets_to_json(fan.max_cones())}};
}

SimplicialComplex complex_from_json(const Json& doc) {
  const int n = small_int(member(doc, "vertices"), "/vertices");
  if (n < 0 || n > IndexSet::kCapacity) throw ParseError("/vertices", "vertex count must be in [0, 64]");
  const Json& faces_doc = array(member(doc, "max_faces"), "/max_faces");
  std::vector<IndexSet> faces;
  for (std::size_t f = 0; f < faces_doc.size(); ++f) faces.push_back(index_list(faces_doc[f], at("/max_faces", f), n));
  return SimplicialComplex(n, faces);
}

Json complex_to_json(const SimplicialComplex& k) {
  return Json{{"vertices", k.vertex_count()}, {"max_faces", index_sets_to_json(k.max_faces())}};
}

PolySystem system_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("/", "expected an object");
  if (doc.contains("roots")) {
    const Json& polys = array(doc["roots"], "/roots");
    RootSystem system;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const std::string p = at("/roots", i);
      RootPoly f;
      for (std::size_t j = 0; j < array(polys[i], p).size(); ++j) {
        const std::string q = at(p, j);
        const Json& entry = array(polys[i][j], q);
        if (entry.size() != 3) throw ParseError(q, "expected [re, im, mult]");
        const int mult = small_int(entry[2], at(q, 2));
        if (mult < 1) throw ParseError(at(q, 2), "multiplicity must be >= 1");
        f.roots.push_back({Complex(number(entry[0], at(q, 0)), number(entry[1], at(q, 1))), mult});
      }
      if (f.roots.empty()) throw ParseError(p, "polynomial of degree 0");
      system.polys.push_back(std::move(f));
    }
    if (doc.contains("degrees")) {
      const Json& deg = array(doc["degrees"], "/degrees");
      if (deg.size() != system.polys.size()) throw ParseError("/degrees", "one degree per polynomial");
      for (std::size_t i = 0; i < deg.size(); ++i) {
        if (small_int(deg[i], at("/degrees", i)) != system.polys[i].degree()) {
          throw ParseError(at("/degrees", i), "degree differs from the total root multiplicity");
        }
      }
    }
    return system;
  }

  const Json& polys = array(member(doc, "polys"), "/polys");
  CoeffSystem system;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const std::string p = at("/polys", i);
    std::vector<GaussianRational> coeffs;
    for (std::size_t j = 0; j < array(polys[i], p).size(); ++j) {
      const std::string q = at(p, j);
      const Json& c = polys[i][j];
      if (c.is_array()) {
        if (c.size() != 2) throw ParseError(q, "expected [re, im]");
        coeffs.emplace_back(rational(c[0], at(q, 0)), rational(c[1], at(q, 1)));
      } else {
        coeffs.emplace_back(rational(c, q));
      }
    }
    RationalPoly f(std::move(coeffs));
    if (!f.is_monic() || f.degree() < 1) throw ParseError(p, "polynomial must be monic of positive degree");
    system.polys.push_back(std::move(f));
  }
  if (doc.contains("degrees")) {
    const Json& deg = array(doc["degrees"], "/degrees");
    if (deg.size() != system.polys.size()) throw ParseError("/degrees", "one degree per polynomial");
    for (std::size_t i = 0; i < deg.size(); ++i) {
      if (small_int(deg[i], at("/degrees", i)) != system.polys[i].degree()) {
        throw ParseError(at("/degrees", i), "degree differs from the polynomial");
      }
    }
  }
  return system;
}

Json poly_to_json(const RationalPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(Json::array({to_string(c.re), to_string(c.im)}));
  return out;
}

Json complex_number_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json system_to_json(const CoeffSystem& system) {
  Json polys = Json::array();
  for (const auto& f : system.polys) polys.push_back(poly_to_json(f));
  return Json{{"degrees", system.degrees().entries()}, {"polys", std::move(polys)}};
}

Json system_to_json(const RootSystem& system) {
  Json polys = Json::array();
  for (const auto& f : system.polys) {
    Json roots = Json::array();
    for (const auto& root : f.roots) roots.push_back(Json::array({root.value.real(), root.value.imag(), root.multiplicity}));
    polys.push_back(std::move(roots));
  }
  return Json{{"degrees", system.degrees().entries()}, {"roots", std::move(polys)}};
}

}  // namespace toric
