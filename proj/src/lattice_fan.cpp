#include "toric/lattice_fan.hpp"

#include "toric/errors.hpp"
#include "toric/linalg.hpp"
#include "toric/stanley_reisner.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <string>

namespace toric {

// ---------------------------------------------------------------------------
// DegreeVector

DegreeVector::DegreeVector(std::vector<long> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw InvalidInput("degree d_" + std::to_string(i + 1) + " must be >= 1");
  }
}

long DegreeVector::min() const {
  if (entries_.empty()) throw InvalidInput("empty degree vector");
  return *std::min_element(entries_.begin(), entries_.end());
}

long DegreeVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

DegreeVector operator+(const DegreeVector& a, const std::vector<long>& shift) {
  if (shift.size() != a.size()) throw ShapeMismatch("degree shift has the wrong length");
  std::vector<long> out = a.entries_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (shift[i] < 0) throw InvalidInput("degree shift must be nonnegative");
    out[i] += shift[i];
  }
  return DegreeVector(std::move(out));
}

// ---------------------------------------------------------------------------
// Fan

namespace {

void check_rays(int dim, const std::vector<LatticeVector>& rays) {
  if (dim < 1) throw StructureError("fan dimension must be positive");
  if (rays.size() > static_cast<std::size_t>(IndexSet::kCapacity)) throw StructureError("more than 64 rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != dim) {
      throw StructureError("/rays/" + std::to_string(i) + ": expected " + std::to_string(dim) + " coordinates");
    }
  }
}

std::vector<int> as_list(IndexSet s) { return s.to_vector(); }

}  // namespace

Fan Fan::from_max_cones(int dim, std::vector<LatticeVector> rays, const std::vector<IndexSet>& max_cones,
                        bool close_faces) {
  check_rays(dim, rays);
  Fan fan;
  fan.dim_ = dim;
  fan.rays_ = std::move(rays);
  const IndexSet all = IndexSet::full(fan.ray_count());
  for (std::size_t c = 0; c < max_cones.size(); ++c) {
    if (!max_cones[c].subset_of(all)) {
      throw StructureError("/max_cones/" + std::to_string(c) + ": ray index out of range");
    }
    if (close_faces) {
      max_cones[c].for_each_subset([&](IndexSet s) { fan.cones_.insert(s); });
    } else {
      fan.cones_.insert(max_cones[c]);
    }
  }
  if (close_faces) fan.cones_.insert(IndexSet{});
  return fan;
}

Fan Fan::from_complex(int dim, std::vector<LatticeVector> rays, const SimplicialComplex& complex) {
  check_rays(dim, rays);
  if (complex.vertex_count() != static_cast<int>(rays.size())) {
    throw StructureError("complex vertex count differs from the ray count");
  }
  Fan fan;
  fan.dim_ = dim;
  fan.rays_ = std::move(rays);
  fan.cones_ = complex.faces();
  return fan;
}

std::vector<IndexSet> Fan::max_cones() const {
  std::vector<IndexSet> out;
  for (IndexSet cone : cones_) {
    const bool dominated = std::any_of(cones_.begin(), cones_.end(),
                                       [&](IndexSet other) { return other != cone && cone.subset_of(other); });
    if (!dominated) out.push_back(cone);
  }
  return out;
}

IntMatrix Fan::ray_matrix() const {
  IntMatrix m(dim_, ray_count());
  for (int k = 0; k < ray_count(); ++k) m.col(k) = rays_[static_cast<std::size_t>(k)];
  return m;
}

IntMatrix Fan::generator_matrix(IndexSet cone) const {
  const auto idx = cone.to_vector();
  IntMatrix m(static_cast<Eigen::Index>(idx.size()), dim_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = rays_[static_cast<std::size_t>(idx[i])].transpose();
  }
  return m;
}

bool operator==(const Fan& a, const Fan& b) {
  if (a.dim_ != b.dim_ || a.rays_.size() != b.rays_.size() || a.cones_ != b.cones_) return false;
  for (std::size_t i = 0; i < a.rays_.size(); ++i) {
    if (a.rays_[i] != b.rays_[i]) return false;
  }
  return true;
}

LatticeVector make_vector(const std::vector<long>& coords) {
  LatticeVector v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = coords[i];
  return v;
}

LatticeVector primitive_ray(const LatticeVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, Integer(abs(v(i))));
  if (g == 0) throw InvalidInput("the zero vector has no primitive generator");
  LatticeVector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

ExactMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

bool is_simplicial(const Fan& fan, IndexSet cone) {
  return bareiss_rank<Integer>(fan.generator_matrix(cone)) == cone.size();
}

// A point lies in both simplicial cones but outside the cone on their shared rays.
bool improper_intersection(const Fan& fan, IndexSet a, IndexSet b) {
  const auto ia = a.to_vector();
  const auto ib = b.to_vector();
  const Eigen::Index vars = static_cast<Eigen::Index>(ia.size() + ib.size());
  ExactMatrix lhs = ExactMatrix::Zero(fan.dim() + 1, vars);
  ExactVector rhs = ExactVector::Zero(fan.dim() + 1);
  const IndexSet shared = a & b;
  Eigen::Index col = 0;
  for (int i : ia) {
    lhs.col(col).head(fan.dim()) = fan.rays()[static_cast<std::size_t>(i)].cast<Rational>();
    if (!shared.contains(i)) lhs(fan.dim(), col) = 1;
    ++col;
  }
  for (int i : ib) {
    lhs.col(col).head(fan.dim()) = -fan.rays()[static_cast<std::size_t>(i)].cast<Rational>();
    if (!shared.contains(i)) lhs(fan.dim(), col) = 1;
    ++col;
  }
  rhs(fan.dim()) = 1;
  return lp_feasible<Rational>(lhs, rhs);
}

}  // namespace

bool is_strongly_convex(const Fan& fan, IndexSet cone) {
  // σ ∩ -σ ≠ {0} iff some nonzero λ >= 0 has sum λ_i v_i = 0.
  if (cone.empty()) return true;
  const IntMatrix gens = fan.generator_matrix(cone);
  ExactMatrix lhs(fan.dim() + 1, gens.rows());
  lhs.topRows(fan.dim()) = to_rational(gens.transpose());
  lhs.row(fan.dim()).setOnes();
  ExactVector rhs = ExactVector::Zero(fan.dim() + 1);
  rhs(fan.dim()) = 1;
  return !lp_feasible<Rational>(lhs, rhs);
}

ValidationReport validate_fan(const Fan& fan) {
  ValidationReport report;
  auto add = [&](std::string axiom, IndexSet cone, std::string detail) {
    report.violations.push_back({std::move(axiom), as_list(cone), std::move(detail)});
  };

  for (int i = 0; i < fan.ray_count(); ++i) {
    const auto& v = fan.rays()[static_cast<std::size_t>(i)];
    if (v.isZero()) {
      add("primitive", IndexSet::singleton(i), "ray " + std::to_string(i) + " is the zero vector");
    } else if (primitive_ray(v) != v) {
      add("primitive", IndexSet::singleton(i), "ray " + std::to_string(i) + " is not primitive");
    }
    if (!fan.has_cone(IndexSet::singleton(i))) {
      add("ray_cone", IndexSet::singleton(i), "ray " + std::to_string(i) + " does not span a cone of the fan");
    }
  }
  if (!fan.has_cone(IndexSet{})) add("zero_cone", IndexSet{}, "the zero cone is missing");
  if (std::none_of(fan.cones().begin(), fan.cones().end(), [](IndexSet c) { return !c.empty(); })) {
    add("nonzero_cone", IndexSet{}, "the fan has no nonzero cone");
  }

  for (IndexSet cone : fan.cones()) {
    for (int v : cone.to_vector()) {
      if (!fan.has_cone(cone.without(v))) {
        add("face_closure", cone.without(v), "face of a stored cone is missing");
      }
    }
  }

  const auto maximal = fan.max_cones();
  std::vector<bool> simplicial(maximal.size());
  for (std::size_t c = 0; c < maximal.size(); ++c) {
    simplicial[c] = is_simplicial(fan, maximal[c]);
    if (!simplicial[c]) add("simplicial", maximal[c], "cone generators are linearly dependent");
    if (!is_strongly_convex(fan, maximal[c])) add("strong_convexity", maximal[c], "cone contains a line");
  }
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    for (std::size_t b = a + 1; b < maximal.size(); ++b) {
      if (!simplicial[a] || !simplicial[b]) continue;
      if (improper_intersection(fan, maximal[a], maximal[b])) {
        add("intersection", maximal[a] | maximal[b],
            "cones " + std::to_string(a) + " and " + std::to_string(b) + " do not meet in a common face");
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Global predicates

namespace {

// 0 for angles in [0, π), 1 for [π, 2π).
int half_plane(const LatticeVector& v) { return (v(1) > 0 || (v(1) == 0 && v(0) > 0)) ? 0 : 1; }

Integer cross(const LatticeVector& a, const LatticeVector& b) { return a(0) * b(1) - a(1) * b(0); }

Completeness sweep_plane(const Fan& fan) {
  std::vector<int> order(static_cast<std::size_t>(fan.ray_count()));
  std::iota(order.begin(), order.end(), 0);
  const auto& rays = fan.rays();
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const auto& a = rays[static_cast<std::size_t>(i)];
    const auto& b = rays[static_cast<std::size_t>(j)];
    if (half_plane(a) != half_plane(b)) return half_plane(a) < half_plane(b);
    return cross(a, b) > 0;
  });
  if (order.size() < 3) return Completeness::incomplete;
  for (std::size_t p = 0; p < order.size(); ++p) {
    const int i = order[p];
    const int j = order[(p + 1) % order.size()];
    if (cross(rays[static_cast<std::size_t>(i)], rays[static_cast<std::size_t>(j)]) <= 0) {
      return Completeness::incomplete;
    }
    if (!fan.has_cone(IndexSet{i, j})) return Completeness::incomplete;
  }
  return Completeness::complete;
}

}  // namespace

Completeness completeness(const Fan& fan) {
  if (fan.dim() == 1) {
    bool pos = false;
    bool neg = false;
    for (int i = 0; i < fan.ray_count(); ++i) {
      if (!fan.has_cone(IndexSet::singleton(i))) continue;
      const auto& v = fan.rays()[static_cast<std::size_t>(i)](0);
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    return pos && neg ? Completeness::complete : Completeness::incomplete;
  }
  if (fan.dim() == 2) return sweep_plane(fan);

  const auto maximal = fan.max_cones();
  const bool pure = std::all_of(maximal.begin(), maximal.end(), [&](IndexSet c) { return c.size() == fan.dim(); });
  if (!pure) return Completeness::unknown;
  for (IndexSet cone : maximal) {
    for (int v : cone.to_vector()) {
      const IndexSet facet = cone.without(v);
      const auto count =
          std::count_if(maximal.begin(), maximal.end(), [&](IndexSet other) { return facet.subset_of(other); });
      if (count != 2) return Completeness::incomplete;
    }
  }
  return Completeness::complete;
}

bool is_smooth(const Fan& fan) {
  for (IndexSet cone : fan.max_cones()) {
    if (cone.empty()) continue;
    const auto inv = smith_invariants<Integer>(fan.generator_matrix(cone));
    if (static_cast<int>(inv.size()) != cone.size()) return false;
    if (!std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; })) return false;
  }
  return true;
}

bool spans_lattice(const Fan& fan) {
  const auto inv = smith_invariants<Integer>(fan.ray_matrix());
  return static_cast<int>(inv.size()) == fan.dim() &&
         std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; });
}

bool degree_is_null(const Fan& fan, const DegreeVector& degrees) {
  if (static_cast<int>(degrees.size()) != fan.ray_count()) {
    throw ShapeMismatch("degree vector has " + std::to_string(degrees.size()) + " entries, fan has " +
                        std::to_string(fan.ray_count()) + " rays");
  }
  IntVector sum = IntVector::Zero(fan.dim());
  for (int k = 0; k < fan.ray_count(); ++k) {
    sum += fan.rays()[static_cast<std::size_t>(k)] * Integer(degrees[static_cast<std::size_t>(k)]);
  }
  return sum.isZero();
}

DegreeSearch find_degree_vector(const Fan& fan, std::optional<long> coordinate_bound) {
  DegreeSearch result;
  const int r = fan.ray_count();
  result.bound = coordinate_bound.value_or(10L * r);
  if (r == 0) return result;

  // λ = 1 + y with y >= 0: A y = -A 1, minimize sum y.
  const ExactMatrix a = to_rational(fan.ray_matrix());
  const ExactVector rhs = -(a * ExactVector::Ones(r));
  const auto y = lp_minimize<Rational>(a, rhs, ExactVector::Ones(r));
  if (!y) return result;

  ExactVector lambda = *y + ExactVector::Ones(r);
  Integer scale(1);
  for (Eigen::Index i = 0; i < r; ++i) {
    scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(lambda(i))));
  }
  std::vector<Integer> ints(static_cast<std::size_t>(r));
  Integer g(0);
  for (Eigen::Index i = 0; i < r; ++i) {
    ints[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(lambda(i) * Rational(scale));
    g = boost::multiprecision::gcd(g, ints[static_cast<std::size_t>(i)]);
  }
  std::vector<long> entries;
  for (auto& v : ints) {
    v /= g;
    if (v > result.bound) {
      result.bound_hit = true;
      return result;
    }
    entries.push_back(v.convert_to<long>());
  }
  result.degrees = DegreeVector(std::move(entries));
  return result;
}

IntMatrix cox_relations(const Fan& fan) {
  IntMatrix q = integer_kernel_basis(fan.ray_matrix()).transpose();
  for (Eigen::Index j = 0; j < q.rows(); ++j) {
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
      if (q(j, k) == 0) continue;
      if (q(j, k) < 0) q.row(j) = -q.row(j);
      break;
    }
  }
  return q;
}

int cox_group_rank(const Fan& fan) {
  if (!spans_lattice(fan)) throw UnsupportedFan("rays do not span the lattice; G_Σ is not a torus of rank r - m");
  return fan.ray_count() - fan.dim();
}

std::vector<Complex> cox_group_sample(const Fan& fan, const std::vector<Complex>& parameters) {
  const int rank = cox_group_rank(fan);
  if (static_cast<int>(parameters.size()) != rank) {
    throw ShapeMismatch("expected " + std::to_string(rank) + " torus parameters");
  }
  for (const auto& t : parameters) {
    if (t == Complex(0.0, 0.0)) throw InvalidInput("torus parameters must be nonzero");
  }
  const IntMatrix q = cox_relations(fan);
  std::vector<Complex> mu(static_cast<std::size_t>(fan.ray_count()), Complex(1.0, 0.0));
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    for (Eigen::Index j = 0; j < q.rows(); ++j) {
      mu[static_cast<std::size_t>(k)] *= std::pow(parameters[static_cast<std::size_t>(j)], q(j, k).convert_to<int>());
    }
  }
  return mu;
}

Fan fan_power(const Fan& fan, int n) {
  if (n < 1) throw InvalidInput("power must be positive");
  const int r = fan.ray_count();
  if (r * n > IndexSet::kCapacity) throw CapExceeded("r*n exceeds 64 vertices");
  const int m = fan.dim();
  std::vector<LatticeVector> rays;
  rays.reserve(static_cast<std::size_t>(r * n));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) {
      LatticeVector v = LatticeVector::Zero(m * n);
      v.segment(j * m, m) = fan.rays()[static_cast<std::size_t>(i)];
      rays.push_back(std::move(v));
    }
  }
  return Fan::from_complex(m * n, std::move(rays), complex_power(underlying_complex(fan), n));
}

// ---------------------------------------------------------------------------
// Standard fans

Fan cp_fan(int m) {
  if (m < 1) throw InvalidInput("cp(m) needs m >= 1");
  std::vector<LatticeVector> rays;
  LatticeVector last = LatticeVector::Zero(m);
  for (int i = 0; i < m; ++i) {
    LatticeVector e = LatticeVector::Zero(m);
    e(i) = 1;
    last(i) = -1;
    rays.push_back(std::move(e));
  }
  rays.push_back(std::move(last));
  std::vector<IndexSet> cones;
  const IndexSet all = IndexSet::full(m + 1);
  for (int v = 0; v <= m; ++v) cones.push_back(all.without(v));
  return Fan::from_max_cones(m, std::move(rays), cones);
}

Fan hirzebruch_fan(int k) {
  if (k < 1) throw InvalidInput("hirzebruch(k) needs k >= 1");
  std::vector<LatticeVector> rays{make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, k}),
                                  make_vector({0, -1})};
  return Fan::from_max_cones(2, std::move(rays), {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{3, 0}});
}

Fan affine_fan(int m) {
  if (m < 1) throw InvalidInput("affine(m) needs m >= 1");
  std::vector<LatticeVector> rays;
  for (int i = 0; i < m; ++i) {
    LatticeVector e = LatticeVector::Zero(m);
    e(i) = 1;
    rays.push_back(std::move(e));
  }
  return Fan::from_max_cones(m, std::move(rays), {IndexSet::full(m)});
}

Fan builtin_fan(const std::string& name) {
  static const std::regex pattern(R"(^\s*(cp|hirzebruch|affine)\s*[(:]\s*(-?\d+)\s*\)?\s*$)");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) throw InvalidInput("unknown builtin fan '" + name + "'");
  const int param = std::stoi(match[2].str());
  if (param < 1) throw InvalidInput("builtin fan parameter must be >= 1");
  if (match[1] == "cp") return cp_fan(param);
  if (match[1] == "hirzebruch") return hirzebruch_fan(param);
  return affine_fan(param);
}

}  // namespace toric
