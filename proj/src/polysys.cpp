#include "toric/polysys.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace toric {

long RootPoly::degree() const {
  long total = 0;
  for (const auto& root : roots) {
    if (root.multiplicity < 1) throw InvalidInput("root multiplicities must be >= 1");
    total += root.multiplicity;
  }
  return total;
}

FloatPoly RootPoly::expand() const {
  FloatPoly out = FloatPoly::constant(Complex(1.0, 0.0));
  for (const auto& root : roots) {
    for (int j = 0; j < root.multiplicity; ++j) out = out * FloatPoly::linear(root.value);
  }
  return out;
}

DegreeVector CoeffSystem::degrees() const {
  std::vector<long> d;
  d.reserve(polys.size());
  for (const auto& f : polys) d.push_back(f.degree());
  return DegreeVector(std::move(d));
}

DegreeVector RootSystem::degrees() const {
  std::vector<long> d;
  d.reserve(polys.size());
  for (const auto& f : polys) d.push_back(f.degree());
  return DegreeVector(std::move(d));
}

RationalPoly mult_part(const RationalPoly& f, int n) {
  if (f.is_zero()) throw InvalidInput("mult_part of the zero polynomial");
  if (n < 1) throw InvalidInput("multiplicity bound must be positive");
  RationalPoly g = f;
  for (int j = 1; j < n && g.degree() > 0; ++j) g = gcd(g, derivative(f, static_cast<std::size_t>(j)));
  return make_monic(g);
}

namespace {

void check_shape(std::size_t polys, const Fan& fan, int n) {
  if (static_cast<int>(polys) != fan.ray_count()) {
    throw ShapeMismatch("system has " + std::to_string(polys) + " polynomials, fan has " +
                        std::to_string(fan.ray_count()) + " rays");
  }
  if (n < 1) throw InvalidInput("multiplicity bound must be positive");
}

// Merges roots that agree up to the relative tolerance, summing multiplicities.
std::vector<RootEntry> cluster(const RootPoly& f, double tolerance) {
  std::vector<RootEntry> out;
  for (const auto& root : f.roots) {
    auto it = std::find_if(out.begin(), out.end(), [&](const RootEntry& c) {
      return std::abs(c.value - root.value) <= tolerance * std::max(1.0, std::abs(root.value));
    });
    if (it == out.end()) {
      out.push_back(root);
    } else {
      it->multiplicity += root.multiplicity;
    }
  }
  return out;
}

}  // namespace

Membership is_member(const CoeffSystem& system, const Fan& fan, int n) {
  check_shape(system.polys.size(), fan, n);
  std::vector<RationalPoly> parts;
  parts.reserve(system.polys.size());
  for (std::size_t i = 0; i < system.polys.size(); ++i) {
    if (!system.polys[i].is_monic() || system.polys[i].degree() < 1) {
      throw InvalidInput("polynomial " + std::to_string(i + 1) + " is not monic of positive degree");
    }
    parts.push_back(mult_part(system.polys[i], n));
  }
  Membership result;
  for (IndexSet sigma : primitive_collections(fan)) {
    const auto idx = sigma.to_vector();
    RationalPoly g = parts[static_cast<std::size_t>(idx.front())];
    for (std::size_t p = 1; p < idx.size() && g.degree() > 0; ++p) g = gcd(g, parts[static_cast<std::size_t>(idx[p])]);
    if (g.degree() > 0) {
      result.member = false;
      result.witness = sigma;
      result.common_factor = g;
      return result;
    }
  }
  return result;
}

Membership is_member(const RootSystem& system, const Fan& fan, int n, double tolerance) {
  check_shape(system.polys.size(), fan, n);
  std::vector<std::vector<RootEntry>> clusters;
  clusters.reserve(system.polys.size());
  for (const auto& f : system.polys) {
    if (f.degree() < 1) throw InvalidInput("root-form polynomial of degree 0");
    clusters.push_back(cluster(f, tolerance));
  }
  auto has_root = [&](std::size_t i, Complex z) {
    return std::any_of(clusters[i].begin(), clusters[i].end(), [&](const RootEntry& c) {
      return c.multiplicity >= n && std::abs(c.value - z) <= tolerance * std::max(1.0, std::abs(z));
    });
  };
  Membership result;
  for (IndexSet sigma : primitive_collections(fan)) {
    const auto idx = sigma.to_vector();
    for (const auto& candidate : clusters[static_cast<std::size_t>(idx.front())]) {
      if (candidate.multiplicity < n) continue;
      const bool shared = std::all_of(idx.begin() + 1, idx.end(),
                                      [&](int i) { return has_root(static_cast<std::size_t>(i), candidate.value); });
      if (shared) {
        result.member = false;
        result.witness = sigma;
        result.common_root = candidate.value;
        return result;
      }
    }
  }
  return result;
}

Membership is_member(const PolySystem& system, const Fan& fan, int n) {
  return std::visit([&](const auto& s) { return is_member(s, fan, n); }, system);
}

long n_of(const DegreeVector& degrees) { return degrees.total(); }

Complex phi_map(const DegreeVector& degrees, Complex w) {
  return {static_cast<double>(n_of(degrees)) - std::exp(-w.real()), w.imag()};
}

Complex anchor_point(const DegreeVector& degrees, int i) {
  return {static_cast<double>(n_of(degrees) + i), 0.0};
}

RootSystem stabilize(const RootSystem& system, const std::vector<long>& a) {
  if (a.size() != system.polys.size()) throw ShapeMismatch("stabilization vector has the wrong length");
  if (std::any_of(a.begin(), a.end(), [](long x) { return x < 0; })) {
    throw InvalidInput("stabilization vector entries must be >= 0");
  }
  if (std::all_of(a.begin(), a.end(), [](long x) { return x == 0; })) {
    throw InvalidInput("stabilization vector must be nonzero");
  }
  const DegreeVector degrees = system.degrees();
  RootSystem out;
  out.polys.reserve(system.polys.size());
  for (std::size_t i = 0; i < system.polys.size(); ++i) {
    RootPoly f;
    for (const auto& root : system.polys[i].roots) f.roots.push_back({phi_map(degrees, root.value), root.multiplicity});
    if (a[i] > 0) f.roots.push_back({anchor_point(degrees, static_cast<int>(i) + 1), static_cast<int>(a[i])});
    out.polys.push_back(std::move(f));
  }
  return out;
}

RationalPoly jet_section(const std::vector<GaussianRational>& b) {
  if (b.empty()) throw InvalidInput("jet_section needs at least one value");
  std::vector<GaussianRational> coeffs{b.front()};
  Rational factorial(1);
  for (std::size_t k = 1; k < b.size(); ++k) {
    factorial *= static_cast<long>(k);
    coeffs.push_back((b[k] - b.front()) / GaussianRational(factorial));
  }
  return RationalPoly(std::move(coeffs));
}

namespace {

template <typename Scalar, typename ToComplex>
std::vector<Complex> jet_values(const Polynomial<Scalar>& f, int n, const Scalar& alpha, ToComplex&& convert) {
  std::vector<Complex> out;
  for (const auto& entry : jet(f, n)) out.push_back(convert(entry(alpha)));
  return out;
}

FloatPoly to_float(const RationalPoly& f) {
  std::vector<Complex> c;
  for (const auto& coeff : f.coeffs()) c.push_back(coeff.to_complex());
  return FloatPoly(std::move(c));
}

}  // namespace

PointInProduct evaluate_jet(const CoeffSystem& system, int n, const GaussianRational& alpha) {
  PointInProduct x;
  for (const auto& f : system.polys) {
    x.blocks.push_back(jet_values(f, n, alpha, [](const GaussianRational& z) { return z.to_complex(); }));
  }
  return x;
}

PointInProduct evaluate_jet(const CoeffSystem& system, int n, Complex alpha) {
  PointInProduct x;
  for (const auto& f : system.polys) x.blocks.push_back(jet_values(to_float(f), n, alpha, [](Complex z) { return z; }));
  return x;
}

PointInProduct evaluate_jet(const RootSystem& system, int n, Complex alpha) {
  PointInProduct x;
  for (const auto& f : system.polys) x.blocks.push_back(jet_values(f.expand(), n, alpha, [](Complex z) { return z; }));
  return x;
}

RationalPoly poly_from_roots(const std::vector<std::pair<GaussianRational, int>>& roots) {
  RationalPoly out = RationalPoly::constant(GaussianRational(1));
  for (const auto& [root, mult] : roots) {
    for (int j = 0; j < mult; ++j) out = out * RationalPoly::linear(root);
  }
  return out;
}

}  // namespace toric
