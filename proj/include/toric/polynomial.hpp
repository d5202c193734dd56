#ifndef TORIC_POLYNOMIAL_HPP
#define TORIC_POLYNOMIAL_HPP

#include "toric/exact.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace toric {

/// Dense univariate polynomial, coefficients in ascending order. The zero polynomial has
/// no coefficients; otherwise the leading coefficient is nonzero.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }
  /// z^d
  static Polynomial monomial(std::size_t degree) {
    std::vector<Scalar> c(degree + 1, Scalar(0));
    c[degree] = Scalar(1);
    return Polynomial(std::move(c));
  }
  /// z - root
  static Polynomial linear(const Scalar& root) { return Polynomial(std::vector<Scalar>{-root, Scalar(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == Scalar(1); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Scalar& s, Polynomial p) {
    for (auto& c : p.coeffs_) c *= s;
    p.trim();
    return p;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }
  std::vector<Scalar> coeffs_;
};

/// Formal derivative of the given order; zero once order exceeds the degree.
template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& f, std::size_t order = 1) {
  const auto& c = f.coeffs();
  if (order >= c.size()) return {};
  std::vector<Scalar> out(c.size() - order, Scalar(0));
  for (std::size_t i = order; i < c.size(); ++i) {
    long factor = 1;
    for (std::size_t j = 0; j < order; ++j) factor *= static_cast<long>(i - j);
    out[i - order] = Scalar(factor) * c[i];
  }
  return Polynomial<Scalar>(std::move(out));
}

/// Quotient and remainder; the divisor must be nonzero and Scalar a field.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  std::vector<Scalar> rem = a.coeffs();
  const auto& d = b.coeffs();
  if (rem.size() < d.size()) return {Polynomial<Scalar>{}, a};
  std::vector<Scalar> quot(rem.size() - d.size() + 1, Scalar(0));
  const Scalar lead_inv = Scalar(1) / d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar q = rem[k + d.size() - 1] * lead_inv;
    quot[k] = q;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  rem.resize(d.size() - 1);
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <typename Scalar>
Polynomial<Scalar> make_monic(const Polynomial<Scalar>& f) {
  if (f.is_zero()) return f;
  return (Scalar(1) / f.leading()) * f;
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

}  // namespace toric

#endif  // TORIC_POLYNOMIAL_HPP
