#include "toric/exact.hpp"

#include <stdexcept>

namespace toric {

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    const std::string num(text.substr(0, slash));
    if (num.empty()) throw std::invalid_argument("empty numerator");
    Integer p(num);
    Integer q(1);
    if (slash != std::string_view::npos) {
      const std::string den(text.substr(slash + 1));
      if (den.empty()) throw std::invalid_argument("empty denominator");
      q = Integer(den);
    }
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
}

std::string to_string(const Rational& q) { return q.str(); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero Gaussian rational");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  if (z.re == 0) return to_string(z.im) + "i";
  return to_string(z.re) + (z.im < 0 ? "" : "+") + to_string(z.im) + "i";
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a;
  Integer r = b;
  Integer old_s = 1;
  Integer s = 0;
  Integer old_t = 0;
  Integer t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

}  // namespace toric
