#include "irbar/a4.hpp"

#include <algorithm>
#include <cmath>

#include "irbar/errors.hpp"

namespace irbar {

A4Element operator+(const A4Element& a, const A4Element& b) {
  return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4};
}

A4Element operator-(const A4Element& a, const A4Element& b) {
  return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4};
}

A4Element operator-(const A4Element& a) { return {-a.x1, -a.x2, -a.x3, -a.x4}; }

A4Element operator*(double s, const A4Element& a) { return {s * a.x1, s * a.x2, s * a.x3, s * a.x4}; }

A4Element a4_mul(const A4Element& x, const A4Element& y) {
  return {x.x1 * y.x1 + x.x4 * y.x4,
          x.x2 * y.x2 + x.x3 * y.x3,
          x.x3 * y.x2 + x.x2 * y.x3,
          x.x4 * y.x1 + x.x1 * y.x4};
}

A4Element a4_unit() { return {1.0, 1.0, 0.0, 0.0}; }

bool a4_is_invertible(const A4Element& x) {
  return x.x4 != x.x1 && x.x4 != -x.x1 && x.x3 != x.x2 && x.x3 != -x.x2;
}

double a4_condition(const A4Element& x) {
  return std::min(std::abs(x.x1 * x.x1 - x.x4 * x.x4), std::abs(x.x2 * x.x2 - x.x3 * x.x3));
}

double a4_norm_inf(const A4Element& x) {
  return std::max({std::abs(x.x1), std::abs(x.x2), std::abs(x.x3), std::abs(x.x4)});
}

bool a4_near_singular(const A4Element& x) {
  const double n = a4_norm_inf(x);
  return a4_condition(x) < 1e-9 * (1.0 + n * n);
}

A4Element a4_inverse(const A4Element& x) {
  if (!a4_is_invertible(x)) {
    throw Error(Errc::NotInvertible, "element lies on x4 = +-x1 or x3 = +-x2");
  }
  // Each ideal is a copy of the hyperbolic numbers: (a + b j)^-1 = (a - b j) / (a^2 - b^2).
  const double d1 = x.x1 * x.x1 - x.x4 * x.x4;
  const double d2 = x.x2 * x.x2 - x.x3 * x.x3;
  return {x.x1 / d1, x.x2 / d2, -x.x3 / d2, -x.x4 / d1};
}

A4Element a4_exp(const A4Element& x) {
  const double g1 = std::exp(x.x1);
  const double g2 = std::exp(x.x2);
  A4Element r{g1 * std::cosh(x.x4), g2 * std::cosh(x.x3), g2 * std::sinh(x.x3), g1 * std::sinh(x.x4)};
  if (!std::isfinite(r.x1) || !std::isfinite(r.x2) || !std::isfinite(r.x3) || !std::isfinite(r.x4)) {
    throw Error(Errc::Overflow, "exponential leaves the double range");
  }
  return r;
}

std::pair<double, double> class_coords(const A4Element& x) { return {x.x1 - x.x3, x.x2 - x.x4}; }

}  // namespace irbar
