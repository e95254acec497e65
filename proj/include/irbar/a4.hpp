#pragma once

#include <array>
#include <utility>

namespace irbar {

/// Element x1 e1 + x2 e2 + x3 e3 + x4 e4 of the 4-dimensional commutative
/// associative algebra A4. The unit is e1 + e2; <e1,e4> and <e2,e3> are
/// ideals that annihilate each other, each isomorphic to the hyperbolic
/// numbers (e4^2 = e1, e3^2 = e2).
struct A4Element {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double x4 = 0.0;

  friend bool operator==(const A4Element&, const A4Element&) = default;

  std::array<double, 4> as_array() const { return {x1, x2, x3, x4}; }
};

A4Element operator+(const A4Element& a, const A4Element& b);
A4Element operator-(const A4Element& a, const A4Element& b);
A4Element operator-(const A4Element& a);
A4Element operator*(double s, const A4Element& a);

A4Element a4_mul(const A4Element& x, const A4Element& y);
A4Element a4_unit();

bool a4_is_invertible(const A4Element& x);

/// min(|x1^2 - x4^2|, |x2^2 - x3^2|); the two ideal norms.
double a4_condition(const A4Element& x);

/// True when the smaller ideal norm is below 1e-9 * (1 + |x|_inf^2).
bool a4_near_singular(const A4Element& x);

/// Throws Error(NotInvertible) unless a4_is_invertible(x).
A4Element a4_inverse(const A4Element& x);

/// Closed form of sum x^k / k!: (e^x1 cosh x4, e^x2 cosh x3, e^x2 sinh x3, e^x1 sinh x4).
/// Throws Error(Overflow) if any component is not finite.
A4Element a4_exp(const A4Element& x);

/// R-class invariant (x1 - x3, x2 - x4).
std::pair<double, double> class_coords(const A4Element& x);

double a4_norm_inf(const A4Element& x);

}  // namespace irbar
