#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "irbar/a4.hpp"

namespace irbar {

/// Real univariate polynomial, coefficients in increasing degree.
using UniPoly = std::vector<double>;

UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(double s, const UniPoly& a);
void uni_trim(UniPoly& a);
int uni_degree(const UniPoly& a);
double uni_eval(const UniPoly& a, double x);

/// Sum c_ij x^i y^j with zero coefficients pruned.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;

  BivarPoly() = default;
  static BivarPoly constant(double c);
  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly monomial(double c, int i, int j);

  const std::map<Key, double>& terms() const { return terms_; }
  double coeff(int i, int j) const;

  int degree_x() const;
  int degree_y() const;
  bool is_zero() const { return terms_.empty(); }

  double eval(double x, double y) const;

  /// Coefficient of x^k as a polynomial in y.
  UniPoly x_coeff(int k) const;
  /// As a polynomial in x (requires degree_y() == 0) or in y (degree_x() == 0).
  UniPoly in_x() const;
  UniPoly in_y() const;

  /// Exchange the roles of x and y.
  BivarPoly swapped() const;

  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(double s, const BivarPoly& a);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  void put(const Key& k, double c);

  std::map<Key, double> terms_;
};

/// A4 element with polynomial coordinates; the product lifts a4_mul.
struct A4Poly {
  BivarPoly x1, x2, x3, x4;

  static A4Poly constant(const A4Element& e);

  friend A4Poly operator+(const A4Poly& a, const A4Poly& b);
  friend A4Poly operator-(const A4Poly& a, const A4Poly& b);
  friend A4Poly operator*(const A4Poly& a, const A4Poly& b);

  /// Class coordinates (x1 - x3, x2 - x4).
  std::pair<BivarPoly, BivarPoly> class_coords() const;
};

struct RootReport {
  std::vector<double> real;
  std::vector<std::complex<double>> complex;
};

struct DurandKernerOptions {
  int max_iterations = 500;
  double tolerance = 1e-14;
};

/// All roots of a polynomial of degree >= 1 by Durand-Kerner, started at
/// r e^{i(2 pi k / d + 0.4)} with r = 1 + max |c_i / c_d|. Throws Error(NoConvergence).
std::vector<std::complex<double>> durand_kerner(const UniPoly& p, DurandKernerOptions opts = {});

/// Real roots (ascending, merged within 1e-9) of p: closed form up to
/// degree 2, Durand-Kerner with Newton polishing above. Roots with
/// |imag| > 1e-10 are reported in `complex`. p must not be identically zero.
RootReport real_roots(const UniPoly& p);

/// Characteristic polynomial det(lambda I - C) of a real n x n matrix by
/// Faddeev-LeVerrier; increasing-degree coefficients, monic.
UniPoly faddeev_leverrier(std::size_t n, const std::vector<double>& row_major);

}  // namespace irbar
