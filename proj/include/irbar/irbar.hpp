#pragma once

#include <string>
#include <string_view>

#include "irbar/a4.hpp"

namespace irbar {

/// Branch of the embedding for a proper interval [u, v].
/// Ties on a zero endpoint resolve Pos > Zero > Neg.
enum class SignCase { Pos, Zero, Neg };

const char* sign_case_name(SignCase c) noexcept;

/// Class of interval pairs (X, Y) under (X,Y) ~ (Z,T) <=> X + T = Y + Z,
/// stored by its class coordinates (u, v). u <= v is the proper interval
/// [u, v]; u > v is the formal negative of the interval [-u, -v].
class Interval {
 public:
  constexpr Interval() = default;

  /// Raw class coordinates; any pair is a valid class. Negative zero is folded to +0.
  static constexpr Interval from_coords(double u, double v) { return Interval(u + 0.0, v + 0.0); }

  /// The proper interval [a, b]; throws Error(InvalidInterval) when a > b.
  static Interval from_endpoints(double a, double b);

  static constexpr Interval point(double a) { return from_coords(a, a); }
  static constexpr Interval zero() { return Interval(); }
  static constexpr Interval one() { return from_coords(1.0, 1.0); }

  constexpr double u() const { return u_; }
  constexpr double v() const { return v_; }

  constexpr bool is_proper() const { return u_ <= v_; }
  constexpr bool is_degenerate() const { return u_ == v_; }
  constexpr bool is_zero() const { return u_ == 0.0 && v_ == 0.0; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

 private:
  constexpr Interval(double u, double v) : u_(u), v_(v) {}

  double u_ = 0.0;
  double v_ = 0.0;
};

Interval add(const Interval& x, const Interval& y);
Interval negate(const Interval& x);
Interval sub(const Interval& x, const Interval& y);
Interval scalar_mul(double alpha, const Interval& x);

inline Interval operator+(const Interval& x, const Interval& y) { return add(x, y); }
inline Interval operator-(const Interval& x, const Interval& y) { return sub(x, y); }
inline Interval operator-(const Interval& x) { return negate(x); }

/// Sign case of the proper part: of [u,v] when proper, of [-u,-v] when improper.
SignCase sign_case(const Interval& x);

/// Piecewise-linear embedding into A4:
/// [a,b] with 0<=a -> (a,b,0,0); a<=0<=b -> (0,b,-a,0); b<=0 -> (0,0,-a,-b);
/// improper classes map to the negated image of their proper part.
A4Element phi(const Interval& x);

/// Projection A4 -> classes through (x1 - x3, x2 - x4).
Interval psi(const A4Element& x);

/// The induced product psi(phi(x) * phi(y)).
Interval mul(const Interval& x, const Interval& y);

/// Class (1/u, 1/v) = psi(a4_inverse(phi(x))). Throws Error(NotInvertible) unless u*v > 0.
Interval invert(const Interval& x);

/// Quotient computed in A4: psi(phi(x) * a4_inverse(phi(y))).
Interval divide(const Interval& x, const Interval& y);

Interval exp_elem(const Interval& x);

double center(const Interval& x);
double width(const Interval& x);

/// Set inclusion y within x; both operands must be proper (Error(ImproperOperand)).
bool contains(const Interval& x, const Interval& y);

/// Classical product {ab : a in x, b in y} of proper intervals.
Interval minkowski_mul(const Interval& x, const Interval& y);

/// max(|u|, |v|).
double norm_inf(const Interval& x);

/// Grammar: '[' real ',' real ']' | '-[' real ',' real ']'. No whitespace inside.
Interval parse_interval(std::string_view text);

/// Shortest round-trip form; `[u,v]` when proper, `-[-u,-v]` otherwise.
std::string format_interval(const Interval& x);

/// Shortest round-trip decimal of a double.
std::string format_real(double x);

}  // namespace irbar
