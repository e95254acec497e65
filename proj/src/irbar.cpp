#include "irbar/irbar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "irbar/errors.hpp"

namespace irbar {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::Overflow: return "Overflow";
    case Errc::ParseError: return "ParseError";
    case Errc::ImproperOperand: return "ImproperOperand";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::Singular: return "Singular";
    case Errc::ImproperEntry: return "ImproperEntry";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::UnsupportedCoupling: return "UnsupportedCoupling";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NoEigenvector: return "NoEigenvector";
    case Errc::NotDiagonalizable: return "NotDiagonalizable";
    case Errc::NonDiagonal: return "NonDiagonal";
    case Errc::NotAnEigenvalue: return "NotAnEigenvalue";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const char* sign_case_name(SignCase c) noexcept {
  switch (c) {
    case SignCase::Pos: return "POS";
    case SignCase::Zero: return "ZERO";
    case SignCase::Neg: return "NEG";
  }
  return "?";
}

Interval Interval::from_endpoints(double a, double b) {
  if (!(a <= b)) {
    throw Error(Errc::InvalidInterval, "lower endpoint exceeds upper endpoint");
  }
  return from_coords(a, b);
}

Interval add(const Interval& x, const Interval& y) { return Interval::from_coords(x.u() + y.u(), x.v() + y.v()); }

Interval negate(const Interval& x) { return Interval::from_coords(-x.u(), -x.v()); }

Interval sub(const Interval& x, const Interval& y) { return Interval::from_coords(x.u() - y.u(), x.v() - y.v()); }

// Equal to the sign-split rule alpha.(K,0) = (0, |alpha| K) for alpha < 0.
Interval scalar_mul(double alpha, const Interval& x) {
  return Interval::from_coords(alpha * x.u(), alpha * x.v());
}

namespace {

SignCase proper_case(double a, double b) {
  if (a >= 0.0) return SignCase::Pos;
  if (b >= 0.0) return SignCase::Zero;
  return SignCase::Neg;
}

A4Element proper_image(double a, double b) {
  switch (proper_case(a, b)) {
    case SignCase::Pos: return {a, b, 0.0, 0.0};
    case SignCase::Zero: return {0.0, b, -a, 0.0};
    case SignCase::Neg: return {0.0, 0.0, -a, -b};
  }
  return {};
}

}  // namespace

SignCase sign_case(const Interval& x) {
  return x.is_proper() ? proper_case(x.u(), x.v()) : proper_case(-x.u(), -x.v());
}

A4Element phi(const Interval& x) {
  if (x.is_proper()) return proper_image(x.u(), x.v());
  return -proper_image(-x.u(), -x.v());
}

Interval psi(const A4Element& x) { return Interval::from_coords(x.x1 - x.x3, x.x2 - x.x4); }

Interval mul(const Interval& x, const Interval& y) { return psi(a4_mul(phi(x), phi(y))); }

Interval invert(const Interval& x) {
  if (!(x.u() * x.v() > 0.0)) {
    throw Error(Errc::NotInvertible, "class " + format_interval(x) + " has a zero coordinate product");
  }
  return Interval::from_coords(1.0 / x.u(), 1.0 / x.v());
}

Interval divide(const Interval& x, const Interval& y) {
  const A4Element py = phi(y);
  if (!a4_is_invertible(py)) {
    throw Error(Errc::NotInvertible, "divisor " + format_interval(y) + " is not invertible");
  }
  return psi(a4_mul(phi(x), a4_inverse(py)));
}

Interval exp_elem(const Interval& x) { return psi(a4_exp(phi(x))); }

double center(const Interval& x) { return 0.5 * (x.u() + x.v()); }

double width(const Interval& x) { return x.v() - x.u(); }

double norm_inf(const Interval& x) { return std::max(std::abs(x.u()), std::abs(x.v())); }

bool contains(const Interval& x, const Interval& y) {
  if (!x.is_proper() || !y.is_proper()) {
    throw Error(Errc::ImproperOperand, "containment is defined for proper intervals");
  }
  return x.u() <= y.u() && y.v() <= x.v();
}

Interval minkowski_mul(const Interval& x, const Interval& y) {
  if (!x.is_proper() || !y.is_proper()) {
    throw Error(Errc::ImproperOperand, "Minkowski product is defined for proper intervals");
  }
  const double p[4] = {x.u() * y.u(), x.u() * y.v(), x.v() * y.u(), x.v() * y.v()};
  return Interval::from_coords(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

std::string format_real(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x + 0.0);
  return std::string(buf, res.ptr);
}

std::string format_interval(const Interval& x) {
  if (x.is_proper()) return "[" + format_real(x.u()) + "," + format_real(x.v()) + "]";
  return "-[" + format_real(-x.u()) + "," + format_real(-x.v()) + "]";
}

namespace {

double parse_real(std::string_view text, std::size_t& pos) {
  double value = 0.0;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr == first) {
    throw ParseError("expected a real number", 0, pos + 1);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite real", 0, pos + 1);
  }
  pos = static_cast<std::size_t>(res.ptr - text.data());
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw ParseError(std::string("expected '") + c + "'", 0, pos + 1);
  }
  ++pos;
}

}  // namespace

Interval parse_interval(std::string_view text) {
  std::size_t pos = 0;
  bool improper = false;
  if (pos < text.size() && text[pos] == '-') {
    improper = true;
    ++pos;
  }
  expect(text, pos, '[');
  const std::size_t lo_pos = pos;
  const double a = parse_real(text, pos);
  expect(text, pos, ',');
  const double b = parse_real(text, pos);
  expect(text, pos, ']');
  if (pos != text.size()) {
    throw ParseError("trailing characters after interval", 0, pos + 1);
  }
  if (!(a <= b)) {
    throw ParseError("lower endpoint exceeds upper endpoint", 0, lo_pos + 1);
  }
  return improper ? Interval::from_coords(-a, -b) : Interval::from_coords(a, b);
}

}  // namespace irbar
