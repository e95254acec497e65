#include "irbar/imatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "irbar/errors.hpp"

namespace irbar {

IMatrix::IMatrix(std::size_t n, std::vector<Interval> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw Error(Errc::ShapeMismatch, "entry count does not match order");
  }
}

IMatrix IMatrix::from_rows(const std::vector<std::vector<Interval>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Interval> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(Errc::ShapeMismatch, "matrix must be square");
    e.insert(e.end(), r.begin(), r.end());
  }
  return IMatrix(n, std::move(e));
}

namespace {

void require_same_order(const IMatrix& a, const IMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::ShapeMismatch,
                "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()) + " differ");
  }
}

template <class F>
IMatrix entrywise(const IMatrix& a, F f) {
  IMatrix r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) r(i, j) = f(a(i, j));
  return r;
}

Interval product_entry(const IMatrix& a, const IMatrix& b, std::size_t i, std::size_t j) {
  Interval acc = mul(a(i, 0), b(0, j));
  for (std::size_t k = 1; k < a.order(); ++k) acc = add(acc, mul(a(i, k), b(k, j)));
  return acc;
}

IMatrix minor_of(const IMatrix& a, std::size_t row, std::size_t col) {
  const std::size_t n = a.order();
  IMatrix m(n - 1);
  for (std::size_t i = 0, mi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < n; ++j) {
      if (j == col) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

bool odd_permutation(const std::vector<std::size_t>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return (inversions & 1U) != 0;
}

}  // namespace

IMatrix identity(std::size_t n) {
  IMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = Interval::one();
  return r;
}

IMatrix diag(std::span<const Interval> d) {
  IMatrix r(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r(i, i) = d[i];
  return r;
}

IMatrix madd(const IMatrix& a, const IMatrix& b) {
  require_same_order(a, b);
  IMatrix r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) r(i, j) = add(a(i, j), b(i, j));
  return r;
}

IMatrix msub(const IMatrix& a, const IMatrix& b) { return madd(a, mneg(b)); }

IMatrix mneg(const IMatrix& a) {
  return entrywise(a, [](const Interval& x) { return negate(x); });
}

IMatrix mscale(const Interval& s, const IMatrix& a) {
  return entrywise(a, [&](const Interval& x) { return mul(s, x); });
}

IMatrix mscale_real(double s, const IMatrix& a) {
  return entrywise(a, [&](const Interval& x) { return scalar_mul(s, x); });
}

IMatrix transpose(const IMatrix& a) {
  IMatrix r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) r(j, i) = a(i, j);
  return r;
}

IMatrix matmul_serial(const IMatrix& a, const IMatrix& b) {
  require_same_order(a, b);
  IMatrix r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) r(i, j) = product_entry(a, b, i, j);
  return r;
}

IMatrix matmul(const IMatrix& a, const IMatrix& b) {
  require_same_order(a, b);
  const auto n = static_cast<std::ptrdiff_t>(a.order());
  IMatrix r(a.order());
  // Small orders are dominated by thread start-up.
#pragma omp parallel for collapse(2) schedule(static) if (n >= 16)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    for (std::ptrdiff_t j = 0; j < n; ++j)
      r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          product_entry(a, b, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return r;
}

Interval det(const IMatrix& a) {
  const std::size_t n = a.order();
  if (n == 0) return Interval::one();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Interval sum;
  bool first = true;
  do {
    Interval term = a(0, perm[0]);
    for (std::size_t i = 1; i < n; ++i) term = mul(term, a(i, perm[i]));
    if (odd_permutation(perm)) term = negate(term);
    sum = first ? term : add(sum, term);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Interval det_cofactor(const IMatrix& a) {
  const std::size_t n = a.order();
  if (n <= 2) return det(a);
  Interval sum;
  for (std::size_t j = 0; j < n; ++j) {
    Interval term = mul(a(0, j), det_cofactor(minor_of(a, 0, j)));
    if (j % 2 == 1) term = negate(term);
    sum = j == 0 ? term : add(sum, term);
  }
  return sum;
}

IMatrix adjugate(const IMatrix& a) {
  const std::size_t n = a.order();
  IMatrix r(n);
  if (n == 1) {
    r(0, 0) = Interval::one();
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Interval c = det(minor_of(a, j, i));
      r(i, j) = (i + j) % 2 == 1 ? negate(c) : c;
    }
  }
  return r;
}

bool is_invertible(const IMatrix& a) {
  const Interval d = det(a);
  return d.u() * d.v() > 0.0;
}

IMatrix apply_scale(const Interval& scale, const IMatrix& m) { return mscale(scale, m); }

IMatrix scaled_left_mul(const ScaledMatrix& s, const IMatrix& b) { return apply_scale(s.scale, matmul(s.body, b)); }

IMatrix scaled_right_mul(const IMatrix& a, const ScaledMatrix& s) { return apply_scale(s.scale, matmul(a, s.body)); }

InverseResult inverse(const IMatrix& a) {
  const Interval d = det(a);
  if (!(d.u() * d.v() > 0.0)) {
    throw Error(Errc::Singular, "determinant " + format_interval(d) + " is not invertible");
  }
  InverseResult res;
  res.inverse = ScaledMatrix{invert(d), adjugate(a)};
  res.near_singular = std::min(std::abs(d.u()), std::abs(d.v())) < 1e-9 * (1.0 + norm_inf(a));
  res.residual = max_deviation(scaled_right_mul(a, res.inverse), identity(a.order()));
  if (a.order() >= 3) res.residual_warning = res.residual;
  return res;
}

RealMatrix center_matrix(const IMatrix& a) {
  RealMatrix c{a.order(), std::vector<double>(a.order() * a.order())};
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (!a(i, j).is_proper()) {
        throw Error(Errc::ImproperEntry, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             ") is improper");
      }
      c(i, j) = center(a(i, j));
    }
  }
  return c;
}

double max_deviation(const IMatrix& a, const IMatrix& b) {
  require_same_order(a, b);
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max({m, std::abs(a.entries()[k].u() - b.entries()[k].u()),
                  std::abs(a.entries()[k].v() - b.entries()[k].v())});
  }
  return m;
}

double norm_inf(const IMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.entries()) m = std::max(m, norm_inf(x));
  return m;
}

bool is_diagonal(const IMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (i != j && !a(i, j).is_zero()) return false;
  return true;
}

}  // namespace irbar
