#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "irbar/eigen.hpp"
#include "irbar/errors.hpp"

namespace irbar {

namespace {

using Vec = std::vector<double>;

// Dense row-major real matrix for the per-combo linear systems.
struct Dense {
  std::size_t rows = 0, cols = 0;
  Vec a;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Kernel basis by Gauss-Jordan elimination with partial pivoting; pivots
// below 1e-10 * max(1, max|m|) count as zero.
std::vector<Vec> kernel(Dense m) {
  double big = 0.0;
  for (double x : m.a) big = std::max(big, std::fabs(x));
  const double thr = 1e-10 * std::max(1.0, big);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < m.rows; ++i)
      if (std::fabs(m.at(i, c)) > std::fabs(m.at(best, c))) best = i;
    if (std::fabs(m.at(best, c)) <= thr) {
      for (std::size_t i = r; i < m.rows; ++i) m.at(i, c) = 0.0;
      continue;
    }
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(best, j));
    const double p = m.at(r, c);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) /= p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const double f = m.at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
    Vec z(m.cols, 0.0);
    z[f] = 1.0;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) z[pivot_cols[k]] = -m.at(k, f);
    basis.push_back(std::move(z));
  }
  return basis;
}

double max_abs(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// The six linear pieces of phi: POS, ZERO, NEG and their improper mirrors.
constexpr std::array<ComponentCase, 6> kRegions{{
    {SignCase::Pos, true},
    {SignCase::Zero, true},
    {SignCase::Neg, true},
    {SignCase::Pos, false},
    {SignCase::Zero, false},
    {SignCase::Neg, false},
}};

// phi restricted to a region, applied to (u, v).
A4Element lift(const ComponentCase& r, double u, double v) {
  switch (r.sign_case) {
    case SignCase::Pos:
      return {u, v, 0.0, 0.0};
    case SignCase::Zero:
      return {0.0, v, -u, 0.0};
    case SignCase::Neg:
      return {0.0, 0.0, -u, -v};
  }
  return {};
}

// Inequalities g . (u, v) >= 0 describing the closure of a region.
std::array<std::array<double, 2>, 2> region_constraints(const ComponentCase& r) {
  if (r.proper) {
    switch (r.sign_case) {
      case SignCase::Pos:
        return {{{1.0, 0.0}, {-1.0, 1.0}}};
      case SignCase::Zero:
        return {{{-1.0, 0.0}, {0.0, 1.0}}};
      case SignCase::Neg:
        return {{{0.0, -1.0}, {-1.0, 1.0}}};
    }
  }
  switch (r.sign_case) {
    case SignCase::Pos:
      return {{{-1.0, 0.0}, {1.0, -1.0}}};
    case SignCase::Zero:
      return {{{1.0, 0.0}, {0.0, -1.0}}};
    case SignCase::Neg:
      return {{{0.0, 1.0}, {1.0, -1.0}}};
  }
  return {};
}

// 2x2 matrix of z -> class_coords(c * lift(r, z)).
std::array<std::array<double, 2>, 2> block(const A4Element& c, const ComponentCase& r) {
  const auto [a, b] = class_coords(a4_mul(c, lift(r, 1.0, 0.0)));
  const auto [e, f] = class_coords(a4_mul(c, lift(r, 0.0, 1.0)));
  return {{{a, e}, {b, f}}};
}

// Rows 2i, 2i+1: sum_k a_ik . V_k - X . V_i in class coordinates.
void add_system(Dense& m, std::size_t row0, const IMatrix& a, const Interval& x,
                const std::vector<ComponentCase>& combo) {
  const std::size_t n = a.order();
  const A4Element px = phi(x);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      auto bl = block(phi(a(i, k)), combo[k]);
      if (k == i) {
        const auto bx = block(px, combo[k]);
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t) bl[s][t] -= bx[s][t];
      }
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) m.at(row0 + 2 * i + s, 2 * k + t) += bl[s][t];
    }
  }
}

std::vector<std::vector<ComponentCase>> all_combos(std::size_t n) {
  std::vector<std::vector<ComponentCase>> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<ComponentCase> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = kRegions[idx[i]];
    out.push_back(std::move(c));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < kRegions.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

Vec combine(const std::vector<Vec>& basis, const Vec& w) {
  Vec z(basis.empty() ? 0 : basis[0].size(), 0.0);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += w[k] * basis[k][i];
  return z;
}

struct Cone {
  std::vector<Vec> basis;      // kernel basis (columns of K)
  std::vector<Vec> rows;       // constraints C = G K, rows normalized, zero rows dropped
};

bool z_feasible(const Vec& z, const std::vector<ComponentCase>& combo) {
  const double s = 1e-9 * std::max(1.0, max_abs(z));
  for (std::size_t k = 0; k < combo.size(); ++k)
    for (const auto& g : region_constraints(combo[k]))
      if (g[0] * z[2 * k] + g[1] * z[2 * k + 1] < -s) return false;
  return true;
}

Cone make_cone(std::vector<Vec> basis, const std::vector<ComponentCase>& combo) {
  Cone c;
  c.basis = std::move(basis);
  const std::size_t d = c.basis.size();
  for (std::size_t k = 0; k < combo.size(); ++k) {
    for (const auto& g : region_constraints(combo[k])) {
      Vec row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = g[0] * c.basis[j][2 * k] + g[1] * c.basis[j][2 * k + 1];
      const double m = max_abs(row);
      if (m <= 1e-12) continue;
      for (double& x : row) x /= m;
      c.rows.push_back(std::move(row));
    }
  }
  return c;
}

Vec normalized(Vec z) {
  const double m = max_abs(z);
  if (m > 0.0)
    for (double& x : z) x /= m;
  return z;
}

bool same_direction(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > 1e-9) return false;
  return true;
}

// Extreme rays of {w : C w >= 0}, mapped back to z = K w and normalized.
std::vector<Vec> extreme_rays(const Cone& c, const std::vector<ComponentCase>& combo) {
  const std::size_t d = c.basis.size();
  std::vector<Vec> out;
  auto consider = [&](const Vec& w) {
    for (double sign : {1.0, -1.0}) {
      Vec ws = w;
      for (double& x : ws) x *= sign;
      Vec z = combine(c.basis, ws);
      if (max_abs(z) <= 1e-12) continue;
      z = normalized(std::move(z));
      if (!z_feasible(z, combo)) continue;
      if (std::none_of(out.begin(), out.end(), [&](const Vec& o) { return same_direction(o, z); }))
        out.push_back(std::move(z));
    }
  };
  if (d == 0) return out;
  if (d == 1) {
    consider(Vec{1.0});
    return out;
  }
  const std::size_t m = c.rows.size();
  if (m < d - 1) return out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d - 1), true);
  do {
    Dense sub(d - 1, d);
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!pick[i]) continue;
      for (std::size_t j = 0; j < d; ++j) sub.at(r, j) = c.rows[i][j];
      ++r;
    }
    const auto ker = kernel(sub);
    if (ker.size() == 1) consider(ker[0]);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Point of the kernel whose component j equals t (min-norm), if exact.
std::optional<Vec> pin_component(const std::vector<Vec>& basis, std::size_t j, std::array<double, 2> t) {
  const std::size_t d = basis.size();
  Vec r0(d), r1(d);
  for (std::size_t k = 0; k < d; ++k) {
    r0[k] = basis[k][2 * j];
    r1[k] = basis[k][2 * j + 1];
  }
  auto dot = [d](const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += a[k] * b[k];
    return s;
  };
  const double g00 = dot(r0, r0), g01 = dot(r0, r1), g11 = dot(r1, r1);
  const double gdet = g00 * g11 - g01 * g01;
  Vec w(d, 0.0);
  if (gdet > 1e-12 * std::max(1.0, g00 * g11)) {
    const double c0 = (g11 * t[0] - g01 * t[1]) / gdet;
    const double c1 = (g00 * t[1] - g01 * t[0]) / gdet;
    for (std::size_t k = 0; k < d; ++k) w[k] = c0 * r0[k] + c1 * r1[k];
  } else {
    const bool first = g00 >= g11;
    const Vec& r = first ? r0 : r1;
    const double nn = first ? g00 : g11;
    if (nn <= 0.0) return std::nullopt;
    const double s = (first ? t[0] : t[1]) / nn;
    for (std::size_t k = 0; k < d; ++k) w[k] = s * r[k];
  }
  Vec z = combine(basis, w);
  if (std::fabs(z[2 * j] - t[0]) > 1e-9 || std::fabs(z[2 * j + 1] - t[1]) > 1e-9) return std::nullopt;
  z[2 * j] = t[0];
  z[2 * j + 1] = t[1];
  return z;
}

std::vector<Interval> to_components(const Vec& z) {
  std::vector<Interval> v;
  for (std::size_t k = 0; k + 1 < z.size(); k += 2) v.push_back(Interval::from_coords(z[k], z[k + 1]));
  return v;
}

double residual_of(const IMatrix& a, const Interval& x, const std::vector<Interval>& v) {
  double r = 0.0;
  for (const Interval& e : eigen_row_residuals(a, x, v)) r = std::max(r, norm_inf(e));
  return r;
}

double vec_norm(const std::vector<Interval>& v) {
  double m = 0.0;
  for (const Interval& e : v) m = std::max(m, norm_inf(e));
  return m;
}

double residual_tol(const IMatrix& a, const Interval& x, const std::vector<Interval>& v, double tol) {
  return tol * std::max({1.0, norm_inf(a) * vec_norm(v), norm_inf(x) * vec_norm(v)});
}

// Representative of a feasible family: first supported component pinned to
// [1,1] (else [-1,-1]); otherwise the sum of the normalized extreme rays.
std::optional<Vec> representative(const Cone& c, const std::vector<Vec>& rays,
                                  const std::vector<ComponentCase>& combo) {
  const std::size_t n = combo.size();
  for (std::size_t j = 0; j < n; ++j) {
    double support = 0.0;
    for (const Vec& b : c.basis) support = std::max({support, std::fabs(b[2 * j]), std::fabs(b[2 * j + 1])});
    if (support <= 1e-9) continue;
    for (double s : {1.0, -1.0}) {
      auto z = pin_component(c.basis, j, {s, s});
      if (z && z_feasible(*z, combo)) return z;
    }
    break;
  }
  if (rays.empty()) return std::nullopt;
  Vec sum(rays[0].size(), 0.0);
  for (const Vec& r : rays)
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r[i];
  if (max_abs(sum) <= 1e-12) return std::nullopt;
  return normalized(std::move(sum));
}

}  // namespace

std::vector<Interval> eigen_row_residuals(const IMatrix& a, const Interval& x, const std::vector<Interval>& v) {
  const std::size_t n = a.order();
  if (v.size() != n) throw Error(Errc::ShapeMismatch, "eigenvector length differs from matrix order");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < n; ++i) {
    Interval s = mul(a(i, 0), v[0]);
    for (std::size_t k = 1; k < n; ++k) s = s + mul(a(i, k), v[k]);
    out.push_back(s - mul(x, v[i]));
  }
  return out;
}

std::vector<EigenvectorRecord> eigenvectors(const IMatrix& a, const Interval& x, double tol) {
  const std::size_t n = a.order();
  if (n == 0) throw Error(Errc::UnsupportedOrder, "empty matrix");
  std::vector<EigenvectorRecord> out;
  std::vector<Vec> seen;
  for (const auto& combo : all_combos(n)) {
    Dense m(2 * n, 2 * n);
    add_system(m, 0, a, x, combo);
    Cone cone = make_cone(kernel(m), combo);
    if (cone.basis.empty()) continue;
    const std::vector<Vec> rays = extreme_rays(cone, combo);
    const auto z = representative(cone, rays, combo);
    if (!z) continue;

    EigenvectorRecord rec;
    rec.components = to_components(*z);
    rec.residual = residual_of(a, x, rec.components);
    if (rec.residual > residual_tol(a, x, rec.components, tol)) continue;
    const Vec key = normalized(*z);
    if (std::any_of(seen.begin(), seen.end(), [&](const Vec& s) { return same_direction(s, key); })) continue;
    seen.push_back(key);
    rec.case_combo = combo;
    rec.free_parameters = static_cast<int>(cone.basis.size());
    for (const Vec& r : rays) rec.generators.push_back(to_components(r));
    out.push_back(std::move(rec));
  }
  if (out.empty()) throw Error(Errc::NoEigenvector, "no case combination admits a nonzero eigenvector for " + format_interval(x));
  return out;
}

DisjointnessReport check_disjointness(const IMatrix& a, const Interval& x1, const Interval& x2) {
  if (x1 == x2) throw Error(Errc::InvalidArgument, "eigenvalues must be distinct");
  for (const Interval& x : {x1, x2})
    if (!find_eigenvalue(a, x)) throw Error(Errc::NotAnEigenvalue, format_interval(x) + " is not an eigenvalue");
  const std::size_t n = a.order();
  DisjointnessReport rep;
  for (const auto& combo : all_combos(n)) {
    ++rep.combos_checked;
    Dense m(4 * n, 2 * n);
    add_system(m, 0, a, x1, combo);
    add_system(m, 2 * n, a, x2, combo);
    Cone cone = make_cone(kernel(m), combo);
    for (const Vec& r : extreme_rays(cone, combo)) {
      const auto v = to_components(r);
      if (residual_of(a, x1, v) <= residual_tol(a, x1, v, 1e-9) &&
          residual_of(a, x2, v) <= residual_tol(a, x2, v, 1e-9)) {
        rep.common_nonzero = true;
        rep.witness = v;
        return rep;
      }
    }
  }
  return rep;
}

DiagonalizationRecord diagonalize(const IMatrix& a, double tau, double tol) {
  if (a.order() != 2) throw Error(Errc::UnsupportedOrder, "diagonalization requires a 2x2 matrix");
  const CentralEigenvalues centers = central_eigenvalues(a);
  const auto records = classify_central(enumerate_eigenvalues(a, RepConvention::Phi), centers.real, tau);

  // Closest central record per distinct real center eigenvalue.
  std::vector<std::size_t> chosen;
  for (double lam : centers.real) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (!records[i].is_central || *records[i].matched_center != lam) continue;
      if (!best || std::fabs(center(records[i].value) - lam) < std::fabs(center(records[*best].value) - lam))
        best = i;
    }
    if (best && std::find(chosen.begin(), chosen.end(), *best) == chosen.end()) chosen.push_back(*best);
  }
  if (chosen.size() != 2)
    throw Error(Errc::NotDiagonalizable, "need two distinct central eigenvalues, found " + std::to_string(chosen.size()));
  std::sort(chosen.begin(), chosen.end());

  std::vector<std::vector<Interval>> cols;
  for (std::size_t i : chosen) {
    try {
      cols.push_back(eigenvectors(a, records[i].value, tol).front().components);
    } catch (const Error& e) {
      if (e.code() != Errc::NoEigenvector) throw;
      throw Error(Errc::NotDiagonalizable, "no eigenvector for " + format_interval(records[i].value));
    }
  }
  // Keep enumeration order unless it puts a zero on the diagonal of P.
  const bool zero_diag = cols[0][0].is_zero() || cols[1][1].is_zero();
  const bool zero_swapped = cols[1][0].is_zero() || cols[0][1].is_zero();
  if (zero_diag && !zero_swapped) {
    std::swap(cols[0], cols[1]);
    std::swap(chosen[0], chosen[1]);
  }

  DiagonalizationRecord rec;
  rec.p = IMatrix::from_rows({{cols[0][0], cols[1][0]}, {cols[0][1], cols[1][1]}});
  const std::vector<Interval> dv{records[chosen[0]].value, records[chosen[1]].value};
  rec.d = diag(dv);
  if (!is_invertible(rec.p)) throw Error(Errc::NotDiagonalizable, "eigenvector matrix P is singular");
  const IMatrix ap = matmul(a, rec.p);
  rec.residual_ap_pd = max_deviation(ap, matmul(rec.p, rec.d));
  rec.d_via_inverse = apply_scale(invert(det(rec.p)), matmul(adjugate(rec.p), ap));
  rec.inverse_path_deviation = max_deviation(rec.d_via_inverse, rec.d);
  return rec;
}

}  // namespace irbar
