#include "irbar/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "irbar/errors.hpp"

namespace irbar {

namespace {

constexpr double kSlack = 1e-9;
constexpr double kMerge = 1e-9;

double tol_scale(double x, double y) { return std::max({1.0, std::fabs(x), std::fabs(y)}); }

// Sum of |c_ij x^i y^j|; the natural size of the rounding error of p(x, y).
double eval_magnitude(const BivarPoly& p, double x, double y) {
  double s = 0.0;
  for (const auto& [k, c] : p.terms()) s += std::fabs(c * std::pow(x, k.first) * std::pow(y, k.second));
  return s;
}

// Snaps (x, y) onto the case region when it violates it by less than the slack.
bool fit_case(SignCase c, double& x, double& y) {
  const double s = kSlack * tol_scale(x, y);
  auto at_most = [s](double& a, double b) {
    if (a <= b) return true;
    if (a - b > s) return false;
    a = b;
    return true;
  };
  auto at_least = [s](double& a, double b) {
    if (a >= b) return true;
    if (b - a > s) return false;
    a = b;
    return true;
  };
  switch (c) {
    case SignCase::Pos:
      return at_least(x, 0.0) && at_most(x, y);
    case SignCase::Zero:
      return at_most(x, 0.0) && at_least(y, 0.0);
    case SignCase::Neg:
      return at_most(y, 0.0) && at_most(x, y);
  }
  return false;
}

BivarPoly derivative(const BivarPoly& f, bool in_x) {
  BivarPoly d;
  for (const auto& [k, c] : f.terms()) {
    const int e = in_x ? k.first : k.second;
    if (e == 0) continue;
    d = d + (in_x ? BivarPoly::monomial(c * e, k.first - 1, k.second)
                  : BivarPoly::monomial(c * e, k.first, k.second - 1));
  }
  return d;
}

// A few Newton steps on (p, q); kept only while the residual does not grow.
void polish(const BivarPoly& p, const BivarPoly& q, double& x, double& y) {
  const BivarPoly px = derivative(p, true), py = derivative(p, false);
  const BivarPoly qx = derivative(q, true), qy = derivative(q, false);
  auto res = [&](double a, double b) { return std::max(std::fabs(p.eval(a, b)), std::fabs(q.eval(a, b))); };
  for (int it = 0; it < 4; ++it) {
    const double f = p.eval(x, y), g = q.eval(x, y);
    const double a = px.eval(x, y), b = py.eval(x, y), c = qx.eval(x, y), d = qy.eval(x, y);
    const double jac = a * d - b * c;
    if (!std::isfinite(jac) || std::fabs(jac) < 1e-14 * std::max(1.0, std::fabs(a * d) + std::fabs(b * c))) return;
    const double nx = x - (d * f - b * g) / jac;
    const double ny = y - (a * g - c * f) / jac;
    if (!(res(nx, ny) <= res(x, y))) return;
    if (nx == x && ny == y) return;
    x = nx;
    y = ny;
  }
}

// q(x, y0) as a polynomial in x.
UniPoly at_y(const BivarPoly& q, double y0) {
  UniPoly out;
  for (int j = 0; j <= q.degree_x(); ++j) out.push_back(uni_eval(q.x_coeff(j), y0));
  uni_trim(out);
  return out;
}

// p linear in x: x = -alpha(y) / beta(y); clear denominators in q.
CaseSolution eliminate_x(const BivarPoly& p, const BivarPoly& q) {
  const UniPoly alpha = p.x_coeff(0);
  const UniPoly beta = p.x_coeff(1);
  const int d = q.degree_x();
  const UniPoly neg_alpha = uni_scale(-1.0, alpha);

  UniPoly r{0.0};
  for (int j = 0; j <= d; ++j) {
    UniPoly term = q.x_coeff(j);
    for (int k = 0; k < j; ++k) term = uni_mul(term, neg_alpha);
    for (int k = j; k < d; ++k) term = uni_mul(term, beta);
    r = uni_add(r, term);
  }
  uni_trim(r);
  if (uni_degree(r) < 0) throw Error(Errc::UnsupportedCoupling, "eliminant vanishes identically");

  CaseSolution out;
  out.eliminant = r;
  if (uni_degree(r) == 0) return out;
  const RootReport ys = real_roots(r);
  out.complex_discarded = static_cast<int>(ys.complex.size());
  for (double y : ys.real) {
    const double b = uni_eval(beta, y);
    const double a = uni_eval(alpha, y);
    double bscale = 0.0;
    for (std::size_t i = 0; i < beta.size(); ++i) bscale += std::fabs(beta[i] * std::pow(y, static_cast<double>(i)));
    if (std::fabs(b) > 1e-9 * std::max(1.0, bscale)) {
      out.roots.emplace_back(-a / b, y);
      continue;
    }
    // beta(y) = 0: p holds for every x only if alpha(y) = 0 too; solve q in x.
    if (std::fabs(a) > 1e-9 * std::max(1.0, bscale)) continue;
    const UniPoly qx = at_y(q, y);
    if (uni_degree(qx) < 1) continue;
    for (double x : real_roots(qx).real) out.roots.emplace_back(x, y);
  }
  return out;
}

CaseSolution solve_system(const BivarPoly& p, const BivarPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(Errc::UnsupportedCoupling, "system has a vanishing equation");
  if (p.degree_x() == 0) {
    // p fixes y; q then fixes x for each such y.
    CaseSolution out;
    const RootReport ys = real_roots(p.in_y());
    out.complex_discarded = static_cast<int>(ys.complex.size());
    for (double y : ys.real) {
      const UniPoly qx = at_y(q, y);
      if (uni_degree(qx) < 0) throw Error(Errc::UnsupportedCoupling, "solution set is not finite");
      if (uni_degree(qx) == 0) continue;
      const RootReport xs = real_roots(qx);
      out.complex_discarded += static_cast<int>(xs.complex.size());
      for (double x : xs.real) out.roots.emplace_back(x, y);
    }
    return out;
  }
  if (q.degree_x() == 0) return solve_system(q, p);
  if (p.degree_x() == 1) return eliminate_x(p, q);
  if (q.degree_x() == 1) return eliminate_x(q, p);
  throw Error(Errc::UnsupportedCoupling, "no equation is linear in x");
}

bool near(const Interval& a, const Interval& b, double tol) {
  return std::fabs(a.u() - b.u()) <= tol * tol_scale(a.u(), b.u()) &&
         std::fabs(a.v() - b.v()) <= tol * tol_scale(a.v(), b.v());
}

void require_2x2_proper(const IMatrix& a) {
  if (a.order() != 2) throw Error(Errc::UnsupportedOrder, "eigenvalue enumeration requires a 2x2 matrix");
  for (const Interval& e : a.entries())
    if (!e.is_proper()) throw Error(Errc::ImproperEntry, "entry " + format_interval(e) + " is improper");
}

}  // namespace

const char* convention_name(RepConvention c) noexcept { return c == RepConvention::Phi ? "phi" : "paper"; }

A4Poly case_representative(SignCase c, RepConvention conv) {
  const BivarPoly x = BivarPoly::x(), y = BivarPoly::y(), z;
  switch (c) {
    case SignCase::Pos:
      return {x, y, z, z};
    case SignCase::Zero:
      return conv == RepConvention::Phi ? A4Poly{z, y, -x, z} : A4Poly{z, y, x, z};
    case SignCase::Neg:
      return conv == RepConvention::Phi ? A4Poly{z, z, -x, -y} : A4Poly{-x, -y, z, z};
  }
  return {};
}

CharSystem char_system_2x2(const IMatrix& a, SignCase c, RepConvention conv) {
  require_2x2_proper(a);
  const A4Poly r = case_representative(c, conv);
  auto k = [&](std::size_t i, std::size_t j) { return A4Poly::constant(phi(a(i, j))); };
  const A4Poly d = (k(0, 0) - r) * (k(1, 1) - r) - k(0, 1) * k(1, 0);
  auto [p, q] = d.class_coords();
  return {p, q};
}

CaseSolution solve_case(const BivarPoly& p, const BivarPoly& q, SignCase c) {
  CaseSolution raw;
  if (p.degree_x() <= 1 || q.degree_x() <= 1) {
    raw = solve_system(p, q);
  } else if (p.degree_y() <= 1 || q.degree_y() <= 1) {
    raw = solve_system(p.swapped(), q.swapped());
    for (auto& [x, y] : raw.roots) std::swap(x, y);
  } else {
    throw Error(Errc::UnsupportedCoupling, "no equation is linear in one unknown");
  }

  CaseSolution out;
  out.eliminant = raw.eliminant;
  out.complex_discarded = raw.complex_discarded;
  for (auto [x, y] : raw.roots) {
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    polish(p, q, x, y);
    const double rp = std::fabs(p.eval(x, y)), rq = std::fabs(q.eval(x, y));
    if (rp > 1e-7 * std::max(1.0, eval_magnitude(p, x, y)) || rq > 1e-7 * std::max(1.0, eval_magnitude(q, x, y)))
      continue;
    if (!fit_case(c, x, y)) continue;
    const bool dup = std::any_of(out.roots.begin(), out.roots.end(), [&](const auto& r) {
      return std::fabs(r.first - x) <= kMerge * tol_scale(r.first, x) &&
             std::fabs(r.second - y) <= kMerge * tol_scale(r.second, y);
    });
    if (!dup) out.roots.emplace_back(x, y);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
  });
  return out;
}

std::vector<EigenvalueRecord> enumerate_eigenvalues(const IMatrix& a, RepConvention conv, double tol) {
  require_2x2_proper(a);
  std::vector<EigenvalueRecord> out;
  for (SignCase c : {SignCase::Pos, SignCase::Zero, SignCase::Neg}) {
    const CharSystem sys = char_system_2x2(a, c, conv);
    const CaseSolution sol = solve_case(sys.p, sys.q, c);
    for (const auto& [x, y] : sol.roots) {
      EigenvalueRecord rec;
      rec.value = Interval::from_coords(x, y);
      rec.sign_case = c;
      rec.convention = conv;
      rec.residual = std::max(std::fabs(sys.p.eval(x, y)), std::fabs(sys.q.eval(x, y)));
      if (rec.residual > tol * std::max({1.0, eval_magnitude(sys.p, x, y), eval_magnitude(sys.q, x, y)})) continue;
      const bool dup = std::any_of(out.begin(), out.end(),
                                   [&](const EigenvalueRecord& r) { return near(r.value, rec.value, kMerge); });
      if (!dup) out.push_back(rec);
    }
  }
  return out;
}

CentralEigenvalues central_eigenvalues(const IMatrix& a) {
  const RealMatrix c = center_matrix(a);
  CentralEigenvalues out;
  if (c.n == 0) return out;
  const RootReport r = real_roots(faddeev_leverrier(c.n, c.a));
  out.real.assign(r.real.rbegin(), r.real.rend());
  out.complex = r.complex;
  return out;
}

std::vector<EigenvalueRecord> classify_central(std::vector<EigenvalueRecord> records, const std::vector<double>& centers,
                                               double tau) {
  for (EigenvalueRecord& r : records) {
    r.is_central = false;
    r.matched_center.reset();
    if (!r.value.is_proper()) continue;
    const double c = center(r.value);
    double best = std::numeric_limits<double>::infinity();
    for (double lam : centers) {
      const double d = std::fabs(c - lam);
      if (d <= tau * std::max(1.0, std::fabs(lam)) && d < best) {
        best = d;
        r.is_central = true;
        r.matched_center = lam;
      }
    }
  }
  return records;
}

std::string component_case_name(const ComponentCase& c) {
  return std::string(c.proper ? "" : "improper-") + sign_case_name(c.sign_case);
}

FactorCompletion complete_factor(const Interval& trace_coeff, const Interval& det_coeff, const Interval& x) {
  FactorCompletion out;
  out.y = trace_coeff - x;
  out.product_residual = norm_inf(mul(x, out.y) - det_coeff);
  return out;
}

FactorizationReport verify_factorization(const IMatrix& a, const std::vector<Interval>& roots, double tol) {
  if (a.order() != 2) throw Error(Errc::UnsupportedOrder, "factorization check requires a 2x2 matrix");
  if (roots.size() != 2) throw Error(Errc::InvalidArgument, "factorization check needs exactly two roots");
  FactorizationReport rep;
  rep.trace_coeff = a(0, 0) + a(1, 1);
  rep.det_coeff = det(a);
  rep.sum_residual = norm_inf(roots[0] + roots[1] - rep.trace_coeff);
  rep.product_residual = norm_inf(mul(roots[0], roots[1]) - rep.det_coeff);
  rep.sum_ok = rep.sum_residual <= tol * std::max(1.0, norm_inf(rep.trace_coeff));
  rep.product_ok = rep.product_residual <= tol * std::max(1.0, norm_inf(rep.det_coeff));

  std::vector<EigenvalueRecord> known;
  bool proper_entries = std::all_of(a.entries().begin(), a.entries().end(), [](const Interval& e) { return e.is_proper(); });
  if (proper_entries) known = enumerate_eigenvalues(a, RepConvention::Phi);
  for (const Interval& r : roots) {
    const bool ok = r.is_proper() && std::any_of(known.begin(), known.end(), [&](const EigenvalueRecord& k) {
                      return k.sign_case == SignCase::Pos && near(k.value, r, 1e-9);
                    });
    rep.root_is_positive_eigenvalue.push_back(ok);
  }
  return rep;
}

std::optional<EigenvalueRecord> find_eigenvalue(const IMatrix& a, const Interval& x, double rel_tol) {
  std::optional<EigenvalueRecord> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (RepConvention conv : {RepConvention::Phi, RepConvention::Paper}) {
    for (const EigenvalueRecord& r : enumerate_eigenvalues(a, conv)) {
      if (!near(r.value, x, rel_tol)) continue;
      const double d = norm_inf(r.value - x);
      if (d < best_d) {
        best_d = d;
        best = r;
      }
    }
  }
  return best;
}

}  // namespace irbar
