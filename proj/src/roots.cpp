#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "irbar/errors.hpp"
#include "irbar/poly.hpp"

namespace irbar {

namespace {

using cplx = std::complex<double>;

cplx horner(const UniPoly& p, cplx z) {
  cplx r = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * z + p[i];
  return r;
}

// Magnitude of rounding noise when evaluating p at |z|.
double eval_noise(const UniPoly& p, double az) {
  double r = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * az + std::abs(p[i]);
  return 64.0 * std::numeric_limits<double>::epsilon() * r;
}

void merge_sorted(std::vector<double>& xs, double tol) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (!out.empty() && std::abs(x - out.back()) <= tol) continue;
    out.push_back(x);
  }
  xs = std::move(out);
}

double newton_polish(const UniPoly& p, double x) {
  UniPoly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(static_cast<double>(i) * p[i]);
  double best = x;
  double best_res = std::abs(uni_eval(p, x));
  for (int it = 0; it < 8 && best_res > 0.0; ++it) {
    const double d = uni_eval(dp, x);
    if (d == 0.0) break;
    x -= uni_eval(p, x) / d;
    const double res = std::abs(uni_eval(p, x));
    if (!(res < best_res)) break;
    best = x;
    best_res = res;
  }
  return best;
}

}  // namespace

std::vector<cplx> durand_kerner(const UniPoly& p_in, DurandKernerOptions opts) {
  UniPoly p = p_in;
  uni_trim(p);
  const int d = uni_degree(p);
  if (d < 1) throw Error(Errc::InvalidArgument, "Durand-Kerner needs degree >= 1");
  const double lead = p[d];
  for (double& c : p) c /= lead;

  double r = 0.0;
  for (int i = 0; i < d; ++i) r = std::max(r, std::abs(p[i]));
  r += 1.0;

  std::vector<cplx> z(d);
  for (int k = 0; k < d; ++k) {
    z[k] = std::polar(r, 2.0 * std::numbers::pi * k / d + 0.4);
  }
  for (int it = 0; it < opts.max_iterations; ++it) {
    bool done = true;
    for (int k = 0; k < d; ++k) {
      cplx denom = 1.0;
      for (int j = 0; j < d; ++j)
        if (j != k) denom *= z[k] - z[j];
      const cplx val = horner(p, z[k]);
      if (denom == 0.0) {
        z[k] += cplx(opts.tolerance, opts.tolerance);
        done = false;
        continue;
      }
      const cplx step = val / denom;
      z[k] -= step;
      const bool small_step = std::abs(step) <= opts.tolerance * std::max(1.0, std::abs(z[k]));
      // Clustered roots stall at rounding level; accept them on backward error.
      const bool at_noise = std::abs(horner(p, z[k])) <= eval_noise(p, std::abs(z[k]));
      if (!small_step && !at_noise) done = false;
    }
    if (done) return z;
  }
  throw Error(Errc::NoConvergence, "Durand-Kerner did not converge in " + std::to_string(opts.max_iterations) +
                                       " iterations");
}

RootReport real_roots(const UniPoly& p_in) {
  UniPoly p = p_in;
  uni_trim(p);
  const int d = uni_degree(p);
  if (d < 0) throw Error(Errc::InvalidArgument, "zero polynomial has no isolated roots");
  RootReport rep;
  if (d == 0) return rep;
  if (d == 1) {
    rep.real.push_back(-p[0] / p[1]);
    return rep;
  }
  if (d == 2) {
    const double a = p[2], b = p[1], c = p[0];
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0 && -disc <= 1e-14 * (b * b + std::abs(4.0 * a * c))) disc = 0.0;
    if (disc < 0.0) {
      const double re = -b / (2.0 * a);
      const double im = std::sqrt(-disc) / (2.0 * std::abs(a));
      rep.complex = {{re, im}, {re, -im}};
      return rep;
    }
    if (disc == 0.0) {
      rep.real.push_back(-b / (2.0 * a));
      return rep;
    }
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    rep.real.push_back(q / a);
    if (q != 0.0) rep.real.push_back(c / q);
    merge_sorted(rep.real, 1e-9);
    return rep;
  }
  std::vector<double> cluster;
  for (const cplx& z : durand_kerner(p)) {
    const double scale = std::max(1.0, std::abs(z));
    // A multiple real root splits into a tiny conjugate cluster; keep it real
    // when its real part is a root up to rounding.
    const bool clustered = std::abs(z.imag()) <= 1e-6 * scale &&
                           std::abs(uni_eval(p, z.real())) <= 1e6 * eval_noise(p, std::abs(z.real()));
    if (std::abs(z.imag()) <= 1e-10 * scale) {
      rep.real.push_back(newton_polish(p, z.real()));
    } else if (clustered) {
      cluster.push_back(newton_polish(p, z.real()));
    } else {
      rep.complex.push_back(z);
    }
  }
  merge_sorted(cluster, 1e-5);
  rep.real.insert(rep.real.end(), cluster.begin(), cluster.end());
  merge_sorted(rep.real, 1e-9);
  return rep;
}

}  // namespace irbar
