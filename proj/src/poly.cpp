#include "irbar/poly.hpp"

#include <algorithm>
#include <cmath>

namespace irbar {

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  uni_trim(r);
  return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

UniPoly uni_scale(double s, const UniPoly& a) {
  UniPoly r = a;
  for (double& c : r) c *= s;
  uni_trim(r);
  return r;
}

void uni_trim(UniPoly& a) {
  while (!a.empty() && a.back() == 0.0) a.pop_back();
}

int uni_degree(const UniPoly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0.0) return static_cast<int>(i);
  return -1;
}

double uni_eval(const UniPoly& a, double x) {
  double r = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

BivarPoly BivarPoly::constant(double c) { return monomial(c, 0, 0); }
BivarPoly BivarPoly::x() { return monomial(1.0, 1, 0); }
BivarPoly BivarPoly::y() { return monomial(1.0, 0, 1); }

BivarPoly BivarPoly::monomial(double c, int i, int j) {
  BivarPoly p;
  p.put({i, j}, c);
  return p;
}

void BivarPoly::put(const Key& k, double c) {
  if (c == 0.0) {
    terms_.erase(k);
  } else {
    terms_[k] = c;
  }
}

double BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0.0 : it->second;
}

int BivarPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BivarPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

double BivarPoly::eval(double x, double y) const {
  double r = 0.0;
  for (const auto& [k, c] : terms_) r += c * std::pow(x, k.first) * std::pow(y, k.second);
  return r;
}

UniPoly BivarPoly::x_coeff(int k) const {
  UniPoly r;
  for (const auto& [key, c] : terms_) {
    if (key.first != k) continue;
    if (r.size() <= static_cast<std::size_t>(key.second)) r.resize(key.second + 1, 0.0);
    r[key.second] += c;
  }
  uni_trim(r);
  return r;
}

UniPoly BivarPoly::in_x() const { return swapped().x_coeff(0); }

UniPoly BivarPoly::in_y() const { return x_coeff(0); }

BivarPoly BivarPoly::swapped() const {
  BivarPoly r;
  for (const auto& [k, c] : terms_) r.put({k.second, k.first}, c);
  return r;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  for (const auto& [k, c] : b.terms_) r.put(k, r.coeff(k.first, k.second) + c);
  return r;
}

BivarPoly operator-(const BivarPoly& a) { return -1.0 * a; }

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(double s, const BivarPoly& a) {
  BivarPoly r;
  for (const auto& [k, c] : a.terms_) r.put(k, s * c);
  return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const BivarPoly::Key k{ka.first + kb.first, ka.second + kb.second};
      r.put(k, r.coeff(k.first, k.second) + ca * cb);
    }
  }
  return r;
}

A4Poly A4Poly::constant(const A4Element& e) {
  return {BivarPoly::constant(e.x1), BivarPoly::constant(e.x2), BivarPoly::constant(e.x3),
          BivarPoly::constant(e.x4)};
}

A4Poly operator+(const A4Poly& a, const A4Poly& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4}; }

A4Poly operator-(const A4Poly& a, const A4Poly& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4}; }

A4Poly operator*(const A4Poly& x, const A4Poly& y) {
  return {x.x1 * y.x1 + x.x4 * y.x4, x.x2 * y.x2 + x.x3 * y.x3, x.x3 * y.x2 + x.x2 * y.x3,
          x.x4 * y.x1 + x.x1 * y.x4};
}

std::pair<BivarPoly, BivarPoly> A4Poly::class_coords() const { return {x1 - x3, x2 - x4}; }

UniPoly faddeev_leverrier(std::size_t n, const std::vector<double>& c) {
  // M_0 = 0, c_n = 1; M_k = C M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(C M_k) / k.
  UniPoly coeffs(n + 1, 0.0);
  coeffs[n] = 1.0;
  std::vector<double> m(n * n, 0.0);
  std::vector<double> cm(n * n, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += coeffs[n - k + 1];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += c[i * n + l] * m[l * n + j];
        cm[i * n + j] = s;
      }
    }
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += cm[i * n + i];
    coeffs[n - k] = -tr / static_cast<double>(k);
    m = cm;
  }
  return coeffs;
}

}  // namespace irbar
