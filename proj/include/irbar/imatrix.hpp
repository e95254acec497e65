#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irbar/irbar.hpp"

namespace irbar {

/// Square n x n matrix over the interval classes, row-major.
class IMatrix {
 public:
  IMatrix() = default;
  explicit IMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  IMatrix(std::size_t n, std::vector<Interval> entries);

  /// Row-major nested initializer; rows must all have `rows.size()` entries.
  static IMatrix from_rows(const std::vector<std::vector<Interval>>& rows);

  std::size_t order() const { return n_; }

  const Interval& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Interval& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::span<const Interval> entries() const { return entries_; }

  friend bool operator==(const IMatrix&, const IMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Interval> entries_;
};

/// Real dense square matrix, row-major.
struct RealMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

/// scale (.) body, where (scale (.) body) * B := scale (.) (body * B):
/// the scale multiplies each entry only after the inner matrix product.
struct ScaledMatrix {
  Interval scale;
  IMatrix body;
};

IMatrix identity(std::size_t n);
IMatrix diag(std::span<const Interval> d);
IMatrix madd(const IMatrix& a, const IMatrix& b);
IMatrix msub(const IMatrix& a, const IMatrix& b);
IMatrix mneg(const IMatrix& a);
IMatrix mscale(const Interval& s, const IMatrix& a);
IMatrix mscale_real(double s, const IMatrix& a);
IMatrix transpose(const IMatrix& a);

/// Z_ij = sum_k X_ik . Y_kj, folded left to right over k. Rows are
/// distributed over OpenMP threads; every entry's summation order is fixed.
IMatrix matmul(const IMatrix& a, const IMatrix& b);

/// Serial reference of matmul, kept for testing the parallel kernel.
IMatrix matmul_serial(const IMatrix& a, const IMatrix& b);

/// Leibniz sum over permutations in lexicographic order; each term is a
/// left-fold product a_{1 s(1)} . a_{2 s(2)} . ...; odd terms enter negated.
Interval det(const IMatrix& a);

/// Expansion along the first row (diagnostic; differs from det for n >= 3).
Interval det_cofactor(const IMatrix& a);

/// adj_ij = (-1)^(i+j) det(minor_ji); for n = 2 this is [[a22, -a12], [-a21, a11]].
IMatrix adjugate(const IMatrix& a);

bool is_invertible(const IMatrix& a);

struct InverseResult {
  ScaledMatrix inverse;
  bool near_singular = false;
  /// ||A * A^-1 - Id||_inf over class coordinates.
  double residual = 0.0;
  /// Set when n >= 3; holds `residual`.
  std::optional<double> residual_warning;
};

/// inverse = ScaledMatrix(invert(det A), adjugate(A)). Throws Error(Singular).
InverseResult inverse(const IMatrix& a);

/// scale . entry for every entry of `m`.
IMatrix apply_scale(const Interval& scale, const IMatrix& m);

/// (s (.) body) * b  ->  s . (body * b).
IMatrix scaled_left_mul(const ScaledMatrix& s, const IMatrix& b);
/// a * (s (.) body)  ->  s . (a * body).
IMatrix scaled_right_mul(const IMatrix& a, const ScaledMatrix& s);

/// Entrywise centers; Error(ImproperEntry) unless all entries are proper.
RealMatrix center_matrix(const IMatrix& a);

/// max over entries of class-coordinate differences.
double max_deviation(const IMatrix& a, const IMatrix& b);
double norm_inf(const IMatrix& a);

bool is_diagonal(const IMatrix& a);

// Text format: one row per line, entries are interval literals separated by
// whitespace, '#' starts a comment, blank lines are ignored.
IMatrix parse_matrix(std::string_view text);
IMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const IMatrix& a);

}  // namespace irbar
