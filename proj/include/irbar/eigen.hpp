#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irbar/imatrix.hpp"
#include "irbar/poly.hpp"

namespace irbar {

/// How the unknown eigenvalue [x, y] is substituted into det(A - X I):
/// Phi uses its embedding per case, (x,y,0,0) / (0,y,-x,0) / (0,0,-x,-y);
/// Paper uses the literal representatives (x,y,0,0) / (0,y,x,0) / (-x,-y,0,0).
enum class RepConvention { Phi, Paper };

const char* convention_name(RepConvention c) noexcept;

A4Poly case_representative(SignCase c, RepConvention conv);

/// Class coordinates of det(A - X I) with X replaced by its case representative.
struct CharSystem {
  BivarPoly p;  // u-coordinate
  BivarPoly q;  // v-coordinate
};

CharSystem char_system_2x2(const IMatrix& a, SignCase c, RepConvention conv);

struct CaseSolution {
  std::vector<std::pair<double, double>> roots;  // (x, y) meeting the case constraints
  UniPoly eliminant;                              // univariate polynomial after elimination, if any
  int complex_discarded = 0;
};

/// Solves p = q = 0 under the sign constraints of `c` (slack 1e-9).
/// Decoupled systems are solved per variable; otherwise one equation must be
/// linear in x and is eliminated into a univariate polynomial in y.
/// Throws Error(UnsupportedCoupling) or Error(NoConvergence).
CaseSolution solve_case(const BivarPoly& p, const BivarPoly& q, SignCase c);

struct EigenvalueRecord {
  Interval value;
  SignCase sign_case = SignCase::Pos;
  RepConvention convention = RepConvention::Phi;
  double residual = 0.0;
  bool is_central = false;
  std::optional<double> matched_center;
};

/// Union over POS, ZERO, NEG (in that order; within a case by descending
/// upper then lower endpoint), merged within 1e-9. Requires n = 2, proper entries.
std::vector<EigenvalueRecord> enumerate_eigenvalues(const IMatrix& a, RepConvention conv, double tol = 1e-9);

struct CentralEigenvalues {
  std::vector<double> real;  // descending
  std::vector<std::complex<double>> complex;
};

/// Eigenvalues of the center matrix (any n).
CentralEigenvalues central_eigenvalues(const IMatrix& a);

/// Flags records whose center is within tau * max(1, |lambda|) of a real
/// center eigenvalue; matched_center is the closest such lambda.
std::vector<EigenvalueRecord> classify_central(std::vector<EigenvalueRecord> records,
                                               const std::vector<double>& centers, double tau = 0.05);

/// Region of one eigenvector component: sign case of its proper part plus properness.
struct ComponentCase {
  SignCase sign_case = SignCase::Pos;
  bool proper = true;

  friend bool operator==(const ComponentCase&, const ComponentCase&) = default;
};

std::string component_case_name(const ComponentCase& c);

struct EigenvectorRecord {
  std::vector<Interval> components;
  std::vector<ComponentCase> case_combo;
  double residual = 0.0;            // ||A.V - X.V||_inf in class coordinates
  int free_parameters = 0;          // kernel dimension of the case-combo system
  std::vector<std::vector<Interval>> generators;  // extreme rays of the feasible cone
};

/// Row residuals (A.V)_i - X.V_i in the equality form.
std::vector<Interval> eigen_row_residuals(const IMatrix& a, const Interval& x, const std::vector<Interval>& v);

/// Eigenvector families of `x`, one record per feasible case combination.
/// Throws Error(NoEigenvector) when every combination is infeasible.
std::vector<EigenvectorRecord> eigenvectors(const IMatrix& a, const Interval& x, double tol = 1e-9);

struct FactorCompletion {
  Interval y;
  double product_residual = 0.0;
};

/// Y = trace - X and ||X.Y - det||_inf.
FactorCompletion complete_factor(const Interval& trace_coeff, const Interval& det_coeff, const Interval& x);

struct FactorizationReport {
  Interval trace_coeff;
  Interval det_coeff;
  double sum_residual = 0.0;
  double product_residual = 0.0;
  bool sum_ok = false;
  bool product_ok = false;
  /// Per root: proper and a root of its case system under the Phi convention.
  std::vector<bool> root_is_positive_eigenvalue;
  bool pass() const { return sum_ok && product_ok; }
};

/// Checks X1 + X2 = a11 + a22 and X1 . X2 = det(A) within tol. Requires n = 2.
FactorizationReport verify_factorization(const IMatrix& a, const std::vector<Interval>& roots, double tol = 1e-9);

struct DiagonalizationRecord {
  IMatrix p;
  IMatrix d;
  double residual_ap_pd = 0.0;
  /// s . (adj(P) (A P)) with s = invert(det P); diagnostic only.
  IMatrix d_via_inverse;
  double inverse_path_deviation = 0.0;
};

/// Throws Error(NotDiagonalizable) unless two distinct central eigenvalues
/// with eigenvectors give an invertible P.
DiagonalizationRecord diagonalize(const IMatrix& a, double tau = 0.05, double tol = 1e-9);

struct DisjointnessReport {
  bool common_nonzero = false;
  int combos_checked = 0;
  std::vector<Interval> witness;
};

/// Searches every case combination for a nonzero V with A.V = X1.V = X2.V.
/// Throws Error(InvalidArgument) if x1 == x2 and Error(NotAnEigenvalue) if
/// either is not an enumerated eigenvalue of A.
DisjointnessReport check_disjointness(const IMatrix& a, const Interval& x1, const Interval& x2);

/// Closest enumerated eigenvalue (either convention) within rel_tol, if any.
std::optional<EigenvalueRecord> find_eigenvalue(const IMatrix& a, const Interval& x, double rel_tol = 1e-6);

}  // namespace irbar
