#pragma once

#include <optional>
#include <string>

#include "irbar/eigen.hpp"
#include "irbar/imatrix.hpp"

namespace irbar {

/// exp_elem on the diagonal, [0,0] elsewhere. Throws Error(NonDiagonal).
IMatrix exp_diag(const IMatrix& d);

struct DiagExp {
  DiagonalizationRecord diagonalization;
  IMatrix exp_d;
  IMatrix result;
};

/// scale(s, (P * exp_diag(D)) * adj(P)) with s = invert(det P).
DiagExp exp_via_diagonalization(const IMatrix& a, double tau = 0.05);

struct SeriesExp {
  IMatrix result;
  /// Index of the first term below tolerance; T_0 .. T_{terms_used-1} are the significant terms.
  int terms_used = 0;
  double last_term_norm = 0.0;
};

/// sum_k T_k, T_0 = I, T_k = (1/k) * (T_{k-1} A). Throws Error(NoConvergence)
/// when T_kmax is still at or above tol.
SeriesExp exp_series(const IMatrix& a, double tol = 1e-12, int kmax = 60);

struct ExpReport {
  std::optional<IMatrix> diag_path;
  std::string diag_error;  // set when the diagonalization path is unavailable
  IMatrix series_path;
  int terms_used = 0;
  std::optional<double> deviation;
};

/// Runs both paths; a failing diagonalization is recorded, not thrown.
ExpReport exp_report(const IMatrix& a, double tol = 1e-12, int kmax = 60, double tau = 0.05);

}  // namespace irbar
