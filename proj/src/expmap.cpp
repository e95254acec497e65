#include "irbar/expmap.hpp"

#include "irbar/errors.hpp"

namespace irbar {

IMatrix exp_diag(const IMatrix& d) {
  if (!is_diagonal(d)) throw Error(Errc::NonDiagonal, "matrix is not diagonal");
  IMatrix out(d.order());
  for (std::size_t i = 0; i < d.order(); ++i) out(i, i) = exp_elem(d(i, i));
  return out;
}

DiagExp exp_via_diagonalization(const IMatrix& a, double tau) {
  DiagExp out;
  out.diagonalization = diagonalize(a, tau);
  const IMatrix& p = out.diagonalization.p;
  out.exp_d = exp_diag(out.diagonalization.d);
  const InverseResult inv = inverse(p);
  out.result = apply_scale(inv.inverse.scale, matmul(matmul(p, out.exp_d), inv.inverse.body));
  return out;
}

SeriesExp exp_series(const IMatrix& a, double tol, int kmax) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "series tolerance must be positive");
  if (kmax < 1) throw Error(Errc::InvalidArgument, "kmax must be at least 1");
  SeriesExp out;
  IMatrix term = identity(a.order());
  IMatrix sum = term;
  for (int k = 1; k <= kmax; ++k) {
    term = mscale_real(1.0 / k, matmul(term, a));
    sum = madd(sum, term);
    out.last_term_norm = norm_inf(term);
    if (out.last_term_norm < tol) {
      out.result = sum;
      out.terms_used = k;
      return out;
    }
  }
  throw Error(Errc::NoConvergence, "series term still " + format_real(out.last_term_norm) + " after " +
                                       std::to_string(kmax) + " terms");
}

ExpReport exp_report(const IMatrix& a, double tol, int kmax, double tau) {
  ExpReport rep;
  const SeriesExp s = exp_series(a, tol, kmax);
  rep.series_path = s.result;
  rep.terms_used = s.terms_used;
  try {
    rep.diag_path = exp_via_diagonalization(a, tau).result;
    rep.deviation = max_deviation(*rep.diag_path, rep.series_path);
  } catch (const Error& e) {
    if (e.code() != Errc::NotDiagonalizable && e.code() != Errc::Singular && e.code() != Errc::UnsupportedOrder &&
        e.code() != Errc::ImproperEntry)
      throw;
    rep.diag_error = e.what();
  }
  return rep;
}

}  // namespace irbar
