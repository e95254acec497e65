#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "irbar/checks.hpp"
#include "irbar/eigen.hpp"
#include "irbar/errors.hpp"
#include "irbar/expmap.hpp"
#include "irbar/report_json.hpp"

namespace irbar::cli {

namespace {

struct Config {
  std::string convention = "phi";
  double tol = 1e-9;
  int kmax = 60;
  double tau = 0.05;
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  bool json = false;
  std::vector<std::string> files;
  std::string value;
  std::string method = "both";
  std::vector<std::string> laws;
};

class Runner {
 public:
  Runner(const Config& cfg, std::istream& in, std::ostream& out) : cfg_(cfg), in_(in), out_(out) {}

  int prod() {
    const IMatrix c = matmul(load(0), load(1));
    if (cfg_.json) return emit(to_json(c));
    out_ << format_matrix(c);
    return kOk;
  }

  int det() {
    const Interval d = irbar::det(load(0));
    if (cfg_.json) return emit(Json{{"det", to_json(d)}, {"invertible", d.u() * d.v() > 0.0}});
    out_ << format_interval(d) << '\n';
    return kOk;
  }

  int inv() {
    const InverseResult r = inverse(load(0));
    if (cfg_.json) return emit(to_json(r));
    out_ << "scale " << format_interval(r.inverse.scale) << '\n';
    out_ << "adjugate\n" << format_matrix(r.inverse.body);
    out_ << "residual " << format_real(r.residual) << '\n';
    if (r.near_singular) out_ << "warning: determinant is near singular\n";
    if (r.residual_warning) out_ << "warning: order >= 3, inverse is not exact (residual " << format_real(*r.residual_warning) << ")\n";
    return kOk;
  }

  int eig() {
    const IMatrix a = load(0);
    const CentralEigenvalues centers = central_eigenvalues(a);
    const auto recs = classify_central(enumerate_eigenvalues(a, convention(), cfg_.tol), centers.real, cfg_.tau);
    if (cfg_.json) {
      Json j{{"convention", convention_name(convention())}};
      j["center_eigenvalues"] = centers.real;
      Json cx = Json::array();
      for (const auto& z : centers.complex) cx.push_back(Json{z.real(), z.imag()});
      j["complex_center_eigenvalues"] = cx;
      Json list = Json::array();
      for (const auto& r : recs) list.push_back(to_json(r));
      j["eigenvalues"] = list;
      return emit(j);
    }
    out_ << "center eigenvalues:";
    for (double l : centers.real) out_ << ' ' << format_real(l);
    out_ << '\n';
    for (const auto& z : centers.complex)
      out_ << "complex center eigenvalue: " << format_real(z.real()) << (z.imag() < 0 ? "-" : "+")
           << format_real(std::fabs(z.imag())) << "i\n";
    for (std::size_t i = 0; i < recs.size(); ++i) {
      out_ << 'X' << i + 1 << ' ' << format_interval(recs[i].value) << ' ' << sign_case_name(recs[i].sign_case);
      if (recs[i].is_central) out_ << " central " << format_real(*recs[i].matched_center);
      out_ << '\n';
    }
    return kOk;
  }

  int eigvec() {
    const IMatrix a = load(0);
    const Interval requested = parse_value(cfg_.value);
    const auto match = find_eigenvalue(a, requested);
    if (!match) throw Error(Errc::NotAnEigenvalue, format_interval(requested) + " is not an eigenvalue");
    const auto vecs = eigenvectors(a, match->value, cfg_.tol);
    if (cfg_.json) {
      Json list = Json::array();
      for (const auto& v : vecs) list.push_back(to_json(v));
      return emit(Json{{"eigenvalue", to_json(match->value)}, {"eigenvectors", list}});
    }
    out_ << "eigenvalue " << format_interval(match->value) << '\n';
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      out_ << 'V' << i + 1;
      for (const Interval& c : vecs[i].components) out_ << ' ' << format_interval(c);
      out_ << "  case";
      for (std::size_t k = 0; k < vecs[i].case_combo.size(); ++k)
        out_ << (k ? "," : " ") << component_case_name(vecs[i].case_combo[k]);
      out_ << "  free " << vecs[i].free_parameters << "  residual " << format_real(vecs[i].residual) << '\n';
    }
    return kOk;
  }

  int diag() {
    const DiagonalizationRecord r = diagonalize(load(0), cfg_.tau, cfg_.tol);
    if (cfg_.json) return emit(to_json(r));
    out_ << "P\n" << format_matrix(r.p) << "D\n" << format_matrix(r.d);
    out_ << "residual " << format_real(r.residual_ap_pd) << '\n';
    return kOk;
  }

  int exp() {
    const IMatrix a = load(0);
    if (cfg_.method == "diag") {
      const DiagExp d = exp_via_diagonalization(a, cfg_.tau);
      if (cfg_.json) return emit(Json{{"diag_path", to_json(d.result)}, {"exp_D", to_json(d.exp_d)}});
      out_ << "diagonalization\n" << format_matrix(d.result);
      return kOk;
    }
    if (cfg_.method == "series") {
      const SeriesExp s = exp_series(a, 1e-12, cfg_.kmax);
      if (cfg_.json) return emit(Json{{"series_path", to_json(s.result)}, {"terms_used", s.terms_used}});
      out_ << "series (" << s.terms_used << " terms)\n" << format_matrix(s.result);
      return kOk;
    }
    const ExpReport r = exp_report(a, 1e-12, cfg_.kmax, cfg_.tau);
    if (cfg_.json) return emit(to_json(r));
    out_ << "series (" << r.terms_used << " terms)\n" << format_matrix(r.series_path);
    if (r.diag_path) {
      out_ << "diagonalization\n" << format_matrix(*r.diag_path);
      out_ << "deviation " << format_real(*r.deviation) << '\n';
    } else {
      out_ << "diagonalization unavailable: " << r.diag_error << '\n';
    }
    return kOk;
  }

  int check() {
    std::vector<std::string> laws = cfg_.laws;
    const bool everything = laws.empty();
    if (everything) laws = probe_names();
    std::vector<ProbeReport> reports;
    for (const std::string& law : laws) reports.push_back(run_probe(law, cfg_.seed, cfg_.samples));
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    std::vector<Finding> findings;
    if (everything) findings = finding_ledger();

    if (cfg_.json) {
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(to_json(r));
      Json j{{"seed", cfg_.seed}, {"probes", list}, {"ok", ok}};
      if (everything) {
        Json f = Json::array();
        for (const auto& x : findings) f.push_back(to_json(x));
        j["findings"] = f;
      }
      emit(j);
      return ok ? kOk : kCheckMismatch;
    }
    for (const auto& r : reports) {
      out_ << r.law << ": expected " << expectation_name(r.expectation) << ", " << r.violations << " of "
           << r.samples << " samples violate, max deviation " << format_real(r.max_deviation) << "  "
           << (r.ok() ? "ok" : "MISMATCH") << '\n';
      if (!r.counterexamples.empty()) {
        const Counterexample& c = r.counterexamples.front();
        out_ << "  sample " << c.index << ':';
        for (const Interval& x : c.inputs) out_ << ' ' << format_interval(x);
        out_ << " -> " << format_interval(c.lhs) << " vs " << format_interval(c.rhs) << '\n';
      }
      if (!r.note.empty()) out_ << "  note: " << r.note << '\n';
    }
    for (const auto& f : findings)
      out_ << f.id << ' ' << (f.confirmed ? "confirmed" : "not reproduced") << ": " << f.title << "\n  " << f.detail
           << '\n';
    return ok ? kOk : kCheckMismatch;
  }

 private:
  IMatrix load(std::size_t k) {
    const std::string& path = cfg_.files.at(k);
    if (path != "-") return read_matrix_file(path);
    std::ostringstream buf;
    buf << in_.rdbuf();
    return parse_matrix(buf.str());
  }

  RepConvention convention() const { return cfg_.convention == "paper" ? RepConvention::Paper : RepConvention::Phi; }

  static Interval parse_value(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(Errc::InvalidArgument, "--value expects u,v");
    return parse_interval("[" + text + "]");
  }

  int emit(const Json& j) {
    out_ << j.dump(2) << '\n';
    return kOk;
  }

  const Config& cfg_;
  std::istream& in_;
  std::ostream& out_;
};

int exit_code(Errc c) {
  switch (c) {
    case Errc::Singular:
    case Errc::NotInvertible:
    case Errc::NotDiagonalizable:
    case Errc::NoEigenvector:
      return kSingular;
    case Errc::NoConvergence:
    case Errc::Overflow:
    case Errc::UnsupportedCoupling:
      return kNoConvergence;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Arithmetic, determinants, eigenvalues and exponentials of interval matrices", "irbar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--convention", cfg.convention, "Eigenvalue representatives (phi|paper)")
      ->check(CLI::IsMember({"phi", "paper"}));
  app.add_option("--tol", cfg.tol, "Validation tolerance")->check(CLI::PositiveNumber);
  app.add_option("--kmax", cfg.kmax, "Maximum series terms")->check(CLI::PositiveNumber);
  app.add_option("--tau", cfg.tau, "Central match tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "Probe seed");
  app.add_option("--samples", cfg.samples, "Probe sample count")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "Emit JSON");

  auto one_file = [&](CLI::App* sub) { sub->add_option("matrix", cfg.files, "Matrix file or -")->required()->expected(1); };
  auto* prod = app.add_subcommand("prod", "Matrix product A B");
  prod->add_option("matrices", cfg.files, "Two matrix files")->required()->expected(2);
  auto* det = app.add_subcommand("det", "Determinant");
  one_file(det);
  auto* inv = app.add_subcommand("inv", "Inverse as scale and adjugate");
  one_file(inv);
  auto* eig = app.add_subcommand("eig", "Eigenvalues of a 2x2 matrix");
  one_file(eig);
  auto* eigvec = app.add_subcommand("eigvec", "Eigenvectors for one eigenvalue");
  one_file(eigvec);
  eigvec->add_option("--value", cfg.value, "Eigenvalue as u,v")->required();
  auto* diag = app.add_subcommand("diag", "Diagonalize a 2x2 matrix");
  one_file(diag);
  auto* exp = app.add_subcommand("exp", "Matrix exponential");
  one_file(exp);
  exp->add_option("--method", cfg.method, "diag|series|both")->check(CLI::IsMember({"diag", "series", "both"}));
  auto* check = app.add_subcommand("check", "Algebraic law probes");
  check->add_option("--law", cfg.laws, "Probe to run (repeatable)")->check(CLI::IsMember(probe_names()));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner r(cfg, in, out);
  try {
    if (*prod) return r.prod();
    if (*det) return r.det();
    if (*inv) return r.inv();
    if (*eig) return r.eig();
    if (*eigvec) return r.eigvec();
    if (*diag) return r.diag();
    if (*exp) return r.exp();
    if (*check) return r.check();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return kUsage;
}

}  // namespace irbar::cli
