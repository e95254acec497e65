#include "irbar/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "irbar/eigen.hpp"
#include "irbar/errors.hpp"
#include "irbar/rng.hpp"

namespace irbar {

namespace {

ProbeReport run(std::string law, std::uint64_t seed, std::size_t count, Expectation expectation, Exec exec,
                const std::function<ProbeOutcome(std::size_t)>& f) {
  const std::vector<ProbeOutcome> outs = evaluate_indexed<ProbeOutcome>(count, f, exec);
  ProbeReport rep;
  rep.law = std::move(law);
  rep.seed = seed;
  rep.samples = count;
  rep.expectation = expectation;
  double total = 0.0;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const ProbeOutcome& o = outs[i];
    rep.max_deviation = std::max(rep.max_deviation, o.deviation);
    total += o.deviation;
    if (!o.violated) continue;
    ++rep.violations;
    if (rep.counterexamples.size() < kMaxCounterexamples)
      rep.counterexamples.push_back({i, o.inputs, o.lhs, o.rhs, o.deviation});
  }
  if (count > 0) rep.mean_deviation = total / static_cast<double>(count);
  return rep;
}

double scale_of(std::initializer_list<Interval> xs) {
  double m = 1.0;
  for (const Interval& x : xs) m = std::max(m, norm_inf(x));
  return m;
}

// Amount by which `inner` sticks out of `outer`.
double excess(const Interval& outer, const Interval& inner) {
  return std::max({0.0, outer.u() - inner.u(), inner.v() - outer.v()});
}

Interval nonzero_class(CounterRng& rng) {
  Interval x = sample_class(rng);
  while (x.is_zero()) x = sample_class(rng);
  return x;
}

Interval invertible_class(CounterRng& rng) {
  Interval x = sample_class(rng);
  while (!(x.u() * x.v() > 0.0)) x = sample_class(rng);
  return x;
}

IMatrix random_matrix(CounterRng& rng, std::size_t m) {
  IMatrix a(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = sample_class(rng);
  return a;
}

std::vector<Interval> zero_divisor_grid() {
  const double pts[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  std::vector<Interval> g;
  for (double u : pts)
    for (double v : pts)
      if (u != 0.0 || v != 0.0) g.push_back(Interval::from_coords(u, v));
  return g;
}

Interval iv(double u, double v) { return Interval::from_coords(u, v); }

}  // namespace

const char* expectation_name(Expectation e) noexcept {
  switch (e) {
    case Expectation::Holds:
      return "holds";
    case Expectation::Fails:
      return "fails";
    case Expectation::Measured:
      return "measured";
  }
  return "?";
}

bool ProbeReport::ok() const {
  switch (expectation) {
    case Expectation::Holds:
      return violations == 0;
    case Expectation::Fails:
      return violations > 0;
    case Expectation::Measured:
      return true;
  }
  return false;
}

ProbeReport probe_distributivity(std::uint64_t seed, std::size_t n, Exec exec) {
  auto rep = run("distributivity", seed, n + 1, Expectation::Fails, exec, [seed](std::size_t i) {
    Interval x = iv(-1, 2), y = iv(3, 4), z = iv(1, 2);
    if (i > 0) {
      CounterRng rng(seed, i);
      x = sample_class(rng);
      y = sample_class(rng);
      z = sample_class(rng);
    }
    ProbeOutcome o;
    o.inputs = {x, y, z};
    o.lhs = mul(x + y, z);
    o.rhs = mul(x, z) + mul(y, z);
    o.deviation = norm_inf(o.lhs - o.rhs);
    o.violated = o.deviation > kProbeZero * scale_of({o.lhs, o.rhs});
    return o;
  });
  rep.note = "sample 0 is the triple ([-1,2], [3,4], [1,2])";
  return rep;
}

ProbeReport probe_zero_divisors(std::uint64_t seed, std::size_t n, Exec exec) {
  const std::vector<Interval> grid = zero_divisor_grid();
  const std::size_t g2 = grid.size() * grid.size();
  auto rep = run("zero_divisors", seed, g2 + n, Expectation::Holds, exec, [&, seed](std::size_t i) {
    Interval x, y;
    if (i < g2) {
      x = grid[i / grid.size()];
      y = grid[i % grid.size()];
    } else {
      CounterRng rng(seed, i);
      x = nonzero_class(rng);
      y = nonzero_class(rng);
    }
    ProbeOutcome o;
    o.inputs = {x, y};
    o.lhs = mul(x, y);
    o.rhs = Interval::zero();
    o.violated = norm_inf(o.lhs) <= kProbeZero * std::max(1.0, norm_inf(x) * norm_inf(y));
    o.deviation = o.violated ? 1.0 : 0.0;
    return o;
  });
  const A4Element e1{1, 0, 0, 0}, e2{0, 1, 0, 0};
  rep.note = std::to_string(g2) + " grid pairs then random pairs; in A4 itself e1*e2 has norm " +
             format_real(a4_norm_inf(a4_mul(e1, e2))) + " (outside the image of phi)";
  return rep;
}

ProbeReport probe_containment_monotony(std::uint64_t seed, std::size_t n, Exec exec) {
  return run("containment_monotony", seed, n, Expectation::Holds, exec, [seed](std::size_t i) {
    CounterRng rng(seed, i);
    const Interval x = sample_proper(rng), y = sample_proper(rng);
    auto sub = [&rng](const Interval& a) {
      const double p = rng.uniform(a.u(), a.v()), q = rng.uniform(a.u(), a.v());
      return iv(std::min(p, q), std::max(p, q));
    };
    const Interval xs = sub(x), ys = sub(y);
    const Interval prod = mul(x, y), mink = minkowski_mul(x, y), inner = mul(xs, ys);
    ProbeOutcome o;
    o.inputs = {x, y, xs, ys};
    const double c = excess(prod, mink), m = excess(prod, inner);
    o.lhs = prod;
    o.rhs = c >= m ? mink : inner;
    o.deviation = std::max(c, m);
    o.violated = o.deviation > kProbeZero * scale_of({prod});
    return o;
  });
}

ProbeReport probe_associativity(std::uint64_t seed, std::size_t n, Exec exec) {
  return run("associativity", seed, n, Expectation::Holds, exec, [seed](std::size_t i) {
    CounterRng rng(seed, i);
    const Interval x = sample_class(rng), y = sample_class(rng), z = sample_class(rng);
    ProbeOutcome o;
    o.inputs = {x, y, z};
    o.lhs = mul(mul(x, y), z);
    o.rhs = mul(x, mul(y, z));
    o.deviation = norm_inf(o.lhs - o.rhs);
    o.violated = o.deviation > 1e-9;
    return o;
  });
}

ProbeReport probe_matrix_associativity(std::uint64_t seed, std::size_t n, std::size_t m, Exec exec) {
  auto rep = run("matrix_associativity", seed, n, Expectation::Measured, exec, [seed, m](std::size_t i) {
    CounterRng rng(seed, i);
    const IMatrix a = random_matrix(rng, m), b = random_matrix(rng, m), c = random_matrix(rng, m);
    const IMatrix l = matmul(matmul(a, b), c), r = matmul(a, matmul(b, c));
    ProbeOutcome o;
    std::size_t worst = 0;
    for (std::size_t k = 0; k < m * m; ++k) {
      const double d = norm_inf(l.entries()[k] - r.entries()[k]);
      if (d > o.deviation) {
        o.deviation = d;
        worst = k;
      }
    }
    o.lhs = l.entries()[worst];
    o.rhs = r.entries()[worst];
    o.violated = o.deviation > 1e-9 * std::max(1.0, norm_inf(l));
    return o;
  });
  rep.note = "order " + std::to_string(m) + "; violations count non-associative samples and do not fail the probe";
  return rep;
}

ProbeReport probe_embedding(std::uint64_t seed, std::size_t n, Exec exec) {
  return run("embedding", seed, n, Expectation::Holds, exec, [seed](std::size_t i) {
    CounterRng rng(seed, i);
    const Interval x = sample_class(rng), y = sample_class(rng);
    const A4Element direct = a4_mul(phi(x), phi(y));
    ProbeOutcome o;
    o.inputs = {x, y};
    o.lhs = mul(x, y);
    o.rhs = psi(direct);
    o.deviation = a4_norm_inf(phi(o.lhs) - direct);
    o.violated = o.deviation != 0.0;
    return o;
  });
}

ProbeReport probe_inverse_law(std::uint64_t seed, std::size_t n, Exec exec) {
  return run("inverse_law", seed, n, Expectation::Holds, exec, [seed](std::size_t i) {
    CounterRng rng(seed, i);
    const Interval x = invertible_class(rng);
    ProbeOutcome o;
    o.inputs = {x};
    o.lhs = mul(x, invert(x));
    o.rhs = Interval::one();
    o.deviation = norm_inf(o.lhs - o.rhs);
    o.violated = o.deviation > 1e-12;
    return o;
  });
}

const std::vector<std::string>& probe_names() {
  static const std::vector<std::string> names{"embedding",   "associativity", "containment_monotony",
                                              "inverse_law", "zero_divisors", "distributivity",
                                              "matrix_associativity"};
  return names;
}

ProbeReport run_probe(const std::string& law, std::uint64_t seed, std::size_t samples, Exec exec) {
  if (law == "embedding") return probe_embedding(seed, samples, exec);
  if (law == "associativity") return probe_associativity(seed, samples, exec);
  if (law == "containment_monotony") return probe_containment_monotony(seed, samples, exec);
  if (law == "inverse_law") return probe_inverse_law(seed, samples, exec);
  if (law == "zero_divisors") return probe_zero_divisors(seed, samples * 10, exec);
  if (law == "distributivity") return probe_distributivity(seed, samples, exec);
  if (law == "matrix_associativity") return probe_matrix_associativity(seed, std::max<std::size_t>(1, samples / 10), 2, exec);
  throw Error(Errc::InvalidArgument, "unknown law '" + law + "'");
}

std::vector<ProbeReport> run_suite(std::uint64_t seed, std::size_t samples, Exec exec) {
  std::vector<ProbeReport> out;
  for (const std::string& name : probe_names()) out.push_back(run_probe(name, seed, samples, exec));
  return out;
}

IMatrix matrix_b1() { return IMatrix::from_rows({{iv(1, 2), iv(-1, 3)}, {iv(-1, 3), iv(1, 2)}}); }
IMatrix matrix_b2() { return IMatrix::from_rows({{iv(1, 2), iv(-1, 3)}, {iv(-1, 3), iv(1, 7)}}); }
IMatrix matrix_b3() { return IMatrix::from_rows({{iv(1, 2), iv(1, 2)}, {iv(1, 3), iv(2, 5)}}); }

std::vector<Finding> finding_ledger() {
  std::vector<Finding> out;
  auto a4_str = [](const A4Element& e) {
    return "(" + format_real(e.x1) + "," + format_real(e.x2) + "," + format_real(e.x3) + "," + format_real(e.x4) + ")";
  };

  {
    const A4Element x{2, 3, 1, 1};
    const double d1 = x.x1 * x.x1 - x.x4 * x.x4, d2 = x.x2 * x.x2 - x.x3 * x.x3;
    const A4Element unsigned_inv{x.x1 / d1, x.x2 / d2, x.x3 / d2, x.x4 / d1};
    const A4Element bad = a4_mul(x, unsigned_inv), good = a4_mul(x, a4_inverse(x));
    out.push_back({"E1", "A4 inverse needs negated third and fourth components",
                   bad != a4_unit() && good == a4_unit(),
                   "x=(2,3,1,1): x*(x1/d1,x2/d2,x3/d2,x4/d1) = " + a4_str(bad) + ", corrected gives " + a4_str(good)});
  }
  {
    const Interval s = mul(iv(-1, 3), iv(-1, 3)), m = minkowski_mul(iv(-1, 3), iv(-1, 3));
    const Interval d = det(matrix_b1()), d_mink = mul(iv(1, 2), iv(1, 2)) - m;
    out.push_back({"E2", "square of [-1,3] is [-6,10], not the Minkowski [-3,9]", s != m,
                   "[-1,3].[-1,3] = " + format_interval(s) + ", Minkowski " + format_interval(m) + "; det(B1) = " +
                       format_interval(d) + " versus " + format_interval(d_mink) + " with the Minkowski square"});
  }
  {
    const Interval x = iv(-1, 2), y = iv(3, 4), z = iv(1, 2);
    const Interval l = mul(x + y, z), r = mul(x, z) + mul(y, z);
    out.push_back({"E3", "the product does not distribute over addition", l != r,
                   "([-1,2]+[3,4]).[1,2] = " + format_interval(l) + ", [-1,2].[1,2]+[3,4].[1,2] = " +
                       format_interval(r)});
  }
  {
    const Interval x = iv(-1, 2);
    const A4Element p = phi(x);
    const Interval transcribed = Interval::from_coords(p.x3 - p.x1, p.x2 - p.x4);
    out.push_back({"E4", "psi in the ZERO case is [x1-x3, x2-x4], not [x3-x1, x2-x4]",
                   transcribed != x && psi(p) == x,
                   "phi([-1,2]) = " + a4_str(p) + "; [x3-x1,x2-x4] gives " + format_interval(transcribed) +
                       ", class coordinates give " + format_interval(psi(p))});
  }
  {
    const IMatrix b = matrix_b3(), id = identity(2);
    IMatrix wrong(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Interval s = mul(b(i, 0), id(i, 0));
        s = s + mul(b(i, 1), id(i, 1));
        wrong(i, j) = s;
      }
    const bool right_ok = matmul(b, id) == b;
    out.push_back({"E5", "matrix product sums X_ik . Y_kj, not X_ik . Y_ik", right_ok && wrong != b,
                   "B3 * I with Y_ik indexing gives rows " + format_interval(wrong(0, 0)) + " " +
                       format_interval(wrong(0, 1)) + " / " + format_interval(wrong(1, 0)) + " " +
                       format_interval(wrong(1, 1))});
  }
  {
    const auto phi_recs = enumerate_eigenvalues(matrix_b3(), RepConvention::Phi);
    const auto paper_recs = enumerate_eigenvalues(matrix_b3(), RepConvention::Paper);
    out.push_back({"E6", "ZERO and NEG case representatives differ from phi", phi_recs.size() != paper_recs.size(),
                   "B3 has " + std::to_string(phi_recs.size()) + " eigenvalues with phi representatives and " +
                       std::to_string(paper_recs.size()) + " with (0,y,x,0) / (-x,-y,0,0)"});
  }
  {
    const double s5 = std::sqrt(5.0), s33 = std::sqrt(33.0);
    const Interval x1 = iv((3 + s5) / 2, (7 + s33) / 2);
    const std::vector<Interval> v{Interval::one(), iv((3 + s33) / 2, (1 + s5) / 4)};
    const auto r = eigen_row_residuals(matrix_b3(), x1, v);
    const bool row2 = std::fabs(r[1].u() + 5.0) <= 1e-9 && std::fabs(r[1].v() - 2.5) <= 1e-9;
    out.push_back({"E7", "eigenvector from dividing row 1 fails row 2", row2,
                   "V = ([1,1], " + format_interval(v[1]) + ") for X1: row residuals " + format_interval(r[0]) +
                       " and " + format_interval(r[1])});
  }
  return out;
}

}  // namespace irbar
