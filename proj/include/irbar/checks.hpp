#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irbar/imatrix.hpp"
#include "irbar/kernels.hpp"

namespace irbar {

/// What a probe is expected to show: the law holds, the law is refuted, or
/// nothing is asserted and the deviation is only measured.
enum class Expectation { Holds, Fails, Measured };

const char* expectation_name(Expectation e) noexcept;

struct Counterexample {
  std::size_t index = 0;
  std::vector<Interval> inputs;
  Interval lhs;
  Interval rhs;
  double deviation = 0.0;
};

/// Result of evaluating one sample; lhs/rhs are the two sides compared.
struct ProbeOutcome {
  std::vector<Interval> inputs;
  Interval lhs;
  Interval rhs;
  double deviation = 0.0;
  bool violated = false;
};

struct ProbeReport {
  std::string law;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Expectation expectation = Expectation::Holds;
  std::size_t violations = 0;
  double max_deviation = 0.0;
  double mean_deviation = 0.0;
  std::vector<Counterexample> counterexamples;  // first few, in sample order
  std::string note;

  bool law_holds() const { return violations == 0; }
  /// True when the observation matches the expectation (always for Measured).
  bool ok() const;
};

constexpr std::size_t kMaxCounterexamples = 5;

/// Zero threshold for probes, scaled by max(1, magnitude of the compared values).
constexpr double kProbeZero = 1e-12;

/// (X + Y) . Z vs X . Z + Y . Z; sample 0 is the triple ([-1,2], [3,4], [1,2]).
ProbeReport probe_distributivity(std::uint64_t seed, std::size_t n, Exec exec = Exec::Parallel);

/// X . Y = 0 for nonzero X, Y over a grid of small classes plus n random pairs.
ProbeReport probe_zero_divisors(std::uint64_t seed, std::size_t n, Exec exec = Exec::Parallel);

/// Minkowski product within the . product, and X' in X, Y' in Y implies X'.Y' in X.Y.
ProbeReport probe_containment_monotony(std::uint64_t seed, std::size_t n, Exec exec = Exec::Parallel);

/// (X . Y) . Z vs X . (Y . Z), threshold 1e-9.
ProbeReport probe_associativity(std::uint64_t seed, std::size_t n, Exec exec = Exec::Parallel);

/// (A B) C vs A (B C) for random m x m matrices; measured only.
ProbeReport probe_matrix_associativity(std::uint64_t seed, std::size_t n, std::size_t m = 2,
                                       Exec exec = Exec::Parallel);

/// phi(X . Y) = phi(X) phi(Y), compared exactly.
ProbeReport probe_embedding(std::uint64_t seed, std::size_t n, Exec exec = Exec::Parallel);

/// X . invert(X) vs [1,1] for u v > 0, threshold 1e-12.
ProbeReport probe_inverse_law(std::uint64_t seed, std::size_t n, Exec exec = Exec::Parallel);

/// Names accepted by run_probe.
const std::vector<std::string>& probe_names();

/// Runs one probe by name with its standard sample count derived from
/// `samples` (zero divisors use 10x, matrix associativity 1/10).
ProbeReport run_probe(const std::string& law, std::uint64_t seed, std::size_t samples, Exec exec = Exec::Parallel);

std::vector<ProbeReport> run_suite(std::uint64_t seed, std::size_t samples, Exec exec = Exec::Parallel);

/// The worked matrices used throughout the tests and the finding ledger.
IMatrix matrix_b1();
IMatrix matrix_b2();
IMatrix matrix_b3();

/// Discrepancies between the reference formulas these routines were built
/// from and direct evaluation. Each entry is detected by computation.
struct Finding {
  std::string id;
  std::string title;
  bool confirmed = false;
  std::string detail;
};

std::vector<Finding> finding_ledger();

}  // namespace irbar
