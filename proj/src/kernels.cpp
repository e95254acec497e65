#include "irbar/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "irbar/checks.hpp"
#include "irbar/rng.hpp"

namespace irbar {

template <class T>
std::vector<T> evaluate_indexed(std::size_t n, const std::function<T(std::size_t)>& f, Exec exec) {
  std::vector<T> out(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  return out;
}

template std::vector<double> evaluate_indexed(std::size_t, const std::function<double(std::size_t)>&, Exec);
template std::vector<ProbeOutcome> evaluate_indexed(std::size_t, const std::function<ProbeOutcome(std::size_t)>&,
                                                    Exec);

DeviationSummary summarize(const std::vector<double>& deviations, double threshold) {
  DeviationSummary s;
  double total = 0.0;
  for (double d : deviations) {
    s.max_deviation = std::max(s.max_deviation, d);
    total += d;
    if (d > threshold) ++s.failures;
  }
  if (!deviations.empty()) s.mean_deviation = total / static_cast<double>(deviations.size());
  return s;
}

Interval sample_class(CounterRng& rng, SampleKind kind, double bound) {
  double a = rng.uniform(-bound, bound);
  double b = rng.uniform(-bound, bound);
  switch (kind) {
    case SampleKind::Pos:
      a = std::fabs(a);
      b = std::fabs(b);
      break;
    case SampleKind::Zero:
      a = -std::fabs(a);
      b = std::fabs(b);
      break;
    case SampleKind::Neg:
      a = -std::fabs(a);
      b = -std::fabs(b);
      break;
    case SampleKind::Improper:
      return Interval::from_coords(std::max(a, b), std::min(a, b));
  }
  return Interval::from_coords(std::min(a, b), std::max(a, b));
}

Interval sample_class(CounterRng& rng, double bound) {
  return sample_class(rng, static_cast<SampleKind>(rng.next() % 4), bound);
}

Interval sample_proper(CounterRng& rng, double bound) {
  return sample_class(rng, static_cast<SampleKind>(rng.next() % 3), bound);
}

}  // namespace irbar
