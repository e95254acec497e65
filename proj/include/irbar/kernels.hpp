#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace irbar {

enum class Exec { Serial, Parallel };

/// out[i] = f(i) for i in [0, n). The parallel variant splits indices over
/// OpenMP threads; f must depend on i only, so both variants agree bitwise.
template <class T>
std::vector<T> evaluate_indexed(std::size_t n, const std::function<T(std::size_t)>& f, Exec exec);

struct DeviationSummary {
  double max_deviation = 0.0;
  double mean_deviation = 0.0;
  std::size_t failures = 0;
};

/// Index-ordered reduction; failures count deviations above `threshold`.
DeviationSummary summarize(const std::vector<double>& deviations, double threshold);

}  // namespace irbar
