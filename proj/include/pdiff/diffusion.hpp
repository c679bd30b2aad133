#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pdiff/graph.hpp"

namespace pdiff {

/// Where a configuration sequence settles. `orbit` holds one configuration for
/// period 1 and the ordered pair for period 2, the first being the one that
/// occurs first in the sequence.
struct PeriodReport {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::vector<Configuration> orbit;
};

/// C_0, C_1, ..., each entry one firing step after the previous one.
struct SequenceTrace {
  Configuration initial;
  std::vector<Configuration> steps;
};

/// One simultaneous firing: every vertex sends a chip to each strictly poorer
/// neighbour. All comparisons read the old configuration.
Configuration fire_step(const SimpleGraph& graph, const Configuration& config);

/// Path-only firing kernel over raw stacks (v_1 first). No overflow checks;
/// callers keep |stack| well below 2^62.
inline void fire_path(std::span<const Stack> in, std::span<Stack> out) noexcept {
  const std::size_t n = in.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = in[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Stack d = (in[i + 1] > in[i]) - (in[i + 1] < in[i]);
    out[i] += d;
    out[i + 1] -= d;
  }
}

SequenceTrace run_sequence(const SimpleGraph& graph, const Configuration& config, std::size_t max_steps);

/// Least preperiod N and period p in {1, 2} with C_{N+p} = C_N (exact equality).
/// Throws period-not-found when no repeat happens within `max_steps` firings.
PeriodReport detect_period(const SimpleGraph& graph, const Configuration& config, std::size_t max_steps);

/// Heuristic step budget: 10 * n * (max stack - min stack + 1).
std::size_t default_max_steps(const Configuration& config);

PathOrientation induced_orientation(const PathGraph& path, const Configuration& config);

/// True iff two firings return `config` exactly.
bool is_inside_period(const SimpleGraph& graph, const Configuration& config);

}  // namespace pdiff
