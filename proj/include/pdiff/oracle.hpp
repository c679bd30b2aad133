#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "pdiff/graph.hpp"
#include "pdiff/limits.hpp"

namespace pdiff {

/// Canonical (v_1 = 0) exactly-2-periodic configurations of P_n whose
/// neighbouring stacks differ by at most `diff_bound`.
struct OracleResult {
  std::size_t n = 0;
  int diff_bound = 0;
  /// Sorted by difference vector (d_1 most significant).
  std::vector<Configuration> configurations;

  std::size_t count() const noexcept { return configurations.size(); }
};

/// Brute force over every difference vector in [-b, b]^(n-1): keeps C iff two
/// firings return C and one does not. Uses no structural result about paths.
/// OpenMP workers split the space by leading coordinates.
OracleResult enumerate_p2_configurations(std::size_t n, int diff_bound = 3, const Limits& limits = {});

/// Single-threaded reference for enumerate_p2_configurations.
OracleResult enumerate_p2_configurations_serial(std::size_t n, int diff_bound = 3, const Limits& limits = {});

std::set<PathOrientation> orientations_realized(const OracleResult& result);

/// True iff the oracle count on P_n is the same at bounds 3 and 4.
bool bound_stability_check(std::size_t n, const Limits& limits = {});

/// G_0 with a path of k new vertices hanging off `base_vertex` by a bridge.
/// Path vertex j (1..k) gets index |G_0| + j; the far end is |G_0| + k.
SimpleGraph build_bridge_graph(const SimpleGraph& g0, std::size_t base_vertex, std::size_t k);

/// Exactly-2-periodic configurations of a connected graph with `pinned` held
/// at zero and every breadth-first tree edge (rooted at `pinned`) spanning a
/// stack difference in [-window, window]. Depth-first with exact pruning: a
/// vertex is rejected as soon as its distance-2 ball is assigned and two
/// firings would move it.
std::int64_t count_p2_windowed(const SimpleGraph& graph, std::size_t pinned, int window);

/// Unpruned reference for count_p2_windowed; tiny graphs only.
std::int64_t count_p2_windowed_serial(const SimpleGraph& graph, std::size_t pinned, int window);

struct WindowCount {
  int window = 0;
  std::int64_t count = 0;
};

struct BridgeCount {
  std::size_t vertex_count = 0;
  std::size_t pinned_vertex = 0;
  std::int64_t count = 0;
  /// Smallest window whose count matched the next wider one.
  int window = 0;
  std::vector<WindowCount> history;
};

/// Counts on G_k, widening the window from `diff_bound` until two consecutive
/// windows agree. The result is empirical: no bound on stack offsets is known
/// for general graphs.
BridgeCount enumerate_p2_on_bridge_graph(const SimpleGraph& g0, std::size_t base_vertex, std::size_t k,
                                         int diff_bound = 3, const Limits& limits = {});

}  // namespace pdiff
