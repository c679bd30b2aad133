#include "pdiff/oracle.hpp"

#include <algorithm>
#include <queue>

#include "pdiff/checked.hpp"
#include "pdiff/detail/parallel.hpp"
#include "pdiff/diffusion.hpp"
#include "pdiff/error.hpp"

namespace pdiff {

namespace {

std::uint64_t candidate_count(std::size_t edges, int diff_bound, std::uint64_t cap) {
  const auto base = static_cast<std::uint64_t>(2 * diff_bound + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < edges; ++i) {
    if (total > cap / base) return cap + 1;
    total *= base;
  }
  return total;
}

void require_oracle_input(std::size_t n, int diff_bound, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (diff_bound < 1) throw Error(ErrorCode::InvalidArgument, "diff_bound must be positive");
  if (candidate_count(n - 1, diff_bound, limits.oracle_max_candidates) > limits.oracle_max_candidates) {
    throw Error(ErrorCode::CeilingExceeded, "oracle on P_" + std::to_string(n) + " at bound " +
                                                std::to_string(diff_bound) + " exceeds " +
                                                std::to_string(limits.oracle_max_candidates) + " candidates");
  }
}

// Visits every difference vector whose leading `prefix.size()` digits are
// fixed, in lexicographic order, collecting exactly-2-periodic configurations.
void scan_block(std::size_t n, int bound, std::span<const int> prefix, std::vector<Configuration>& out) {
  const std::size_t edges = n - 1;
  std::vector<int> digit(edges, -bound);
  std::copy(prefix.begin(), prefix.end(), digit.begin());
  std::vector<Stack> stacks(n, 0), once(n), twice(n);
  for (std::size_t i = 0; i < edges; ++i) stacks[i + 1] = stacks[i] + digit[i];

  const std::size_t free_from = prefix.size();
  while (true) {
    fire_path(stacks, once);
    if (once != stacks) {
      fire_path(once, twice);
      if (twice == stacks) out.emplace_back(stacks);
    }
    // Odometer over the free digits, last digit fastest.
    std::size_t pos = edges;
    while (pos > free_from && digit[pos - 1] == bound) --pos;
    if (pos == free_from) break;
    ++digit[pos - 1];
    for (std::size_t j = pos; j < edges; ++j) digit[j] = -bound;
    for (std::size_t i = pos - 1; i < edges; ++i) stacks[i + 1] = stacks[i] + digit[i];
  }
}

std::vector<std::vector<int>> leading_prefixes(std::size_t edges, int bound) {
  // Enough blocks to balance workers without tiny work units.
  std::size_t width = 0;
  std::size_t blocks = 1;
  while (width < edges && blocks < 256) {
    ++width;
    blocks *= static_cast<std::size_t>(2 * bound + 1);
  }
  std::vector<std::vector<int>> prefixes;
  std::vector<int> cur(width, -bound);
  while (true) {
    prefixes.push_back(cur);
    std::size_t pos = width;
    while (pos > 0 && cur[pos - 1] == bound) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    for (std::size_t j = pos; j < width; ++j) cur[j] = -bound;
  }
  return prefixes;
}

}  // namespace

OracleResult enumerate_p2_configurations(std::size_t n, int diff_bound, const Limits& limits) {
  require_oracle_input(n, diff_bound, limits);
  OracleResult result{n, diff_bound, {}};
  if (n == 1) return result;
  const auto prefixes = leading_prefixes(n - 1, diff_bound);
  std::vector<std::vector<Configuration>> blocks(prefixes.size());
  detail::parallel_for(prefixes.size(), [&](std::size_t b) { scan_block(n, diff_bound, prefixes[b], blocks[b]); });
  for (auto& block : blocks) {
    result.configurations.insert(result.configurations.end(), std::make_move_iterator(block.begin()),
                                 std::make_move_iterator(block.end()));
  }
  return result;
}

OracleResult enumerate_p2_configurations_serial(std::size_t n, int diff_bound, const Limits& limits) {
  require_oracle_input(n, diff_bound, limits);
  OracleResult result{n, diff_bound, {}};
  if (n == 1) return result;
  const SimpleGraph path = SimpleGraph::path(n);
  std::vector<int> digit(n - 1, -diff_bound);
  while (true) {
    std::vector<Stack> stacks(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) stacks[i + 1] = stacks[i] + digit[i];
    const Configuration c(std::move(stacks));
    const Configuration once = fire_step(path, c);
    if (once != c && fire_step(path, once) == c) result.configurations.push_back(c);
    std::size_t pos = digit.size();
    while (pos > 0 && digit[pos - 1] == diff_bound) --pos;
    if (pos == 0) break;
    ++digit[pos - 1];
    for (std::size_t j = pos; j < digit.size(); ++j) digit[j] = -diff_bound;
  }
  return result;
}

std::set<PathOrientation> orientations_realized(const OracleResult& result) {
  std::set<PathOrientation> out;
  if (result.n < 2) return out;
  const PathGraph path(result.n);
  for (const auto& c : result.configurations) out.insert(induced_orientation(path, c));
  return out;
}

bool bound_stability_check(std::size_t n, const Limits& limits) {
  require_oracle_input(n, 4, limits);
  return enumerate_p2_configurations(n, 3, limits).count() == enumerate_p2_configurations(n, 4, limits).count();
}

SimpleGraph build_bridge_graph(const SimpleGraph& g0, std::size_t base_vertex, std::size_t k) {
  const std::size_t m = g0.vertex_count();
  if (base_vertex < 1 || base_vertex > m) {
    throw Error(ErrorCode::IndexOutOfRange, "base vertex " + std::to_string(base_vertex) + " not in G_0");
  }
  std::vector<Edge> edges = g0.edges();
  for (std::size_t j = 1; j <= k; ++j) edges.push_back({j == 1 ? base_vertex : m + j - 1, m + j});
  return SimpleGraph(m + k, edges);
}

namespace {

// Breadth-first layout and pruning schedule for the windowed search.
struct SearchPlan {
  std::size_t n = 0;
  std::vector<std::size_t> order;                // 0-based vertices in BFS order
  std::vector<std::size_t> parent;               // BFS tree parent (0-based)
  std::vector<std::vector<std::size_t>> adj;     // 0-based adjacency
  std::vector<std::vector<std::size_t>> checks;  // vertices whose 2-ball completes at each depth
};

SearchPlan make_plan(const SimpleGraph& graph, std::size_t pinned) {
  SearchPlan plan;
  plan.n = graph.vertex_count();
  plan.adj.resize(plan.n);
  for (std::size_t v = 1; v <= plan.n; ++v) {
    for (std::size_t w : graph.neighbors(v)) plan.adj[v - 1].push_back(w - 1);
  }
  plan.parent.assign(plan.n, plan.n);
  std::vector<std::size_t> position(plan.n, plan.n);
  std::queue<std::size_t> frontier;
  frontier.push(pinned - 1);
  position[pinned - 1] = 0;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    plan.order.push_back(v);
    for (std::size_t w : plan.adj[v]) {
      if (position[w] == plan.n) {
        position[w] = plan.order.size() + frontier.size();
        plan.parent[w] = v;
        frontier.push(w);
      }
    }
  }
  plan.checks.resize(plan.n);
  for (std::size_t u = 0; u < plan.n; ++u) {
    std::size_t ready = position[u];
    for (std::size_t w : plan.adj[u]) {
      ready = std::max(ready, position[w]);
      for (std::size_t x : plan.adj[w]) ready = std::max(ready, position[x]);
    }
    plan.checks[ready].push_back(u);
  }
  return plan;
}

Stack fired(const SearchPlan& plan, std::span<const Stack> s, std::size_t v) {
  Stack out = s[v];
  for (std::size_t w : plan.adj[v]) out += (s[w] > s[v]) - (s[w] < s[v]);
  return out;
}

bool returns_after_two(const SearchPlan& plan, std::span<const Stack> s, std::size_t u) {
  const Stack fu = fired(plan, s, u);
  Stack twice = fu;
  for (std::size_t w : plan.adj[u]) {
    const Stack fw = fired(plan, s, w);
    twice += (fw > fu) - (fw < fu);
  }
  return twice == s[u];
}

bool moves_at_all(const SearchPlan& plan, std::span<const Stack> s) {
  for (std::size_t v = 0; v < plan.n; ++v) {
    if (fired(plan, s, v) != s[v]) return true;
  }
  return false;
}

bool depth_passes(const SearchPlan& plan, std::span<const Stack> s, std::size_t depth) {
  for (std::size_t u : plan.checks[depth]) {
    if (!returns_after_two(plan, s, u)) return false;
  }
  return true;
}

std::int64_t search(const SearchPlan& plan, std::vector<Stack>& s, std::size_t depth, int window) {
  if (depth == plan.n) return moves_at_all(plan, s) ? 1 : 0;
  const std::size_t v = plan.order[depth];
  const Stack base = s[plan.parent[v]];
  std::int64_t total = 0;
  for (int d = -window; d <= window; ++d) {
    s[v] = base + d;
    if (depth_passes(plan, s, depth)) total += search(plan, s, depth + 1, window);
  }
  return total;
}

// Partial assignments of the first `depth` BFS vertices that survive pruning.
void collect_prefixes(const SearchPlan& plan, std::vector<Stack>& s, std::size_t depth, std::size_t stop,
                      int window, std::vector<std::vector<Stack>>& out) {
  if (depth == stop) {
    out.push_back(s);
    return;
  }
  const std::size_t v = plan.order[depth];
  const Stack base = s[plan.parent[v]];
  for (int d = -window; d <= window; ++d) {
    s[v] = base + d;
    if (depth_passes(plan, s, depth)) collect_prefixes(plan, s, depth + 1, stop, window, out);
  }
}

void require_windowed_input(const SimpleGraph& graph, std::size_t pinned, int window) {
  if (!graph.is_connected()) throw Error(ErrorCode::InvalidArgument, "windowed search needs a connected graph");
  if (pinned < 1 || pinned > graph.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "pinned vertex " + std::to_string(pinned));
  }
  if (window < 1) throw Error(ErrorCode::InvalidArgument, "window must be positive");
}

}  // namespace

std::int64_t count_p2_windowed(const SimpleGraph& graph, std::size_t pinned, int window) {
  require_windowed_input(graph, pinned, window);
  const SearchPlan plan = make_plan(graph, pinned);
  std::vector<Stack> s(plan.n, 0);
  if (!depth_passes(plan, s, 0)) return 0;
  if (plan.n == 1) return search(plan, s, 1, window);

  std::vector<std::vector<Stack>> prefixes;
  const std::size_t split = std::min<std::size_t>(plan.n, 4);
  collect_prefixes(plan, s, 1, split, window, prefixes);
  std::vector<std::int64_t> partial(prefixes.size(), 0);
  detail::parallel_for(prefixes.size(), [&](std::size_t i) {
    std::vector<Stack> local = prefixes[i];
    partial[i] = search(plan, local, split, window);
  });
  std::int64_t total = 0;
  for (std::int64_t p : partial) total = checked::add(total, p);
  return total;
}

std::int64_t count_p2_windowed_serial(const SimpleGraph& graph, std::size_t pinned, int window) {
  require_windowed_input(graph, pinned, window);
  const SearchPlan plan = make_plan(graph, pinned);
  const std::size_t free = plan.n - 1;
  std::vector<int> digit(free, -window);
  std::int64_t total = 0;
  while (true) {
    std::vector<Stack> stacks(plan.n, 0);
    for (std::size_t t = 1; t < plan.n; ++t) {
      const std::size_t v = plan.order[t];
      stacks[v] = stacks[plan.parent[v]] + digit[t - 1];
    }
    const Configuration c(std::move(stacks));
    const Configuration once = fire_step(graph, c);
    if (once != c && fire_step(graph, once) == c) ++total;
    std::size_t pos = free;
    while (pos > 0 && digit[pos - 1] == window) --pos;
    if (pos == 0) break;
    ++digit[pos - 1];
    for (std::size_t j = pos; j < free; ++j) digit[j] = -window;
  }
  return total;
}

BridgeCount enumerate_p2_on_bridge_graph(const SimpleGraph& g0, std::size_t base_vertex, std::size_t k,
                                         int diff_bound, const Limits& limits) {
  if (!g0.is_connected()) throw Error(ErrorCode::InvalidArgument, "G_0 must be connected");
  if (diff_bound < 1) throw Error(ErrorCode::InvalidArgument, "diff_bound must be positive");
  const std::size_t total_vertices = g0.vertex_count() + k;
  if (total_vertices > limits.bridge_max_vertices) {
    throw Error(ErrorCode::CeilingExceeded, "bridge graph with " + std::to_string(total_vertices) +
                                                " vertices exceeds " + std::to_string(limits.bridge_max_vertices));
  }
  const SimpleGraph graph = build_bridge_graph(g0, base_vertex, k);
  BridgeCount result;
  result.vertex_count = graph.vertex_count();
  result.pinned_vertex = k > 0 ? graph.vertex_count() : base_vertex;

  int window = diff_bound;
  result.history.push_back({window, count_p2_windowed(graph, result.pinned_vertex, window)});
  while (true) {
    if (window + 1 > limits.bridge_max_window) {
      throw Error(ErrorCode::WindowNotStabilized,
                  "count still changing at window " + std::to_string(window) + " on G_" + std::to_string(k));
    }
    ++window;
    result.history.push_back({window, count_p2_windowed(graph, result.pinned_vertex, window)});
    const auto& prev = result.history[result.history.size() - 2];
    if (result.history.back().count == prev.count) {
      result.count = prev.count;
      result.window = prev.window;
      return result;
    }
  }
}

}  // namespace pdiff
