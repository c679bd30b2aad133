#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdiff {

/// Chips on one vertex. Negative values (debt) are legal.
using Stack = std::int64_t;

/// Undirected edge between two 1-based vertex indices, stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 1..vertex_count.
///
/// Every public index is 1-based. Construction rejects self-loops, duplicate
/// edges and out-of-range endpoints.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges);

  /// P_n with edge e_i joining v_i and v_{i+1}; v_1 is the rightmost vertex.
  static SimpleGraph path(std::size_t n);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbours of `vertex` (1-based), in increasing order.
  std::span<const std::size_t> neighbors(std::size_t vertex) const;
  std::size_t degree(std::size_t vertex) const { return neighbors(vertex).size(); }
  bool has_edge(std::size_t a, std::size_t b) const;

  /// True iff the edge set is exactly {(i, i+1) : 1 <= i < n}.
  bool is_path() const;
  bool is_connected() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;    // CSR row starts, indexed by vertex - 1
  std::vector<std::size_t> neighbors_;  // 1-based neighbour ids
};

/// A path graph with the right-to-left indexing used throughout the library.
class PathGraph {
 public:
  explicit PathGraph(std::size_t n);

  std::size_t n() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.vertex_count() - 1; }
  const SimpleGraph& graph() const noexcept { return graph_; }

 private:
  SimpleGraph graph_;
};

std::optional<PathGraph> as_path(const SimpleGraph& graph);

/// Stack sizes ordered v_1..v_n.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Stack> stacks) : stacks_(std::move(stacks)) {}
  Configuration(std::initializer_list<Stack> stacks) : stacks_(stacks) {}

  std::size_t size() const noexcept { return stacks_.size(); }

  /// Stack of vertex `vertex` (1-based).
  Stack operator[](std::size_t vertex) const { return stacks_.at(vertex - 1); }

  std::span<const Stack> stacks() const noexcept { return stacks_; }
  std::vector<Stack>& mutable_stacks() noexcept { return stacks_; }

  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Stack> stacks_;
};

/// Direction of chip flow across path edge e_i = v_i v_{i+1}.
///
/// Right: chips flow from v_{i+1} to v_i (head toward the lower index).
/// Left:  chips flow from v_i to v_{i+1}.
/// Flat:  equal stacks, no flow.
/// The declaration order is the enumeration order (Right < Left < Flat).
enum class EdgeSense : std::uint8_t { Right = 0, Left = 1, Flat = 2 };

constexpr bool is_directed(EdgeSense s) noexcept { return s != EdgeSense::Flat; }

constexpr EdgeSense flipped(EdgeSense s) noexcept {
  switch (s) {
    case EdgeSense::Right: return EdgeSense::Left;
    case EdgeSense::Left: return EdgeSense::Right;
    default: return EdgeSense::Flat;
  }
}

/// +1 for Right, -1 for Left, 0 for Flat.
constexpr int sign(EdgeSense s) noexcept {
  return s == EdgeSense::Right ? 1 : s == EdgeSense::Left ? -1 : 0;
}

char to_char(EdgeSense s) noexcept;

/// One sense per edge of a path, entry i (1-based) describing e_i.
class PathOrientation {
 public:
  PathOrientation() = default;
  explicit PathOrientation(std::vector<EdgeSense> senses) : senses_(std::move(senses)) {}
  PathOrientation(std::initializer_list<EdgeSense> senses) : senses_(senses) {}

  std::size_t edge_count() const noexcept { return senses_.size(); }
  std::size_t vertex_count() const noexcept { return senses_.size() + 1; }

  /// Sense of e_i, 1 <= i <= edge_count().
  EdgeSense operator[](std::size_t i) const { return senses_.at(i - 1); }

  /// Sense of e_i, treating missing edges (i < 1 or i > edge_count) as Flat.
  EdgeSense sense_or_flat(std::ptrdiff_t i) const noexcept {
    if (i < 1 || static_cast<std::size_t>(i) > senses_.size()) return EdgeSense::Flat;
    return senses_[static_cast<std::size_t>(i) - 1];
  }

  std::span<const EdgeSense> senses() const noexcept { return senses_; }

  /// Swap Right and Left on every edge.
  PathOrientation flipped() const;
  /// Reverse the edge order without changing senses.
  PathOrientation reversed() const;
  /// The same orientation seen from the other end: reversed and flipped.
  PathOrientation mirrored() const;

  friend auto operator<=>(const PathOrientation&, const PathOrientation&) = default;

 private:
  std::vector<EdgeSense> senses_;
};

/// Parses `path:<n>` or an edge-list body (`u v` per line, 1-based).
///
/// Blank lines and lines starting with '#' are ignored. A `vertices <n>` line
/// declares isolated trailing vertices.
SimpleGraph parse_graph(std::string_view text);
std::string render_graph(const SimpleGraph& graph);

/// Comma-separated integers ordered v_1..v_n.
Configuration parse_configuration(std::string_view text);
std::string format_configuration(const Configuration& config);

/// Orientation string over {R, L, F}, e_1 first.
PathOrientation parse_orientation(std::string_view text);
std::string to_string(const PathOrientation& orient);

Configuration shift(const Configuration& config, Stack k);

/// Shifts so that `base_vertex` (1-based, default v_1) holds zero chips.
Configuration canonicalize(const Configuration& config, std::size_t base_vertex = 1);

}  // namespace pdiff
