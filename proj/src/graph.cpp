#include "pdiff/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "pdiff/checked.hpp"
#include "pdiff/error.hpp"

namespace pdiff {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges)
    : vertex_count_(vertex_count) {
  if (vertex_count == 0) throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    for (std::size_t endpoint : {e.u, e.v}) {
      if (endpoint < 1 || endpoint > vertex_count) {
        throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(endpoint) +
                                                    " outside [1, " + std::to_string(vertex_count) + "]");
      }
    }
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "edge " + std::to_string(dup->u) + " " + std::to_string(dup->v) + " listed twice");
  }

  std::vector<std::size_t> degree(vertex_count, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u - 1];
    ++degree[e.v - 1];
  }
  offsets_.assign(vertex_count + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
  neighbors_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    neighbors_[cursor[e.u - 1]++] = e.v;
    neighbors_[cursor[e.v - 1]++] = e.u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return SimpleGraph(n, edges);
}

std::span<const std::size_t> SimpleGraph::neighbors(std::size_t vertex) const {
  if (vertex < 1 || vertex > vertex_count_) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(vertex));
  }
  return std::span<const std::size_t>(neighbors_).subspan(offsets_[vertex - 1],
                                                          offsets_[vertex] - offsets_[vertex - 1]);
}

bool SimpleGraph::has_edge(std::size_t a, std::size_t b) const {
  const Edge e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool SimpleGraph::is_path() const {
  if (edges_.size() + 1 != vertex_count_) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != i + 1 || edges_[i].v != i + 2) return false;
  }
  return true;
}

bool SimpleGraph::is_connected() const {
  if (vertex_count_ == 0) return false;
  std::vector<bool> seen(vertex_count_, false);
  std::vector<std::size_t> stack{1};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : neighbors(v)) {
      if (!seen[w - 1]) {
        seen[w - 1] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

PathGraph::PathGraph(std::size_t n) : graph_(SimpleGraph::path(n)) {}

std::optional<PathGraph> as_path(const SimpleGraph& graph) {
  if (!graph.is_path()) return std::nullopt;
  return PathGraph(graph.vertex_count());
}

char to_char(EdgeSense s) noexcept {
  switch (s) {
    case EdgeSense::Right: return 'R';
    case EdgeSense::Left: return 'L';
    default: return 'F';
  }
}

PathOrientation PathOrientation::flipped() const {
  std::vector<EdgeSense> out(senses_.size());
  std::transform(senses_.begin(), senses_.end(), out.begin(), [](EdgeSense s) { return pdiff::flipped(s); });
  return PathOrientation(std::move(out));
}

PathOrientation PathOrientation::reversed() const {
  return PathOrientation(std::vector<EdgeSense>(senses_.rbegin(), senses_.rend()));
}

PathOrientation PathOrientation::mirrored() const { return reversed().flipped(); }

SimpleGraph parse_graph(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.starts_with("path:")) {
    const auto n = parse_int<long long>(body.substr(5));
    if (!n) throw Error(ErrorCode::MalformedLine, "expected path:<n>, got '" + std::string(body) + "'");
    if (*n < 1) throw Error(ErrorCode::IndexOutOfRange, "path length must be positive");
    return SimpleGraph::path(static_cast<std::size_t>(*n));
  }

  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t max_index = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t nl = body.find('\n', pos);
    const std::string_view raw = body.substr(pos, nl == std::string_view::npos ? body.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? body.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_tokens(line);
    const std::string where = "line " + std::to_string(line_no) + ": '" + std::string(line) + "'";
    if (tokens.size() == 2 && tokens[0] == "vertices") {
      const auto n = parse_int<long long>(tokens[1]);
      if (!n) throw Error(ErrorCode::MalformedLine, where);
      if (*n < 1) throw Error(ErrorCode::IndexOutOfRange, where + " declares no vertices");
      declared = static_cast<std::size_t>(*n);
      continue;
    }
    if (tokens.size() != 2) throw Error(ErrorCode::MalformedLine, where + " is not a 'u v' pair");
    const auto u = parse_int<long long>(tokens[0]);
    const auto v = parse_int<long long>(tokens[1]);
    if (!u || !v) throw Error(ErrorCode::MalformedLine, where);
    if (*u < 1 || *v < 1) throw Error(ErrorCode::IndexOutOfRange, where + " uses a non-positive index");
    if (*u == *v) throw Error(ErrorCode::SelfLoop, where);
    edges.push_back({static_cast<std::size_t>(*u), static_cast<std::size_t>(*v)});
    max_index = std::max({max_index, edges.back().u, edges.back().v});
  }
  if (!declared && edges.empty()) throw Error(ErrorCode::MalformedLine, "empty graph description");
  const std::size_t n = declared.value_or(max_index);
  if (max_index > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(max_index) + " exceeds declared count " + std::to_string(n));
  }
  return SimpleGraph(n, edges);
}

std::string render_graph(const SimpleGraph& graph) {
  if (graph.is_path()) return "path:" + std::to_string(graph.vertex_count());
  std::ostringstream out;
  out << "vertices " << graph.vertex_count() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Configuration parse_configuration(std::string_view text) {
  std::vector<Stack> stacks;
  const std::string_view body = trim(text);
  if (body.empty()) throw Error(ErrorCode::MalformedLine, "empty configuration");
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string_view field = body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
    const auto value = parse_int<Stack>(field);
    if (!value) throw Error(ErrorCode::MalformedLine, "bad stack size '" + std::string(trim(field)) + "'");
    stacks.push_back(*value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Configuration(std::move(stacks));
}

std::string format_configuration(const Configuration& config) {
  std::string out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(config.stacks()[i]);
  }
  return out;
}

PathOrientation parse_orientation(std::string_view text) {
  std::vector<EdgeSense> senses;
  for (char c : trim(text)) {
    switch (c) {
      case 'R': senses.push_back(EdgeSense::Right); break;
      case 'L': senses.push_back(EdgeSense::Left); break;
      case 'F': senses.push_back(EdgeSense::Flat); break;
      default:
        throw Error(ErrorCode::MalformedLine, std::string("orientation character '") + c + "' is not R, L or F");
    }
  }
  return PathOrientation(std::move(senses));
}

std::string to_string(const PathOrientation& orient) {
  std::string out;
  out.reserve(orient.edge_count());
  for (EdgeSense s : orient.senses()) out += to_char(s);
  return out;
}

Configuration shift(const Configuration& config, Stack k) {
  std::vector<Stack> out(config.stacks().begin(), config.stacks().end());
  for (Stack& s : out) s = checked::add(s, k);
  return Configuration(std::move(out));
}

Configuration canonicalize(const Configuration& config, std::size_t base_vertex) {
  if (base_vertex < 1 || base_vertex > config.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "base vertex " + std::to_string(base_vertex));
  }
  return shift(config, checked::sub(0, config[base_vertex]));
}

}  // namespace pdiff
