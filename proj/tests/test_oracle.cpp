#include <doctest.h>

#include <set>

#include "pdiff/counting.hpp"
#include "pdiff/diffusion.hpp"
#include "pdiff/oracle.hpp"
#include "pdiff/orientation.hpp"
#include "test_support.hpp"

using namespace pdiff;
using test::code_of;

TEST_CASE("oracle on tiny paths") {
  const auto p2 = enumerate_p2_configurations(2);
  CHECK(p2.count() == 2);
  CHECK(std::set<Configuration>(p2.configurations.begin(), p2.configurations.end()) ==
        std::set<Configuration>{{0, 1}, {0, -1}});
  CHECK(enumerate_p2_configurations(3).count() == 8);
  CHECK(enumerate_p2_configurations(4).count() == 26);
  CHECK(enumerate_p2_configurations(1).count() == 0);

  // (0, 3) is preperiodic and must not be counted.
  for (const auto& c : p2.configurations) CHECK(c != Configuration{0, 3});
}

TEST_CASE("oracle members are canonical, bounded and exactly periodic") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto g = SimpleGraph::path(n);
    const auto result = enumerate_p2_configurations(n);
    for (const auto& c : result.configurations) {
      CHECK(c[1] == 0);
      for (std::size_t i = 1; i < n; ++i) CHECK(std::abs(c[i + 1] - c[i]) <= 3);
      CHECK(fire_step(g, c) != c);
      CHECK(fire_step(g, fire_step(g, c)) == c);
    }
  }
}

TEST_CASE("oracle matches T_n") {
  for (std::size_t n = 2; n <= 9; ++n) {
    CHECK(static_cast<std::int64_t>(enumerate_p2_configurations(n).count()) == count_T_recurrence(n));
  }
}

TEST_CASE("parallel oracle matches the serial reference") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (int b : {1, 3}) {
      CHECK(enumerate_p2_configurations(n, b).configurations ==
            enumerate_p2_configurations_serial(n, b).configurations);
    }
  }
}

TEST_CASE("realized orientations") {
  const auto two = orientations_realized(enumerate_p2_configurations(2));
  CHECK(two == std::set<PathOrientation>{parse_orientation("R"), parse_orientation("L")});
  const auto four = orientations_realized(enumerate_p2_configurations(4));
  const auto listed = enumerate_p2_orientations(4);
  CHECK(four == std::set<PathOrientation>(listed.begin(), listed.end()));
  CHECK(orientations_realized(enumerate_p2_configurations(6)).size() == 14);
}

TEST_CASE("period partners are both counted") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto g = SimpleGraph::path(n);
    const auto members = enumerate_p2_configurations(n).configurations;
    const std::set<Configuration> lookup(members.begin(), members.end());
    for (const auto& c : members) CHECK(lookup.contains(canonicalize(fire_step(g, c))));
  }
}

TEST_CASE("bound stability") {
  for (std::size_t n : {2, 3, 5, 7}) CHECK(bound_stability_check(n));
  // A bound of 1 cannot see offsets of 2 or 3 and misses configurations.
  CHECK(enumerate_p2_configurations(5, 1).count() < 96);
}

TEST_CASE("oracle ceiling") {
  CHECK(code_of([] { enumerate_p2_configurations(50); }) == ErrorCode::CeilingExceeded);
  CHECK(code_of([] { enumerate_p2_configurations(12); }) == ErrorCode::CeilingExceeded);
  CHECK(code_of([] { bound_stability_check(10); }) == ErrorCode::CeilingExceeded);
  CHECK(code_of([] { enumerate_p2_configurations(4, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("bridge graphs") {
  const SimpleGraph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  const auto g = build_bridge_graph(triangle, 2, 3);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  CHECK(g.has_edge(2, 4));
  CHECK(g.has_edge(4, 5));
  CHECK(g.has_edge(5, 6));
  CHECK(build_bridge_graph(triangle, 1, 0) == triangle);
  CHECK(code_of([&] { build_bridge_graph(triangle, 4, 1); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("degenerate bridge graphs reduce to paths") {
  const SimpleGraph point(1, {});
  const SimpleGraph edge(2, {{1, 2}});
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto t = count_T_recurrence(n);
    CHECK(enumerate_p2_on_bridge_graph(point, 1, n - 1).count == t);
    CHECK(enumerate_p2_on_bridge_graph(edge, 2, n - 2).count == t);
  }
}

TEST_CASE("windowed counting agrees with the unpruned reference") {
  const SimpleGraph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  for (std::size_t k = 0; k <= 3; ++k) {
    const auto g = build_bridge_graph(triangle, 1, k);
    for (int w = 1; w <= 3; ++w) {
      CHECK(count_p2_windowed(g, g.vertex_count(), w) == count_p2_windowed_serial(g, g.vertex_count(), w));
    }
  }
  const auto star = parse_graph("1 2\n1 3\n1 4\n");
  CHECK(count_p2_windowed(star, 1, 2) == count_p2_windowed_serial(star, 1, 2));
}

TEST_CASE("triangle bridge counts are reported with their window history") {
  const SimpleGraph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  const auto result = enumerate_p2_on_bridge_graph(triangle, 1, 2);
  CHECK(result.vertex_count == 5);
  CHECK(result.pinned_vertex == 5);
  REQUIRE(result.history.size() >= 2);
  CHECK(result.history.back().count == result.count);
  CHECK(result.history[result.history.size() - 2].count == result.count);
}

TEST_CASE("bridge oracle guards") {
  const SimpleGraph split(3, {{1, 2}});
  CHECK(code_of([&] { enumerate_p2_on_bridge_graph(split, 1, 2); }) == ErrorCode::InvalidArgument);
  Limits tight;
  tight.bridge_max_vertices = 5;
  CHECK(code_of([&] { enumerate_p2_on_bridge_graph(SimpleGraph(1, {}), 1, 5, 3, tight); }) ==
        ErrorCode::CeilingExceeded);
  tight = Limits{};
  tight.bridge_max_window = 2;
  CHECK(code_of([&] { enumerate_p2_on_bridge_graph(SimpleGraph(1, {}), 1, 4, 1, tight); }) ==
        ErrorCode::WindowNotStabilized);
}
