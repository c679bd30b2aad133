#include "pdiff/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "pdiff/error.hpp"
#include "pdiff/oracle.hpp"

namespace pdiff {

namespace {

struct Context {
  const VerifyOptions& options;
  const VerifyTargets& targets;
  std::size_t max_n;
  std::mt19937_64 rng;
  std::map<std::size_t, OracleResult> oracle_cache;

  const OracleResult& oracle(std::size_t n) {
    auto it = oracle_cache.find(n);
    if (it == oracle_cache.end()) {
      it = oracle_cache.emplace(n, enumerate_p2_configurations(n, 3, options.limits)).first;
    }
    return it->second;
  }
};

// Empty string on success, otherwise a description of the first counterexample.
using Check = std::string (*)(Context&);

struct Property {
  const char* suite;
  const char* name;
  Check check;
};

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

std::string show(const Configuration& c) { return "(" + format_configuration(c) + ")"; }

std::size_t uniform(Context& ctx, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(ctx.rng);
}

Configuration random_config(Context& ctx, std::size_t n, Stack lo = -5, Stack hi = 5) {
  std::uniform_int_distribution<Stack> dist(lo, hi);
  std::vector<Stack> stacks(n);
  for (Stack& s : stacks) s = dist(ctx.rng);
  return Configuration(std::move(stacks));
}

// Random spanning tree plus extra edges when `connected`, otherwise G(n, 0.35).
SimpleGraph random_graph(Context& ctx, std::size_t n, bool connected) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(0.35);
  if (connected) {
    for (std::size_t v = 2; v <= n; ++v) edges.push_back({uniform(ctx, 1, v - 1), v});
  }
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      if (!coin(ctx.rng)) continue;
      const Edge e{u, v};
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
  }
  return SimpleGraph(n, edges);
}

std::vector<PathOrientation> all_orientations(std::size_t edges) {
  std::vector<PathOrientation> out;
  std::vector<EdgeSense> senses(edges, EdgeSense::Right);
  while (true) {
    out.emplace_back(senses);
    std::size_t i = edges;
    while (i > 0 && senses[i - 1] == EdgeSense::Flat) senses[--i] = EdgeSense::Right;
    if (i == 0) break;
    senses[i - 1] = static_cast<EdgeSense>(static_cast<int>(senses[i - 1]) + 1);
  }
  return out;
}

std::int64_t hooked_count(Context& ctx, const PathOrientation& orient) {
  std::int64_t product = 1;
  for (std::size_t k = 1; k <= orient.vertex_count(); ++k) product *= ctx.targets.multiplier(orient, k);
  return product;
}

Stack total_chips(const Configuration& c) { return std::accumulate(c.stacks().begin(), c.stacks().end(), Stack{0}); }

// ---- graph ----

std::string canonicalize_idempotent(Context& ctx) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_config(ctx, uniform(ctx, 1, ctx.max_n), -1000, 1000);
    const std::size_t base = uniform(ctx, 1, c.size());
    const auto once = canonicalize(c, base);
    if (canonicalize(once, base) != once || once[base] != 0) return describe(show(c), " base ", base);
  }
  return {};
}

std::string shift_composition(Context& ctx) {
  std::uniform_int_distribution<Stack> amount(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_config(ctx, uniform(ctx, 1, ctx.max_n));
    const Stack a = amount(ctx.rng);
    const Stack b = amount(ctx.rng);
    if (shift(shift(c, a), b) != shift(c, a + b)) return describe(show(c), " a=", a, " b=", b);
  }
  return {};
}

std::string render_roundtrip(Context& ctx) {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(ctx, 1, ctx.max_n);
    const auto g = trial % 5 == 0 ? SimpleGraph::path(n) : random_graph(ctx, n, trial % 2 == 0);
    if (parse_graph(render_graph(g)) != g) return render_graph(g);
  }
  return {};
}

// ---- diffusion ----

std::string chip_conservation(Context& ctx) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform(ctx, 1, ctx.max_n);
    const auto g = random_graph(ctx, n, trial % 2 == 0);
    const auto c = random_config(ctx, n);
    const auto next = ctx.targets.fire(g, c);
    if (total_chips(next) != total_chips(c)) return describe(render_graph(g), " config ", show(c));
  }
  return {};
}

std::string shift_equivariance(Context& ctx) {
  std::uniform_int_distribution<Stack> amount(-50, 50);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform(ctx, 1, ctx.max_n);
    const auto g = random_graph(ctx, n, trial % 2 == 0);
    const auto c = random_config(ctx, n);
    const Stack k = amount(ctx.rng);
    if (ctx.targets.fire(g, shift(c, k)) != shift(ctx.targets.fire(g, c), k)) {
      return describe(render_graph(g), " config ", show(c), " k=", k);
    }
  }
  return {};
}

std::string period_reversal(Context& ctx) {
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 200; ++trial) {
    const std::size_t n = uniform(ctx, 2, std::max<std::size_t>(2, ctx.max_n));
    const PathGraph path(n);
    const auto start = random_config(ctx, n);
    const auto report = detect_period(path.graph(), start, 100 * default_max_steps(start));
    if (report.period != 2) continue;
    ++checked;
    const auto& c = report.orbit[0];
    const auto next = ctx.targets.fire(path.graph(), c);
    if (ctx.targets.fire(path.graph(), next) != c ||
        induced_orientation(path, next) != induced_orientation(path, c).flipped()) {
      return describe("orbit member ", show(c));
    }
  }
  return checked == 0 ? "no period-2 orbit sampled" : "";
}

std::string period_detection(Context& ctx) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform(ctx, 1, ctx.max_n);
    const auto g = trial % 3 == 0 ? SimpleGraph::path(n) : random_graph(ctx, n, trial % 2 == 0);
    const auto c = random_config(ctx, n);
    try {
      const auto report = detect_period(g, c, 100 * default_max_steps(c));
      if (report.period != 1 && report.period != 2) return describe("period ", report.period, " for ", show(c));
    } catch (const Error& e) {
      return describe(render_graph(g), " config ", show(c), ": ", e.what());
    }
  }
  return {};
}

std::string fixed_point_iff_equal(Context& ctx) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform(ctx, 1, ctx.max_n);
    const auto g = random_graph(ctx, n, true);
    // Half the trials start from a flat configuration so both directions are exercised.
    const auto c = trial % 2 == 0 ? shift(Configuration(std::vector<Stack>(n, 0)), uniform(ctx, 0, 20))
                                  : random_config(ctx, n, -2, 2);
    const bool all_equal = std::adjacent_find(c.stacks().begin(), c.stacks().end(), std::not_equal_to<>()) ==
                           c.stacks().end();
    if ((ctx.targets.fire(g, c) == c) != all_equal) return describe(render_graph(g), " config ", show(c));

    const auto report = detect_period(g, c, 100 * default_max_steps(c));
    if (report.period == 1) {
      const auto canon = canonicalize(report.orbit[0]);
      if (std::any_of(canon.stacks().begin(), canon.stacks().end(), [](Stack s) { return s != 0; })) {
        return describe("fixed point ", show(report.orbit[0]), " is not constant");
      }
    }
  }
  return {};
}

// ---- orientation ----

std::string orientation_count_agreement(Context& ctx) {
  for (std::size_t n = 1; n <= ctx.max_n; ++n) {
    const auto found = static_cast<std::int64_t>(enumerate_p2_orientations(n, ctx.options.limits).size());
    const auto expected = ctx.targets.r_recurrence(n);
    if (found != expected) return describe("n=", n, " enumerated ", found, " recurrence ", expected);
  }
  return {};
}

std::string exhaustive_filter(Context& ctx) {
  for (std::size_t n = 2; n <= std::min<std::size_t>(ctx.max_n, 12); ++n) {
    std::vector<PathOrientation> filtered;
    for (auto& o : all_orientations(n - 1)) {
      if (ctx.targets.is_legal(o)) filtered.push_back(std::move(o));
    }
    const auto listed = enumerate_p2_orientations(n, ctx.options.limits);
    if (filtered != listed) {
      std::vector<PathOrientation> diff;
      std::set_symmetric_difference(filtered.begin(), filtered.end(), listed.begin(), listed.end(),
                                    std::back_inserter(diff));
      return describe("n=", n, " disagreement on ", diff.empty() ? "order" : to_string(diff.front()));
    }
  }
  return {};
}

std::string enumeration_parallel_matches_serial(Context& ctx) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(ctx.max_n, 14); ++n) {
    if (enumerate_p2_orientations(n, ctx.options.limits) != enumerate_p2_orientations_serial(n, ctx.options.limits)) {
      return describe("n=", n);
    }
  }
  return {};
}

std::string witness_validity(Context& ctx) {
  for (std::size_t n = 2; n <= std::min<std::size_t>(ctx.max_n, 14); ++n) {
    const PathGraph path(n);
    for (const auto& o : enumerate_p2_orientations(n, ctx.options.limits)) {
      const auto w = witness_configuration(o);
      const auto once = ctx.targets.fire(path.graph(), w);
      if (once == w || ctx.targets.fire(path.graph(), once) != w || induced_orientation(path, w) != o) {
        return describe(to_string(o), " witness ", show(w));
      }
    }
  }
  return {};
}

template <typename Transform>
std::string legality_preserved(Context& ctx, Transform transform) {
  for (std::size_t n = 2; n <= std::min<std::size_t>(ctx.max_n, 11); ++n) {
    for (const auto& o : all_orientations(n - 1)) {
      if (ctx.targets.is_legal(o) != ctx.targets.is_legal(transform(o))) return to_string(o);
    }
  }
  return {};
}

std::string mirror_symmetry(Context& ctx) {
  return legality_preserved(ctx, [](const PathOrientation& o) { return o.mirrored(); });
}

std::string flip_symmetry(Context& ctx) {
  return legality_preserved(ctx, [](const PathOrientation& o) { return o.flipped(); });
}

// ---- counting ----

std::string route_agreement(Context& ctx) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    std::int64_t direct = 0;
    for (const auto& o : enumerate_p2_orientations(n, ctx.options.limits)) direct += hooked_count(ctx, o);
    const auto recurrence = ctx.targets.t_recurrence(n);
    const auto summation = count_T_summation(n, SummationLimit::Corrected, ctx.options.limits);
    if (direct != recurrence || summation != recurrence) {
      return describe("n=", n, " direct ", direct, " recurrence ", recurrence, " summation ", summation);
    }
  }
  return {};
}

std::string short_limit_undercounts(Context& ctx) {
  const auto short_sum = count_T_summation(5, SummationLimit::OffByOne, ctx.options.limits);
  const auto expected = ctx.targets.t_recurrence(5);
  if (short_sum == expected) return describe("upper limit n-3 unexpectedly gives ", short_sum, " at n=5");
  return {};
}

std::string severing_multiplicativity(Context& ctx) {
  for (std::size_t n = 2; n <= std::min<std::size_t>(ctx.max_n, 12); ++n) {
    for (const auto& o : enumerate_p2_orientations(n, ctx.options.limits)) {
      const auto senses = o.senses();
      if (std::find(senses.begin(), senses.end(), EdgeSense::Flat) == senses.end()) continue;
      std::int64_t product = 1;
      for (const auto& part : sever_at_flats(o)) product *= hooked_count(ctx, part);
      const auto whole = hooked_count(ctx, o);
      if (whole != product) return describe(to_string(o), " whole ", whole, " parts ", product);
    }
  }
  return {};
}

std::string contraction_invariance(Context& ctx) {
  for (std::size_t n = 2; n <= std::min<std::size_t>(ctx.max_n, 12); ++n) {
    for (const auto& o : enumerate_p2_orientations(n, ctx.options.limits)) {
      for (std::size_t i = 2; i <= o.edge_count(); ++i) {
        if (!is_directed(o[i]) || o[i - 1] != o[i]) continue;
        const auto contracted = contract_agreeing(o, i);
        const auto before = hooked_count(ctx, o);
        const auto after = hooked_count(ctx, contracted);
        if (before != after) {
          return describe(to_string(o), " pair at ", i, ": ", before, " vs ", after, " on ", to_string(contracted));
        }
      }
    }
  }
  return {};
}

std::string alternating_sequence(Context& ctx) {
  const std::size_t top = std::min<std::size_t>(ctx.max_n, 14);
  for (std::size_t n = 3; n <= top; ++n) {
    if (alternating_count(n + 1) != 3 * alternating_count(n)) return describe("ratio fails at n=", n);
    std::vector<EdgeSense> a(n - 1);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = i % 2 == 0 ? EdgeSense::Right : EdgeSense::Left;
    const PathOrientation first(a);
    const auto direct = hooked_count(ctx, first) + hooked_count(ctx, first.flipped());
    if (direct != alternating_count(n)) return describe("n=", n, " direct ", direct, " A_n ", alternating_count(n));
  }
  return {};
}

std::string stage_monotonicity(Context& ctx) {
  for (std::size_t n = 2; n <= std::min<std::size_t>(ctx.max_n, 12); ++n) {
    std::int64_t previous = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto s = stage(n, k, ctx.options.limits);
      if (s < previous) return describe("stage(", n, ",", k, ") = ", s, " < ", previous);
      previous = s;
    }
    const auto expected = ctx.targets.t_recurrence(n);
    if (previous != expected) return describe("stage(", n, ",", n - 1, ") = ", previous, " expected ", expected);
    if (n >= 4 && stage(n, n - 3, ctx.options.limits) != expected - alternating_count(n)) {
      return describe("stage(", n, ",", n - 3, ") misses T_n - A_n");
    }
  }
  return {};
}

std::string ratio_convergence(Context& ctx) {
  const double ratio =
      static_cast<double>(ctx.targets.t_recurrence(31)) / static_cast<double>(ctx.targets.t_recurrence(30));
  const double alpha = characteristic_roots().dominant_root;
  if (std::abs(ratio - alpha) >= 1e-3) return describe("T_31/T_30 = ", ratio, " vs ", alpha);
  return {};
}

// ---- oracle ----

std::string oracle_vs_theory(Context& ctx) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    const auto count = static_cast<std::int64_t>(ctx.oracle(n).count());
    if (count != ctx.targets.t_recurrence(n)) {
      return describe("n=", n, " oracle ", count, " recurrence ", ctx.targets.t_recurrence(n));
    }
  }
  return {};
}

std::string orientation_soundness(Context& ctx) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    const auto realized = orientations_realized(ctx.oracle(n));
    const auto listed = enumerate_p2_orientations(n, ctx.options.limits);
    if (!std::equal(realized.begin(), realized.end(), listed.begin(), listed.end())) {
      return describe("n=", n, " realized ", realized.size(), " enumerated ", listed.size());
    }
    for (const auto& o : all_orientations(n - 1)) {
      if (ctx.targets.is_legal(o) != realized.contains(o)) return describe("n=", n, " ", to_string(o));
    }
  }
  return {};
}

std::string per_orientation_refinement(Context& ctx) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    const PathGraph path(n);
    std::map<PathOrientation, std::int64_t> groups;
    for (const auto& c : ctx.oracle(n).configurations) ++groups[induced_orientation(path, c)];
    for (const auto& [orient, count] : groups) {
      const auto predicted = hooked_count(ctx, orient);
      if (predicted != count) return describe(to_string(orient), " oracle ", count, " multipliers ", predicted);
    }
  }
  return {};
}

std::string orbit_pairing(Context& ctx) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    const PathGraph path(n);
    const auto& members = ctx.oracle(n).configurations;
    const std::set<Configuration> lookup(members.begin(), members.end());
    for (const auto& c : members) {
      if (!lookup.contains(canonicalize(ctx.targets.fire(path.graph(), c)))) return describe("partner of ", show(c));
    }
  }
  return {};
}

std::string bound_sufficiency(Context& ctx) {
  for (std::size_t n = 2; n <= std::min<std::size_t>(ctx.max_n, 9); ++n) {
    if (!bound_stability_check(n, ctx.options.limits)) return describe("n=", n);
  }
  return {};
}

std::string oracle_parallel_matches_serial(Context& ctx) {
  for (std::size_t n = 2; n <= std::min<std::size_t>(ctx.max_n, 7); ++n) {
    const auto a = enumerate_p2_configurations(n, 3, ctx.options.limits);
    const auto b = enumerate_p2_configurations_serial(n, 3, ctx.options.limits);
    if (a.configurations != b.configurations) return describe("n=", n);
  }
  return {};
}

// ---- conjecture ----

std::string degenerate_single_vertex(Context& ctx) {
  const SimpleGraph point(1, {});
  std::vector<std::int64_t> counts;
  for (std::size_t k = 0; k <= ctx.max_n; ++k) {
    const auto result = enumerate_p2_on_bridge_graph(point, 1, k, 3, ctx.options.limits);
    if (result.count != ctx.targets.t_recurrence(k + 1)) {
      return describe("k=", k, " bridge ", result.count, " path ", ctx.targets.t_recurrence(k + 1));
    }
    counts.push_back(result.count);
  }
  if (counts.size() >= 5) {
    const auto residuals = conjecture_recurrence_check(counts);
    for (std::size_t j = 0; j < residuals.size(); ++j) {
      if (residuals[j] != 0) return describe("residual ", residuals[j], " at k=", j + 4);
    }
  }
  return {};
}

std::string degenerate_single_edge(Context& ctx) {
  const SimpleGraph edge(2, {{1, 2}});
  for (std::size_t k = 0; k + 2 <= ctx.max_n; ++k) {
    const auto result = enumerate_p2_on_bridge_graph(edge, 2, k, 3, ctx.options.limits);
    if (result.count != ctx.targets.t_recurrence(k + 2)) {
      return describe("k=", k, " bridge ", result.count, " path ", ctx.targets.t_recurrence(k + 2));
    }
  }
  return {};
}

std::string windowed_pruning_matches_reference(Context& ctx) {
  const SimpleGraph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
  for (std::size_t k = 0; k <= 3; ++k) {
    const auto g = build_bridge_graph(triangle, 1, k);
    const std::size_t pinned = g.vertex_count();
    for (int window = 1; window <= 2; ++window) {
      const auto fast = count_p2_windowed(g, pinned, window);
      const auto slow = count_p2_windowed_serial(g, pinned, window);
      if (fast != slow) return describe("triangle k=", k, " window ", window, ": ", fast, " vs ", slow);
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(ctx, uniform(ctx, 1, 5), true);
    const auto fast = count_p2_windowed(g, 1, 2);
    const auto slow = count_p2_windowed_serial(g, 1, 2);
    if (fast != slow) return describe(render_graph(g), " window 2: ", fast, " vs ", slow);
  }
  return {};
}

const std::vector<Property>& registry() {
  static const std::vector<Property> properties = {
      {"graph", "canonicalize-idempotent", canonicalize_idempotent},
      {"graph", "shift-composition", shift_composition},
      {"graph", "render-roundtrip", render_roundtrip},
      {"diffusion", "chip-conservation", chip_conservation},
      {"diffusion", "shift-equivariance", shift_equivariance},
      {"diffusion", "period-reversal", period_reversal},
      {"diffusion", "period-detection", period_detection},
      {"diffusion", "fixed-point-iff-constant", fixed_point_iff_equal},
      {"orientation", "count-agreement", orientation_count_agreement},
      {"orientation", "exhaustive-filter", exhaustive_filter},
      {"orientation", "parallel-matches-serial", enumeration_parallel_matches_serial},
      {"orientation", "witness-validity", witness_validity},
      {"orientation", "mirror-symmetry", mirror_symmetry},
      {"orientation", "flip-symmetry", flip_symmetry},
      {"counting", "route-agreement", route_agreement},
      {"counting", "short-limit-undercounts", short_limit_undercounts},
      {"counting", "severing-multiplicativity", severing_multiplicativity},
      {"counting", "contraction-invariance", contraction_invariance},
      {"counting", "alternating-sequence", alternating_sequence},
      {"counting", "stage-monotonicity", stage_monotonicity},
      {"counting", "ratio-convergence", ratio_convergence},
      {"oracle", "oracle-vs-theory", oracle_vs_theory},
      {"oracle", "orientation-soundness", orientation_soundness},
      {"oracle", "per-orientation-refinement", per_orientation_refinement},
      {"oracle", "orbit-pairing", orbit_pairing},
      {"oracle", "bound-sufficiency", bound_sufficiency},
      {"oracle", "parallel-matches-serial", oracle_parallel_matches_serial},
      {"conjecture", "degenerate-single-vertex", degenerate_single_vertex},
      {"conjecture", "degenerate-single-edge", degenerate_single_edge},
      {"conjecture", "windowed-pruning-matches-reference", windowed_pruning_matches_reference},
  };
  return properties;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"graph", "diffusion", "orientation", "counting", "oracle", "conjecture"};
  return names;
}

std::size_t suite_default_max_n(const std::string& suite) {
  static const std::map<std::string, std::size_t> defaults = {
      {"graph", 10}, {"diffusion", 10}, {"orientation", 18}, {"counting", 16}, {"oracle", 10}, {"conjecture", 8},
  };
  const auto it = defaults.find(suite);
  if (it == defaults.end()) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  return it->second;
}

std::vector<PropertyResult> run_verification(const VerifyOptions& options) {
  for (const auto& name : options.suites) suite_default_max_n(name);
  for (const auto& [name, n] : options.max_n) {
    suite_default_max_n(name);
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "max-n for '" + name + "' must be positive");
  }

  std::vector<PropertyResult> results;
  for (const auto& suite : suite_names()) {
    if (!options.suites.empty() && !options.suites.contains(suite)) continue;
    const auto override_n = options.max_n.find(suite);
    Context ctx{options, options.targets,
                override_n == options.max_n.end() ? suite_default_max_n(suite) : override_n->second,
                std::mt19937_64(options.seed), {}};
    for (const auto& property : registry()) {
      if (suite != property.suite) continue;
      PropertyResult result{suite, property.name, false, {}, 0.0};
      const auto start = std::chrono::steady_clock::now();
      try {
        result.counterexample = property.check(ctx);
        result.passed = result.counterexample.empty();
      } catch (const std::exception& e) {
        result.counterexample = std::string("exception: ") + e.what();
      }
      result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results.push_back(std::move(result));
    }
  }
  return results;
}

}  // namespace pdiff
