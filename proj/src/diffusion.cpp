#include "pdiff/diffusion.hpp"

#include <algorithm>
#include <map>

#include "pdiff/checked.hpp"
#include "pdiff/error.hpp"

namespace pdiff {

namespace {

void require_matching(const SimpleGraph& graph, const Configuration& config) {
  if (config.size() != graph.vertex_count()) {
    throw Error(ErrorCode::LengthMismatch, "configuration has " + std::to_string(config.size()) +
                                               " stacks for a graph on " +
                                               std::to_string(graph.vertex_count()) + " vertices");
  }
}

}  // namespace

Configuration fire_step(const SimpleGraph& graph, const Configuration& config) {
  require_matching(graph, config);
  const auto old = config.stacks();
  std::vector<Stack> next(old.begin(), old.end());
  for (std::size_t v = 1; v <= graph.vertex_count(); ++v) {
    Stack delta = 0;
    for (std::size_t w : graph.neighbors(v)) {
      if (old[w - 1] > old[v - 1]) ++delta;
      else if (old[w - 1] < old[v - 1]) --delta;
    }
    next[v - 1] = checked::add(next[v - 1], delta);
  }
  return Configuration(std::move(next));
}

SequenceTrace run_sequence(const SimpleGraph& graph, const Configuration& config, std::size_t max_steps) {
  if (max_steps < 1) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");
  require_matching(graph, config);
  SequenceTrace trace{config, {config}};
  trace.steps.reserve(max_steps + 1);
  for (std::size_t t = 0; t < max_steps; ++t) trace.steps.push_back(fire_step(graph, trace.steps.back()));
  return trace;
}

PeriodReport detect_period(const SimpleGraph& graph, const Configuration& config, std::size_t max_steps) {
  if (max_steps < 2) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 2");
  require_matching(graph, config);

  std::map<Configuration, std::size_t> first_seen;
  std::vector<Configuration> seq{config};
  first_seen.emplace(config, 0);
  for (std::size_t t = 1; t <= max_steps; ++t) {
    seq.push_back(fire_step(graph, seq.back()));
    const Configuration& current = seq.back();
    // The least N is found at the first time some C_t repeats an earlier entry.
    auto [it, inserted] = first_seen.emplace(current, t);
    if (inserted) continue;
    const std::size_t start = it->second;
    const std::size_t period = t - start;
    if (period != 1 && period != 2) {
      throw Error(ErrorCode::InternalInconsistency,
                  "configuration repeated after " + std::to_string(period) + " steps");
    }
    PeriodReport report{start, period, {}};
    for (std::size_t i = start; i < t; ++i) report.orbit.push_back(seq[i]);
    return report;
  }
  throw Error(ErrorCode::PeriodNotFound,
              "no repeat within " + std::to_string(max_steps) + " steps; raise max_steps");
}

std::size_t default_max_steps(const Configuration& config) {
  if (config.size() == 0) return 2;
  const auto [lo, hi] = std::minmax_element(config.stacks().begin(), config.stacks().end());
  const auto spread = static_cast<std::size_t>(checked::sub(*hi, *lo)) + 1;
  return std::max<std::size_t>(2, 10 * config.size() * spread);
}

PathOrientation induced_orientation(const PathGraph& path, const Configuration& config) {
  require_matching(path.graph(), config);
  std::vector<EdgeSense> senses;
  senses.reserve(path.edge_count());
  for (std::size_t i = 1; i < config.size(); ++i) {
    const Stack lower = config[i];
    const Stack upper = config[i + 1];
    senses.push_back(upper > lower ? EdgeSense::Right : upper < lower ? EdgeSense::Left : EdgeSense::Flat);
  }
  return PathOrientation(std::move(senses));
}

bool is_inside_period(const SimpleGraph& graph, const Configuration& config) {
  return fire_step(graph, fire_step(graph, config)) == config;
}

}  // namespace pdiff
