#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pdiff/counting.hpp"
#include "pdiff/diffusion.hpp"
#include "pdiff/limits.hpp"
#include "pdiff/orientation.hpp"

namespace pdiff {

/// The functions the property suites exercise. Tests swap entries for broken
/// versions to check that the suites notice.
struct VerifyTargets {
  std::function<Configuration(const SimpleGraph&, const Configuration&)> fire = fire_step;
  std::function<bool(const PathOrientation&)> is_legal = is_p2_orientation;
  std::function<int(const PathOrientation&, std::size_t)> multiplier = vertex_multiplier;
  std::function<std::int64_t(std::size_t)> r_recurrence = count_p2_orientations_recurrence;
  std::function<std::int64_t(std::size_t)> t_recurrence = count_T_recurrence;
};

struct VerifyOptions {
  /// Empty selects every suite.
  std::set<std::string> suites;
  /// Per-suite size override; see suite_default_max_n.
  std::map<std::string, std::size_t> max_n;
  std::uint64_t seed = 0x5eed'c0ffee;
  Limits limits;
  VerifyTargets targets;
};

struct PropertyResult {
  std::string suite;
  std::string property;
  bool passed = false;
  /// First counterexample or error message; empty on success.
  std::string counterexample;
  double seconds = 0.0;
};

const std::vector<std::string>& suite_names();
std::size_t suite_default_max_n(const std::string& suite);

/// Runs the selected suites in a fixed order. Unknown suite names throw
/// invalid-argument.
std::vector<PropertyResult> run_verification(const VerifyOptions& options = {});

}  // namespace pdiff
