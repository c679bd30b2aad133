#pragma once

#include <cstddef>
#include <cstdint>

namespace pdiff {

/// Resource guards for the exhaustive routines.
struct Limits {
  /// Largest n accepted by orientation enumeration and the direct counts.
  std::size_t enumeration_max_n = 20;
  /// Largest raw candidate count (2b+1)^(n-1) accepted by the path oracle;
  /// 7^10 admits n = 11 at bound 3 and n = 9 at bound 4.
  std::uint64_t oracle_max_candidates = 282'475'249;
  /// Largest vertex count accepted by the bridge-graph oracle.
  std::size_t bridge_max_vertices = 16;
  /// Widest per-edge window the bridge-graph oracle escalates to.
  int bridge_max_window = 8;

  /// Defaults overridden by PDIFF_ENUM_MAX_N, PDIFF_ORACLE_MAX_CANDIDATES,
  /// PDIFF_BRIDGE_MAX_VERTICES and PDIFF_BRIDGE_MAX_WINDOW when set.
  static Limits from_environment();
};

}  // namespace pdiff
