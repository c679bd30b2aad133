#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pdiff/graph.hpp"
#include "pdiff/limits.hpp"

namespace pdiff {

/// The four local patterns that keep a path orientation out of every period
/// of length 2.
enum class PatternRule {
  AdjacentFlats,                  // two consecutive Flat edges
  FlatAtLeaf,                     // e_1 or e_{n-1} Flat
  FlatNotBookendedByDisagreeing,  // Flat e_i whose neighbours are not one Right and one Left
  AgreeingPairNotBookended,       // agreeing pair without a disagreeing edge on each side
};

std::string_view to_string(PatternRule rule) noexcept;

struct PatternViolation {
  PatternRule rule;
  std::size_t first_edge;  // 1-based, inclusive
  std::size_t last_edge;   // 1-based, inclusive
};

struct ForbiddenPatternReport {
  bool legal = false;
  std::vector<PatternViolation> violations;
};

/// Classifies a path orientation (n >= 2) against the forbidden patterns.
ForbiddenPatternReport check_p2_orientation(const PathOrientation& orient);

/// Same verdict as check_p2_orientation(orient).legal without building the report.
bool is_p2_orientation(const PathOrientation& orient) noexcept;

/// All legal orientations of P_n in lexicographic order (Right < Left < Flat,
/// e_1 most significant). Prefix-pruned search fanned out over OpenMP workers.
std::vector<PathOrientation> enumerate_p2_orientations(std::size_t n, const Limits& limits = {});

/// Reference implementation: filters all 3^(n-1) candidates one by one.
std::vector<PathOrientation> enumerate_p2_orientations_serial(std::size_t n, const Limits& limits = {});

/// R_n = R_{n-1} + 2 R_{n-2} - R_{n-4} from R_1..R_4 = 0, 2, 2, 4.
std::int64_t count_p2_orientations_recurrence(std::size_t n);

/// Stacks built from v_1 = 0: +1 across a Right edge, -1 across a Left edge,
/// unchanged across a Flat edge. Throws illegal-orientation for illegal input.
Configuration witness_configuration(const PathOrientation& orient);

}  // namespace pdiff
