#include "pdiff/orientation.hpp"


#include "pdiff/checked.hpp"
#include "pdiff/detail/parallel.hpp"
#include "pdiff/error.hpp"

namespace pdiff {

namespace {

// Senses are packed two bits per edge, e_1 in the lowest bits.
using Packed = std::uint64_t;

EdgeSense sense_at(Packed p, std::size_t pos) noexcept { return static_cast<EdgeSense>((p >> (2 * pos)) & 3U); }

Packed with_sense(Packed p, std::size_t pos, EdgeSense s) noexcept {
  return p | (static_cast<Packed>(s) << (2 * pos));
}

PathOrientation unpack(Packed p, std::size_t edges) {
  std::vector<EdgeSense> senses(edges);
  for (std::size_t i = 0; i < edges; ++i) senses[i] = sense_at(p, i);
  return PathOrientation(std::move(senses));
}

// True when appending sense at `pos` (0-based) completes a forbidden pattern.
// Every rule is checked at the position of its rightmost edge, so a prefix
// survives exactly when no violation lies inside it.
bool closes_violation(Packed p, std::size_t pos, std::size_t edges) noexcept {
  const EdgeSense cur = sense_at(p, pos);
  const bool last = pos + 1 == edges;
  if (cur == EdgeSense::Flat) {
    if (pos == 0 || last) return true;
    if (sense_at(p, pos - 1) == EdgeSense::Flat) return true;
  }
  if (pos >= 1) {
    const EdgeSense prev = sense_at(p, pos - 1);
    // Flat at pos-1 needs its neighbours to disagree.
    if (prev == EdgeSense::Flat && pos >= 2 && sense_at(p, pos - 2) == cur) return true;
    if (is_directed(cur) && prev == cur) {
      if (pos == 1 || last) return true;
      if (sense_at(p, pos - 2) != flipped(cur)) return true;
    }
    // Agreeing pair at (pos-2, pos-1) needs a disagreeing edge at pos.
    if (pos >= 2 && is_directed(prev) && sense_at(p, pos - 2) == prev && cur != flipped(prev)) return true;
  }
  return false;
}

void require_within_ceiling(std::size_t n, const Limits& limits) {
  if (n > limits.enumeration_max_n) {
    throw Error(ErrorCode::CeilingExceeded, "orientation enumeration limited to n <= " +
                                                std::to_string(limits.enumeration_max_n) + " (got " +
                                                std::to_string(n) + ")");
  }
}

void extend(Packed p, std::size_t pos, std::size_t stop, std::size_t edges, std::vector<Packed>& out) {
  if (pos == stop) {
    out.push_back(p);
    return;
  }
  for (EdgeSense s : {EdgeSense::Right, EdgeSense::Left, EdgeSense::Flat}) {
    const Packed q = with_sense(p, pos, s);
    if (!closes_violation(q, pos, edges)) extend(q, pos + 1, stop, edges, out);
  }
}

}  // namespace

std::string_view to_string(PatternRule rule) noexcept {
  switch (rule) {
    case PatternRule::AdjacentFlats: return "AdjacentFlats";
    case PatternRule::FlatAtLeaf: return "FlatAtLeaf";
    case PatternRule::FlatNotBookendedByDisagreeing: return "FlatNotBookendedByDisagreeing";
    case PatternRule::AgreeingPairNotBookended: return "AgreeingPairNotBookended";
  }
  return "unknown";
}

ForbiddenPatternReport check_p2_orientation(const PathOrientation& orient) {
  const std::size_t m = orient.edge_count();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "P_1 has no edges to classify");
  ForbiddenPatternReport report;
  auto flag = [&](PatternRule rule, std::size_t first, std::size_t last) {
    report.violations.push_back({rule, first, last});
  };
  const auto at = [&](std::ptrdiff_t i) { return orient.sense_or_flat(i); };
  const auto exists = [&](std::ptrdiff_t i) { return i >= 1 && static_cast<std::size_t>(i) <= m; };

  for (std::size_t i = 1; i + 1 <= m; ++i) {
    if (orient[i] == EdgeSense::Flat && orient[i + 1] == EdgeSense::Flat) flag(PatternRule::AdjacentFlats, i, i + 1);
  }
  if (orient[1] == EdgeSense::Flat) flag(PatternRule::FlatAtLeaf, 1, 1);
  if (m > 1 && orient[m] == EdgeSense::Flat) flag(PatternRule::FlatAtLeaf, m, m);

  for (std::size_t i = 2; i + 1 <= m; ++i) {
    if (orient[i] != EdgeSense::Flat) continue;
    const EdgeSense before = orient[i - 1];
    const EdgeSense after = orient[i + 1];
    if (!is_directed(before) || !is_directed(after) || before == after) {
      flag(PatternRule::FlatNotBookendedByDisagreeing, i - 1, i + 1);
    }
  }

  for (std::size_t i = 1; i + 1 <= m; ++i) {
    const EdgeSense s = orient[i];
    if (!is_directed(s) || orient[i + 1] != s) continue;
    const auto lo = static_cast<std::ptrdiff_t>(i) - 1;
    const auto hi = static_cast<std::ptrdiff_t>(i) + 2;
    const bool bookended = exists(lo) && exists(hi) && at(lo) == flipped(s) && at(hi) == flipped(s);
    if (!bookended) {
      flag(PatternRule::AgreeingPairNotBookended, exists(lo) ? i - 1 : i,
           exists(hi) ? i + 2 : i + 1);
    }
  }
  report.legal = report.violations.empty();
  return report;
}

bool is_p2_orientation(const PathOrientation& orient) noexcept {
  const std::size_t m = orient.edge_count();
  if (m == 0 || m > 31) return m != 0 && check_p2_orientation(orient).legal;
  Packed p = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    p = with_sense(p, pos, orient.senses()[pos]);
    if (closes_violation(p, pos, m)) return false;
  }
  return true;
}

std::vector<PathOrientation> enumerate_p2_orientations(std::size_t n, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  require_within_ceiling(n, limits);
  const std::size_t edges = n - 1;
  if (edges == 0) return {};

  std::vector<Packed> prefixes;
  const std::size_t split = std::min<std::size_t>(edges, 8);
  extend(0, 0, split, edges, prefixes);

  std::vector<std::vector<Packed>> buckets(prefixes.size());
  detail::parallel_for(prefixes.size(), [&](std::size_t b) { extend(prefixes[b], split, edges, edges, buckets[b]); });

  std::vector<PathOrientation> out;
  for (const auto& bucket : buckets) {
    for (Packed p : bucket) out.push_back(unpack(p, edges));
  }
  return out;
}

std::vector<PathOrientation> enumerate_p2_orientations_serial(std::size_t n, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  require_within_ceiling(n, limits);
  const std::size_t edges = n - 1;
  if (edges == 0) return {};

  std::vector<PathOrientation> out;
  std::vector<EdgeSense> senses(edges, EdgeSense::Right);
  // Odometer over {R, L, F}^edges with e_1 as the most significant digit.
  while (true) {
    PathOrientation candidate(senses);
    if (check_p2_orientation(candidate).legal) out.push_back(std::move(candidate));
    std::size_t digit = edges;
    while (digit > 0) {
      auto& s = senses[digit - 1];
      if (s != EdgeSense::Flat) {
        s = static_cast<EdgeSense>(static_cast<int>(s) + 1);
        break;
      }
      s = EdgeSense::Right;
      --digit;
    }
    if (digit == 0) break;
  }
  return out;
}

std::int64_t count_p2_orientations_recurrence(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<std::int64_t> r{0, 0, 2, 2, 4};  // r[0] unused
  for (std::size_t k = 5; k <= n; ++k) {
    r.push_back(checked::sub(checked::add(r[k - 1], checked::mul(2, r[k - 2])), r[k - 4]));
  }
  return r[n];
}

Configuration witness_configuration(const PathOrientation& orient) {
  if (orient.edge_count() == 0 || !check_p2_orientation(orient).legal) {
    throw Error(ErrorCode::IllegalOrientation, "'" + to_string(orient) + "' is not a p2-orientation");
  }
  std::vector<Stack> stacks(orient.vertex_count(), 0);
  for (std::size_t i = 2; i <= orient.vertex_count(); ++i) stacks[i - 1] = stacks[i - 2] + sign(orient[i - 1]);
  return Configuration(std::move(stacks));
}

}  // namespace pdiff
