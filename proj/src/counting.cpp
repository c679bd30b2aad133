#include "pdiff/counting.hpp"

#include <algorithm>

#include "pdiff/checked.hpp"
#include "pdiff/detail/parallel.hpp"
#include "pdiff/error.hpp"
#include "pdiff/orientation.hpp"

namespace pdiff {

namespace {

constexpr int idx(EdgeSense s) { return static_cast<int>(s); }

// Multiplier of an interior vertex v_k indexed by (e_k, e_{k-1}, e_{k-2}),
// R = 0, L = 1, F = 2. Zero marks the 13 triples that never occur in a
// period-2 orientation.
constexpr std::array<int, 27> kMultiplierTable = {
    //        e_{k-2}:  R  L  F
    /* e_k=R, e_{k-1}=R */ 0, 1, 0,
    /* e_k=R, e_{k-1}=L */ 3, 1, 2,
    /* e_k=R, e_{k-1}=F */ 0, 1, 0,
    /* e_k=L, e_{k-1}=R */ 1, 3, 2,
    /* e_k=L, e_{k-1}=L */ 1, 0, 0,
    /* e_k=L, e_{k-1}=F */ 1, 0, 0,
    /* e_k=F, e_{k-1}=R */ 0, 2, 1,
    /* e_k=F, e_{k-1}=L */ 2, 0, 1,
    /* e_k=F, e_{k-1}=F */ 0, 0, 0,
};

constexpr int table_lookup(EdgeSense ek, EdgeSense ek1, EdgeSense ek2) {
  return kMultiplierTable[static_cast<std::size_t>(9 * idx(ek) + 3 * idx(ek1) + idx(ek2))];
}

[[noreturn]] void illegal_local(const PathOrientation& orient, std::size_t k) {
  throw Error(ErrorCode::IllegalLocalPattern,
              "senses around v_" + std::to_string(k) + " in '" + to_string(orient) + "' match no table row");
}

void require_legal(const PathOrientation& orient) {
  if (orient.edge_count() == 0 || !is_p2_orientation(orient)) {
    throw Error(ErrorCode::IllegalOrientation, "'" + to_string(orient) + "' is not a p2-orientation");
  }
}

// Leaf-side vertex whose only other nearby edge is `inner` (Flat if absent).
int leaf_multiplier(const PathOrientation& orient, std::size_t k, EdgeSense leaf_edge, EdgeSense inner) {
  if (!is_directed(leaf_edge) || inner == leaf_edge) illegal_local(orient, k);
  return inner == EdgeSense::Flat ? 1 : 2;
}

}  // namespace

std::int64_t MultiplierVector::product() const {
  std::int64_t p = 1;
  for (int v : values) p = checked::mul(p, v);
  return p;
}

int vertex_multiplier(const PathOrientation& orient, std::size_t k) {
  const std::size_t n = orient.vertex_count();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(k) + " outside P_" + std::to_string(n));
  }
  if (k == 1) return 1;
  if (n == 2) {
    // P_2 holds exactly one canonical configuration per direction.
    if (!is_directed(orient[1])) illegal_local(orient, k);
    return 1;
  }
  if (k == 2) return leaf_multiplier(orient, k, orient[1], orient[2]);
  if (k == n) return leaf_multiplier(orient, k, orient[n - 1], orient[n - 2]);
  const int m = table_lookup(orient[k], orient[k - 1], orient[k - 2]);
  if (m == 0) illegal_local(orient, k);
  return m;
}

MultiplierVector multipliers(const PathOrientation& orient) {
  require_legal(orient);
  MultiplierVector out;
  out.values.reserve(orient.vertex_count());
  for (std::size_t k = 1; k <= orient.vertex_count(); ++k) out.values.push_back(vertex_multiplier(orient, k));
  return out;
}

std::int64_t count_configs_on_orientation(const PathOrientation& orient) { return multipliers(orient).product(); }

std::int64_t alternating_count(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (n == 1) return 0;
  if (n == 2) return 2;
  std::int64_t a = 8;
  for (std::size_t k = 3; k < n; ++k) a = checked::mul(a, 3);
  return a;
}

std::int64_t stage(std::size_t n, std::size_t k, const Limits& limits) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "stage needs n >= 2");
  const std::size_t reach = std::min(k + 1, n - 1);
  std::int64_t total = 0;
  for (const PathOrientation& orient : enumerate_p2_orientations(n, limits)) {
    // Once the window covers the whole path, every configuration counts,
    // including the alternating ones that never show a Flat or a pair.
    bool hit = k + 1 >= n;
    for (std::size_t i = 1; i <= reach && !hit; ++i) {
      const EdgeSense s = orient[i];
      hit = s == EdgeSense::Flat || (i >= 2 && is_directed(s) && orient[i - 1] == s);
    }
    if (hit) total = checked::add(total, count_configs_on_orientation(orient));
  }
  return total;
}

std::int64_t count_T_recurrence(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<std::int64_t> t{0, 0, 2, 8, 26};  // t[0] unused
  for (std::size_t k = 5; k <= n; ++k) {
    std::int64_t next = checked::mul(3, t[k - 1]);
    next = checked::add(next, checked::mul(2, t[k - 2]));
    next = checked::add(next, t[k - 3]);
    next = checked::sub(next, t[k - 4]);
    t.push_back(next);
  }
  return t[n];
}

std::int64_t count_T_direct(std::size_t n, const Limits& limits) {
  const auto orientations = enumerate_p2_orientations(n, limits);
  std::vector<std::int64_t> products(orientations.size());
  detail::parallel_for(orientations.size(),
                       [&](std::size_t i) { products[i] = count_configs_on_orientation(orientations[i]); });
  std::int64_t total = 0;
  for (std::int64_t p : products) total = checked::add(total, p);
  return total;
}

std::int64_t count_T_direct_serial(std::size_t n, const Limits& limits) {
  std::int64_t total = 0;
  for (const auto& orient : enumerate_p2_orientations_serial(n, limits)) {
    total = checked::add(total, count_configs_on_orientation(orient));
  }
  return total;
}

std::int64_t count_T_summation(std::size_t n, SummationLimit limit, const Limits& limits) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "summation needs n >= 2");
  std::int64_t total = alternating_count(n);

  // A flat appears before the first agreeing pair: the alternating run on
  // v_1..v_k is severed from a path on n - k vertices with a fixed first edge.
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    const std::int64_t a = alternating_count(k);
    if (a % 2 != 0) throw Error(ErrorCode::InternalInconsistency, "A_" + std::to_string(k) + " is odd");
    total = checked::add(total, checked::mul(a / 2, count_T_recurrence(n - k)));
  }

  // An agreeing pair appears first: contract it and drop the orientations of
  // P_{n-2} that would have had a flat or pair earlier.
  const std::size_t upper = n < 4 ? 0 : limit == SummationLimit::Corrected ? n - 2 : n - 3;
  for (std::size_t k = 3; k <= upper; ++k) {
    total = checked::add(total, checked::sub(count_T_recurrence(n - 2), stage(n - 2, k - 2, limits)));
  }
  return total;
}

std::vector<PathOrientation> sever_at_flats(const PathOrientation& orient) {
  require_legal(orient);
  std::vector<PathOrientation> parts;
  std::vector<EdgeSense> current;
  for (EdgeSense s : orient.senses()) {
    if (s == EdgeSense::Flat) {
      parts.emplace_back(std::move(current));
      current.clear();
    } else {
      current.push_back(s);
    }
  }
  parts.emplace_back(std::move(current));
  return parts;
}

PathOrientation contract_agreeing(const PathOrientation& orient, std::size_t i) {
  const std::size_t m = orient.edge_count();
  if (i < 2 || i > m || !is_directed(orient[i]) || orient[i - 1] != orient[i]) {
    throw Error(ErrorCode::NotAnAgreeingPair,
                "edges " + std::to_string(i - 1) + "," + std::to_string(i) + " of '" + to_string(orient) +
                    "' are not an agreeing pair");
  }
  require_legal(orient);
  std::vector<EdgeSense> out(orient.senses().begin(), orient.senses().begin() + static_cast<std::ptrdiff_t>(i - 2));
  for (std::size_t j = i + 1; j <= m; ++j) out.push_back(flipped(orient[j]));
  return PathOrientation(std::move(out));
}

std::vector<std::int64_t> conjecture_recurrence_check(std::span<const std::int64_t> counts) {
  if (counts.size() < 5) throw Error(ErrorCode::InvalidArgument, "need at least F(G_0)..F(G_4)");
  std::vector<std::int64_t> residuals;
  for (std::size_t k = 4; k < counts.size(); ++k) {
    std::int64_t predicted = checked::mul(3, counts[k - 1]);
    predicted = checked::add(predicted, checked::mul(2, counts[k - 2]));
    predicted = checked::add(predicted, counts[k - 3]);
    predicted = checked::sub(predicted, counts[k - 4]);
    residuals.push_back(checked::sub(counts[k], predicted));
  }
  return residuals;
}

CountLedger build_count_ledger(std::size_t n, const Limits& limits) {
  CountLedger ledger;
  ledger.n = n;
  const auto orientations = enumerate_p2_orientations(n, limits);
  std::int64_t direct = 0;
  for (const auto& orient : orientations) {
    OrientationTally tally{to_string(orient), multipliers(orient), 0};
    tally.configurations = tally.multipliers.product();
    direct = checked::add(direct, tally.configurations);
    ledger.per_orientation.push_back(std::move(tally));
  }
  ledger.orientations_recurrence = count_p2_orientations_recurrence(n);
  ledger.orientations_enumerated = static_cast<std::int64_t>(orientations.size());
  ledger.alternating = alternating_count(n);
  ledger.t_recurrence = count_T_recurrence(n);
  ledger.t_direct = direct;
  if (n >= 2) ledger.t_summation = count_T_summation(n, SummationLimit::Corrected, limits);
  return ledger;
}

}  // namespace pdiff
