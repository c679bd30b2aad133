#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdiff/graph.hpp"
#include "pdiff/limits.hpp"

namespace pdiff {

/// Number of admissible stack sizes per vertex, v_1 first.
struct MultiplierVector {
  std::vector<int> values;

  std::int64_t product() const;
  friend bool operator==(const MultiplierVector&, const MultiplierVector&) = default;
};

/// Multiplier of v_k (1-based) given the senses around it.
///
/// Only the local neighbourhood is validated: a sense triple outside the
/// multiplier table throws illegal-local-pattern.
int vertex_multiplier(const PathOrientation& orient, std::size_t k);

/// Multipliers of every vertex of a legal orientation.
MultiplierVector multipliers(const PathOrientation& orient);

/// Number of canonical period-2 configurations inducing `orient`.
std::int64_t count_configs_on_orientation(const PathOrientation& orient);

/// A_n: configurations over both alternating orientations of P_n.
std::int64_t alternating_count(std::size_t n);

/// Configurations whose orientation has a Flat among e_1..e_{k+1}, or an
/// agreeing pair (e_{i-1}, e_i) with i <= k+1. For k >= n-1 the window
/// is taken to cover everything, so the result is T_n.
std::int64_t stage(std::size_t n, std::size_t k, const Limits& limits = {});

/// T_n from T_1..T_4 = 0, 2, 8, 26 and T_{n+4} = 3T_{n+3} + 2T_{n+2} + T_{n+1} - T_n.
std::int64_t count_T_recurrence(std::size_t n);

/// Sum of per-orientation products over every legal orientation (OpenMP).
std::int64_t count_T_direct(std::size_t n, const Limits& limits = {});
std::int64_t count_T_direct_serial(std::size_t n, const Limits& limits = {});

/// Upper limit of the agreeing-first sum in the three-case decomposition.
enum class SummationLimit {
  Corrected,  // n - 2; agrees with the recurrence
  OffByOne,   // n - 3; misses the k = n - 2 term
};

/// A_n + sum_{k=2}^{n-2} (A_k / 2) T_{n-k} + sum_{k=3}^{K} (T_{n-2} - stage(n-2, k-2)).
std::int64_t count_T_summation(std::size_t n, SummationLimit limit = SummationLimit::Corrected,
                               const Limits& limits = {});

/// Maximal Flat-free segments of a legal orientation, right to left.
std::vector<PathOrientation> sever_at_flats(const PathOrientation& orient);

/// Removes the agreeing pair (e_{i-1}, e_i) and flips every directed edge
/// beyond it. The result lives on n - 2 vertices.
PathOrientation contract_agreeing(const PathOrientation& orient, std::size_t i);

/// Roots of x^4 - 3x^3 - 2x^2 - x + 1 and the fitted leading term of T_n.
struct AsymptoticModel {
  /// Dominant real root, second real root, then the complex pair (negative
  /// imaginary part first).
  std::array<std::complex<double>, 4> roots{};
  double dominant_root = 0.0;
  double second_real_root = 0.0;
  /// Least-squares c_1 in T_n ~ c_1 * dominant_root^n over n in [fit_from, fit_to].
  double dominant_coefficient = 0.0;
  std::size_t fit_from = 20;
  std::size_t fit_to = 30;
  double max_residual = 0.0;
};

double characteristic_polynomial_residual(std::complex<double> x);
AsymptoticModel characteristic_roots();

/// Residual F_k - (3F_{k-1} + 2F_{k-2} + F_{k-3} - F_{k-4}) for k = 4..m;
/// entry j belongs to k = j + 4.
std::vector<std::int64_t> conjecture_recurrence_check(std::span<const std::int64_t> counts);

struct OrientationTally {
  std::string orientation;
  MultiplierVector multipliers;
  std::int64_t configurations = 0;
};

/// Every count the library knows for P_n. Fields a method cannot supply stay empty.
struct CountLedger {
  std::size_t n = 0;
  std::vector<OrientationTally> per_orientation;
  std::optional<std::int64_t> orientations_recurrence;   // R_n
  std::optional<std::int64_t> orientations_enumerated;
  std::optional<std::int64_t> alternating;               // A_n
  std::optional<std::int64_t> t_recurrence;
  std::optional<std::int64_t> t_summation;
  std::optional<std::int64_t> t_direct;
};

/// Fills every route; requires n within the enumeration ceiling.
CountLedger build_count_ledger(std::size_t n, const Limits& limits = {});

}  // namespace pdiff
