#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bigrade/invariants.hpp"

namespace bigrade {

/// H^i_Z of one fiber class of S/I.
struct FiberCohomology {
  std::vector<int> pattern;
  std::size_t member_count = 0;
  bool infinite_family = false;
  /// Vanishes in every degree class with a negative axis coordinate.
  bool finite_length = true;
  /// Sum of piece dimensions within one x-degree; empty when the fiber's
  /// cohomology is not of finite length.
  std::optional<std::int64_t> total_dim;
  /// A full-ring degree with nonzero cohomology and a negative axis
  /// coordinate, when one exists.
  std::optional<FineDegree> witness_degree;
};

struct LCReport {
  int index = 0;
  std::vector<FiberCohomology> per_fiber;
  bool finitely_generated = true;
  /// Vanishes identically.
  bool is_zero = true;
  /// dim_K of the whole module when finite.
  std::optional<std::int64_t> total_dim;
};

/// Degreewise H^i_Z(S/I) through the fiber decomposition. The module is
/// finitely generated iff every fiber's cohomology has finite length.
/// Throws UnitIdeal, PreconditionFailed for i outside [0, |Z|].
LCReport lc_report(const MonomialIdeal& ideal, const AxisIdeal& axis, int index);

struct GeneralizedCm {
  bool verdict = true;
  int cd = 0;
  /// finitely_generated for i = 0 .. cd-1.
  std::vector<bool> finitely_generated;
};

/// H^i_Z(S/I) finitely generated for every i < cd(Z, S/I).
GeneralizedCm generalized_cm(const MonomialIdeal& ideal, const AxisIdeal& axis);

/// Total dimension of H^i_Z(S/I) over the degrees c with complement
/// coordinates in [0, r] and axis coordinates in [-r, r], for each radius r.
std::vector<std::int64_t> growth_scan(const MonomialIdeal& ideal, const AxisIdeal& axis, int index,
                                      const std::vector<int>& radii);

struct CorollaryTriple {
  bool max_depth = false;
  bool seq_cm = false;
  bool cm_wrt_axis = false;
};

/// For generalized Cohen–Macaulay S/I with grade > 0: maximal depth,
/// sequential CM and CM with respect to the axis coincide. Throws
/// PreconditionFailed naming the failed hypothesis.
CorollaryTriple corollary_check(const MonomialIdeal& ideal, const AxisIdeal& axis);

/// Levels j > 0 such that some associated prime has cd(Z, S/p) = j and yet
/// H^j_Z(S/I) is finitely generated. An empty result is the expected
/// outcome; anything else is worth reporting.
std::vector<int> finitely_generated_prime_levels(const MonomialIdeal& ideal, const AxisIdeal& axis);

}  // namespace bigrade
