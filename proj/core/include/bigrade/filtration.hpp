#pragma once

#include <vector>

#include "bigrade/invariants.hpp"

namespace bigrade {

struct FiltrationStep {
  /// J_i, so that D_i = J_i / I.
  MonomialIdeal ideal;
  /// γ_i = cd(Z, D_i).
  int cd = 0;
};

/// The dimension filtration 0 = D_0 ⊊ D_1 ⊊ ... ⊊ D_r = S/I with respect to
/// an axis, represented by ideals I = J_0 ⊊ J_1 ⊊ ... ⊊ J_r = S.
struct FiltrationLadder {
  MonomialIdeal base;
  AxisIdeal axis;
  /// Ass(S/I), sorted.
  std::vector<PrimeSupport> associated_primes;
  /// J_1..J_r with strictly increasing cd.
  std::vector<FiltrationStep> steps;

  /// J_i for 0 <= i <= r.
  const MonomialIdeal& ideal_at(std::size_t i) const { return i == 0 ? base : steps[i - 1].ideal; }
};

/// J_i is the intersection of the primary components whose prime has
/// cd > γ_i. Each step is checked against Ass(D_i) = {p : cd(p) <= γ_i}
/// and Ass(M/D_i) = Ass(M) \ Ass(D_i), both recomputed directly from the
/// modules. Throws UnitIdeal, ZeroIdeal.
FiltrationLadder dimension_filtration(const MonomialIdeal& ideal, const AxisIdeal& axis);

/// Ass(D_i / D_{i-1}) for every step, computed from the subquotients
/// J_i / J_{i-1} and checked to be {p in Ass(M) : cd(p) = γ_i}; their union
/// is checked to be Ass(M).
std::vector<std::vector<PrimeSupport>> ass_quotients(const FiltrationLadder& ladder);

struct SeqCmStep {
  int grade = 0;
  int cd = 0;
  bool is_cm = false;
};

struct SeqCmVerdict {
  bool verdict = false;
  std::vector<SeqCmStep> per_step;
};

/// Every quotient J_i / J_{i-1} of the dimension filtration is
/// Cohen–Macaulay with respect to the axis.
SeqCmVerdict sequentially_cm(const MonomialIdeal& ideal, const AxisIdeal& axis);

struct MgradeConstancy {
  bool holds = false;
  /// γ_1 = cd(Z, D_1).
  int value = 0;
  /// mgrade(Z, D_i) for i = 1..r.
  std::vector<int> per_step;
};

/// mgrade(Z, D_i) = cd(Z, D_1) for every step. A false result means an
/// internal inconsistency, never a property of the input.
MgradeConstancy mgrade_constancy(const MonomialIdeal& ideal, const AxisIdeal& axis);

}  // namespace bigrade
