#pragma once

#include <optional>
#include <vector>

#include "bigrade/decomposition.hpp"
#include "bigrade/fibers.hpp"

namespace bigrade {

/// grade(Z, N): the smallest depth of a nonzero fiber. Throws ZeroModule.
int grade(const Subquotient& module, const AxisIdeal& axis);

/// cd(Z, N): the largest dimension of a nonzero fiber. For cyclic modules
/// also checks cd(Z, S/I) = dim S/(I + complement variables).
int cd(const Subquotient& module, const AxisIdeal& axis);

/// cd(Z, S/p) = number of axis variables outside p.
int cd_prime(const PrimeSupport& prime, const AxisIdeal& axis);

/// min of cd_prime over a nonempty prime list.
int mgrade_of_primes(const std::vector<PrimeSupport>& primes, const AxisIdeal& axis);

/// mgrade(Z, S/I) over Ass(S/I); cross-checked against |Z| minus the
/// largest height of p ∩ Z. Throws UnitIdeal.
int mgrade(const MonomialIdeal& ideal, const AxisIdeal& axis);

struct InvariantReport {
  int grade = 0;
  int cd = 0;
  int mgrade = 0;
  int dim = 0;
  /// Ordinary depth of S/I (axis = every variable).
  int depth = 0;
  bool maximal_depth = false;
  std::optional<PrimeSupport> witness_prime;
  bool cm_wrt_axis = false;
  bool cm_ordinary = false;
  std::vector<PrimeSupport> associated_primes;
};

/// Every invariant of S/I with respect to `axis`. Throws UnitIdeal.
InvariantReport analyze(const MonomialIdeal& ideal, const AxisIdeal& axis);

struct DirectSumVerdict {
  bool verdict = false;
  /// A summand of minimal grade; one with maximal depth if there is one.
  std::size_t achiever = 0;
  int grade = 0;
  int mgrade = 0;
};

/// Maximal depth of ⊕ S/I_k: some summand of minimal grade has maximal
/// depth. Also checked against min grade = min mgrade over the summands.
/// Throws EmptyList, RingMismatch, UnitIdeal.
DirectSumVerdict direct_sum_verdict(const std::vector<MonomialIdeal>& ideals, const AxisIdeal& axis);

struct TensorVerdict {
  bool verdict = false;
  int grade = 0;
  int mgrade = 0;
  /// depth and mdepth of K[y]/Iy as an ordinary graded module.
  int depth_y = 0;
  int mdepth_y = 0;
};

/// S/(Ix + Iy) for Ix in K[x], Iy in K[y], with respect to Q. Checks the
/// answer against the ordinary maximal-depth property of K[y]/Iy and the
/// product formula for associated primes. Throws WrongBlock, UnitIdeal.
TensorVerdict tensor_verdict(const MonomialIdeal& ideal_x, const MonomialIdeal& ideal_y);

}  // namespace bigrade
