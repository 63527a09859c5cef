#pragma once

#include <vector>

#include "bigrade/homology.hpp"

namespace bigrade {

/// One class of the decomposition of N = J/J' over the x-exponents of the
/// variables outside an axis Z. For an exponent pattern a on the
/// complement, the slice of N in that pattern is the K[Z]-module
///   ((J : x^a) ∩ K[Z]) / ((J' : x^a) ∩ K[Z]),
/// which depends only on a capped at the lcm box. Patterns with equal
/// slices are merged into one class.
struct FiberClass {
  /// Smallest member pattern, over the complement variables in index order.
  std::vector<int> pattern;
  /// Every capped pattern in the class, sorted.
  std::vector<std::vector<int>> members;
  /// The slice, as a subquotient of the polynomial ring on Z alone.
  Subquotient fiber;
  /// Some member reaches its cap in some coordinate, so the class stands
  /// for infinitely many x-degrees.
  bool infinite_family = false;
};

struct FiberDecomposition {
  /// Ring of the axis variables (x-variables of Z first, then y).
  RingSpec fiber_ring;
  /// Variables of the original ring that make up Z, in index order.
  VarSet axis_vars;
  /// Per complement variable: the largest exponent in the lcm box.
  std::vector<int> caps;
  std::vector<FiberClass> classes;

  /// Z as an axis ideal of the fiber ring: all of its variables.
  AxisIdeal fiber_axis() const { return AxisIdeal::all(fiber_ring); }
};

/// Throws ZeroModule.
FiberDecomposition fibers(const Subquotient& module, const AxisIdeal& axis);

/// Restricts a full-ring degree to the axis coordinates.
std::vector<int> axis_part(const FiberDecomposition& decomposition, std::span<const int> degree);

/// The class index for a full-ring degree, or -1 if its complement part
/// has a negative entry.
int class_of(const FiberDecomposition& decomposition, const AxisIdeal& axis, std::span<const int> degree);

}  // namespace bigrade
