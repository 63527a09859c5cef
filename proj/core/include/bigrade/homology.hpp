#pragma once

#include <span>
#include <vector>

#include "bigrade/subquotient.hpp"

namespace bigrade {

/// A degree in the fine Z^{m+n} grading.
using FineDegree = std::vector<int>;

/// 1 iff x^c lies in J \ J'. Degrees with a negative coordinate give 0.
int fine_piece(const Subquotient& module, std::span<const int> degree);

/// dim_K H_j(z_Z; N)_b for the Koszul complex on the variables of `axis`.
int koszul_homology_dim(const Subquotient& module, const AxisIdeal& axis, int j, std::span<const int> degree);

/// All Koszul homology dimensions H_0..H_|Z| in one fine degree.
std::vector<int> koszul_homology(const Subquotient& module, const AxisIdeal& axis, std::span<const int> degree);

struct BettiEntry {
  FineDegree degree;
  int index;
  int value;
};

/// Nonzero multigraded Betti numbers of N over K[Z], sorted by
/// (index, degree), with the scan box that certified them.
struct BettiTable {
  std::vector<BettiEntry> entries;
  int projdim = 0;
  std::vector<int> certified_box;
};

/// Scans every degree of the box [0, λ+1] and certifies that the outer
/// shell carries no homology, enlarging the box if it does.
///
/// Requires N to be finitely generated over K[Z]: every variable outside Z
/// must act nilpotently. Throws ZeroModule or PreconditionFailed.
BettiTable betti_and_projdim(const Subquotient& module, const AxisIdeal& axis);

/// Auslander–Buchsbaum: |Z| - projdim.
int depth_module(const Subquotient& module, const AxisIdeal& axis);

/// dim S/(J' : J). Throws ZeroModule.
int dim_module(const Subquotient& module);

/// dim_K H^i_Z(N)_c from the Čech complex on the variables of Z.
int cech_piece_dim(const Subquotient& module, const AxisIdeal& axis, int i, std::span<const int> degree);

/// All Čech cohomology dimensions H^0..H^|Z| in one fine degree.
std::vector<int> cech_cohomology(const Subquotient& module, const AxisIdeal& axis, std::span<const int> degree);

/// Representative degrees for H^*_Z(N): coordinates on Z range over
/// {-1} ∪ [0, λ_z], coordinates off Z over [0, λ_v]. Every fine degree has
/// the same Čech cohomology as exactly one representative.
std::vector<FineDegree> cech_representatives(const Subquotient& module, const AxisIdeal& axis);

/// The representative of an arbitrary fine degree (negative Z-coordinates
/// become -1, everything is capped at λ). Degrees with a negative
/// coordinate off Z have zero cohomology and map to an empty vector.
FineDegree cech_class_of(const Subquotient& module, const AxisIdeal& axis, std::span<const int> degree);

}  // namespace bigrade
