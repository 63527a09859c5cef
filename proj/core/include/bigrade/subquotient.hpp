#pragma once

#include <span>
#include <vector>

#include "bigrade/monomial_ideal.hpp"

namespace bigrade {

/// The module J/J' for monomial ideals J' ⊆ J. The cyclic module S/I is the
/// pair (S, I).
class Subquotient {
public:
  /// Throws RingMismatch, or PreconditionFailed unless bottom ⊆ top.
  Subquotient(MonomialIdeal top, MonomialIdeal bottom);

  static Subquotient cyclic(const MonomialIdeal& ideal) {
    return Subquotient(MonomialIdeal::unit(ideal.ring()), ideal);
  }

  const RingSpec& ring() const noexcept { return top_.ring(); }
  const MonomialIdeal& top() const noexcept { return top_; }
  const MonomialIdeal& bottom() const noexcept { return bottom_; }

  bool is_cyclic() const noexcept { return top_.is_unit(); }
  bool is_zero() const { return top_.is_subset_of(bottom_); }

  /// True iff the monomial with exponent vector `exps` (all >= 0) lies in
  /// J but not in J'.
  bool present(std::span<const int> exps) const {
    return top_.contains(exps) && !bottom_.contains(exps);
  }

  /// Componentwise maximum exponent over the generators of J and J'.
  std::vector<int> lcm_box() const;

  /// ann(J/J') = (J' : J).
  MonomialIdeal annihilator() const { return colon(bottom_, top_); }

  friend bool operator==(const Subquotient&, const Subquotient&) = default;

private:
  MonomialIdeal top_;
  MonomialIdeal bottom_;
};

/// Ass(J/J') computed directly: the prime colon ideals (J' : u) over
/// monomials u in J \ J' inside the lcm box. Sorted. Throws ZeroModule.
std::vector<PrimeSupport> associated_primes(const Subquotient& module);

}  // namespace bigrade
