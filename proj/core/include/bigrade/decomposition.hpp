#pragma once

#include <vector>

#include "bigrade/monomial_ideal.hpp"

namespace bigrade {

/// One term of a primary (or irreducible) decomposition together with its
/// radical.
struct PrimaryComponent {
  MonomialIdeal component;
  PrimeSupport radical;
};

/// Irredundant decomposition of I into ideals generated by pure powers of
/// variables, sorted by (radical, component). Throws UnitIdeal / ZeroIdeal.
///
/// Splits the lexicographically first generator with two or more variables
/// at its first variable, I = (I + (u1)) ∩ (I + (u2)), until every piece is
/// irreducible, then drops components that contain another one.
std::vector<PrimaryComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Irreducible components grouped by radical and intersected. The zero ideal
/// yields the single component (0) with radical (0). Throws UnitIdeal.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal);

/// Sorted, duplicate-free. Ass(S/0) = {(0)}. Throws UnitIdeal.
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal);

/// Inclusion-minimal associated primes. Throws UnitIdeal.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal);

/// Krull dimension of S/I. Throws UnitIdeal.
int dim_quotient(const MonomialIdeal& ideal);

/// Keeps the inclusion-minimal primes of a list.
std::vector<PrimeSupport> minimal_elements(std::vector<PrimeSupport> primes);

}  // namespace bigrade
