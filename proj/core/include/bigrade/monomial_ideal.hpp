#pragma once

#include <span>
#include <string>
#include <vector>

#include "bigrade/ring.hpp"

namespace bigrade {

/// A monomial ideal in minimal-generator normal form: no generator divides
/// another and generators are sorted in decreasing lex order
/// (x1 > ... > xm > y1 > ... > yn), so two ideals are equal exactly when
/// their generator lists are.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
public:
  /// Minimalizes `raw`. Throws DimensionMismatch on a wrong-length monomial.
  MonomialIdeal(const RingSpec& ring, std::span<const Monomial> raw);
  MonomialIdeal(const RingSpec& ring, std::initializer_list<Monomial> raw)
      : MonomialIdeal(ring, std::span<const Monomial>(raw.begin(), raw.size())) {}

  static MonomialIdeal zero(const RingSpec& ring) { return MonomialIdeal(ring, std::span<const Monomial>{}); }
  static MonomialIdeal unit(const RingSpec& ring);
  /// The ideal generated by the variables in `vars`.
  static MonomialIdeal from_vars(const RingSpec& ring, VarSet vars);

  const RingSpec& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const noexcept;
  /// Generated by pure powers of variables.
  bool is_irreducible() const noexcept;

  bool contains(const Monomial& u) const;
  bool contains(std::span<const int> exps) const;
  bool is_subset_of(const MonomialIdeal& other) const;

  /// Componentwise maximum of generator exponents.
  std::vector<int> lcm_box() const;
  /// Variables that occur in some generator.
  VarSet support() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

private:
  RingSpec ring_;
  std::vector<Monomial> gens_;
};

/// Deterministic ideal ordering: by generator lists.
bool operator<(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal minimal_generators(const RingSpec& ring, std::span<const Monomial> raw);
bool membership(const Monomial& u, const MonomialIdeal& ideal);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : u) = {v : v*u in I}.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
/// (I : J) = intersection of (I : g) over generators g of J.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Keeps the generators whose support lies inside `vars`: I ∩ K[vars].
MonomialIdeal restrict_to(const MonomialIdeal& ideal, VarSet vars);

/// Relabels an ideal onto a ring whose variables are `vars` (in index
/// order) of the original ring. Generators must be supported in `vars`.
MonomialIdeal project(const MonomialIdeal& ideal, VarSet vars, const RingSpec& target);
/// Inverse of `project`: places `ideal` of the small ring into `ring`.
MonomialIdeal embed(const MonomialIdeal& ideal, VarSet vars, const RingSpec& ring);

/// "x1^2*y3" style rendering; "1" for the unit monomial.
std::string render_monomial(const RingSpec& ring, const Monomial& u);
std::string render_generators(const MonomialIdeal& ideal);

}  // namespace bigrade
