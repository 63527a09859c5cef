#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bigrade {

/// The ambient ring K[x_1..x_m, y_1..y_n]. Variables are indexed 0..m+n-1
/// with the x-block first. `characteristic` is the field characteristic
/// used for every rank computation (0 or a prime).
struct RingSpec {
  int m = 0;
  int n = 0;
  int characteristic = 0;

  /// Validating constructor; throws BadRing.
  static RingSpec make(int m, int n, int characteristic = 0);

  int num_vars() const noexcept { return m + n; }
  bool is_x(int var) const noexcept { return var < m; }
  std::string var_name(int var) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Throws RingMismatch unless both rings are identical.
void require_same_ring(const RingSpec& a, const RingSpec& b);

/// Exponent vector in the fine N^{m+n} grading.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial one(int num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }
  static Monomial variable(int num_vars, int var, int power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  bool is_one() const noexcept;
  int total_degree() const noexcept;
  /// Bitmask of variables with positive exponent.
  std::uint64_t support() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / gcd(this, other): the generator of (this) : other.
  Monomial colon(const Monomial& other) const;
  /// Squarefree part.
  Monomial radical() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<int> exps_;
};

/// A set of variable indices stored as a bitmask (at most 64 variables).
class VarSet {
public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t mask) : mask_(mask) {}

  static VarSet range(int begin, int end);
  static VarSet of(std::span<const int> vars);

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  int size() const noexcept { return std::popcount(mask_); }
  constexpr bool contains(int var) const noexcept { return (mask_ >> var) & 1u; }
  constexpr bool is_subset_of(VarSet other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  std::vector<int> indices() const;

  friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.mask_ | b.mask_); }
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.mask_ & b.mask_); }
  friend constexpr VarSet operator-(VarSet a, VarSet b) { return VarSet(a.mask_ & ~b.mask_); }
  friend constexpr auto operator<=>(VarSet, VarSet) = default;

private:
  std::uint64_t mask_ = 0;
};

/// A monomial prime ideal, generated by the variables in `vars`. The empty
/// set is the zero prime.
struct PrimeSupport {
  VarSet vars;

  int height() const noexcept { return vars.size(); }
  std::string to_string(const RingSpec& ring) const;

  friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;
};

/// An ideal generated by a nonempty set of variables: P, Q, the maximal
/// ideal, or any other axis subset.
class AxisIdeal {
public:
  /// Throws PreconditionFailed if `vars` is empty or leaves the ring.
  AxisIdeal(const RingSpec& ring, VarSet vars);

  static AxisIdeal x_block(const RingSpec& ring);
  static AxisIdeal y_block(const RingSpec& ring);
  static AxisIdeal all(const RingSpec& ring);

  VarSet vars() const noexcept { return vars_; }
  /// The variables outside the axis ideal.
  VarSet complement() const noexcept { return complement_; }
  int size() const noexcept { return vars_.size(); }
  std::string label(const RingSpec& ring) const;

  friend bool operator==(const AxisIdeal&, const AxisIdeal&) = default;

private:
  VarSet vars_;
  VarSet complement_;
};

}  // namespace bigrade
