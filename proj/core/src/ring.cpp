#include "bigrade/ring.hpp"

#include <algorithm>

#include "bigrade/error.hpp"

namespace bigrade {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::BadRing: return "BadRing";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::WrongBlock: return "WrongBlock";
    case ErrorKind::BadProfile: return "BadProfile";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

RingSpec RingSpec::make(int m, int n, int characteristic) {
  if (m < 0 || n < 0 || m + n < 1)
    throw Error(ErrorKind::BadRing, "need m, n >= 0 and m + n >= 1");
  if (m + n > 64) throw Error(ErrorKind::BadRing, "at most 64 variables are supported");
  if (characteristic != 0 && !is_prime(characteristic))
    throw Error(ErrorKind::BadRing, "characteristic must be 0 or a prime");
  return RingSpec{m, n, characteristic};
}

std::string RingSpec::var_name(int var) const {
  return is_x(var) ? "x" + std::to_string(var + 1) : "y" + std::to_string(var - m + 1);
}

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
}

Monomial Monomial::variable(int num_vars, int var, int power) {
  std::vector<int> e(num_vars, 0);
  e.at(var) = power;
  return Monomial(std::move(e));
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::total_degree() const noexcept {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

std::uint64_t Monomial::support() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) mask |= std::uint64_t{1} << i;
  return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(0, exps_[i] - other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::radical() const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

VarSet VarSet::range(int begin, int end) {
  std::uint64_t mask = 0;
  for (int i = begin; i < end; ++i) mask |= std::uint64_t{1} << i;
  return VarSet(mask);
}

VarSet VarSet::of(std::span<const int> vars) {
  std::uint64_t mask = 0;
  for (int v : vars) mask |= std::uint64_t{1} << v;
  return VarSet(mask);
}

std::vector<int> VarSet::indices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string PrimeSupport::to_string(const RingSpec& ring) const {
  if (vars.empty()) return "(0)";
  std::string s = "(";
  bool first = true;
  for (int v : vars.indices()) {
    if (!first) s += ",";
    s += ring.var_name(v);
    first = false;
  }
  return s + ")";
}

AxisIdeal::AxisIdeal(const RingSpec& ring, VarSet vars)
    : vars_(vars), complement_(VarSet::range(0, ring.num_vars()) - vars) {
  if (vars.empty()) throw Error(ErrorKind::PreconditionFailed, "axis ideal needs at least one variable");
  if (!vars.is_subset_of(VarSet::range(0, ring.num_vars())))
    throw Error(ErrorKind::DimensionMismatch, "axis variable outside the ring");
}

AxisIdeal AxisIdeal::x_block(const RingSpec& ring) { return AxisIdeal(ring, VarSet::range(0, ring.m)); }

AxisIdeal AxisIdeal::y_block(const RingSpec& ring) {
  return AxisIdeal(ring, VarSet::range(ring.m, ring.num_vars()));
}

AxisIdeal AxisIdeal::all(const RingSpec& ring) { return AxisIdeal(ring, VarSet::range(0, ring.num_vars())); }

std::string AxisIdeal::label(const RingSpec& ring) const {
  if (vars_ == VarSet::range(0, ring.num_vars())) return "all";
  if (vars_ == VarSet::range(0, ring.m)) return "P";
  if (vars_ == VarSet::range(ring.m, ring.num_vars())) return "Q";
  return PrimeSupport{vars_}.to_string(ring);
}

}  // namespace bigrade
