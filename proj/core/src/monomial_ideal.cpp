#include "bigrade/monomial_ideal.hpp"

#include <algorithm>
#include <functional>

#include "bigrade/error.hpp"

namespace bigrade {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  // Sorting by total degree first guarantees a divisor is seen before any
  // of its multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const int da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  // Lex order with x1 > x2 > ... > yn: largest exponent vector first.
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(const RingSpec& ring, std::span<const Monomial> raw) : ring_(ring) {
  std::vector<Monomial> gens;
  gens.reserve(raw.size());
  for (const auto& u : raw) {
    if (static_cast<int>(u.size()) != ring.num_vars())
      throw Error(ErrorKind::DimensionMismatch, "monomial has " + std::to_string(u.size()) +
                                                    " exponents, ring has " +
                                                    std::to_string(ring.num_vars()) + " variables");
    for (int e : u.exponents())
      if (e < 0) throw Error(ErrorKind::DimensionMismatch, "negative exponent");
    gens.push_back(u);
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(const RingSpec& ring) {
  const Monomial one = Monomial::one(ring.num_vars());
  return MonomialIdeal(ring, std::span<const Monomial>(&one, 1));
}

MonomialIdeal MonomialIdeal::from_vars(const RingSpec& ring, VarSet vars) {
  std::vector<Monomial> gens;
  for (int v : vars.indices()) gens.push_back(Monomial::variable(ring.num_vars(), v));
  return MonomialIdeal(ring, gens);
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g == g.radical(); });
}

bool MonomialIdeal::is_irreducible() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return std::popcount(g.support()) <= 1; });
}

bool MonomialIdeal::contains(std::span<const int> exps) const {
  for (const auto& g : gens_) {
    bool divides = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (g[i] > exps[i]) {
        divides = false;
        break;
      }
    }
    if (divides) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const Monomial& u) const { return contains(u.exponents()); }

bool MonomialIdeal::is_subset_of(const MonomialIdeal& other) const {
  return std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return other.contains(g); });
}

std::vector<int> MonomialIdeal::lcm_box() const {
  std::vector<int> box(ring_.num_vars(), 0);
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(box[i], g[i]);
  return box;
}

VarSet MonomialIdeal::support() const {
  std::uint64_t mask = 0;
  for (const auto& g : gens_) mask |= g.support();
  return VarSet(mask);
}

bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.gens().size() != b.gens().size()) return a.gens().size() < b.gens().size();
  return a.gens() < b.gens();
}

MonomialIdeal minimal_generators(const RingSpec& ring, std::span<const Monomial> raw) {
  return MonomialIdeal(ring, raw);
}

bool membership(const Monomial& u, const MonomialIdeal& ideal) {
  if (static_cast<int>(u.size()) != ideal.ring().num_vars())
    throw Error(ErrorKind::DimensionMismatch, "monomial length does not match ring");
  return ideal.contains(u);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), gens);
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens;
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) gens.push_back(u * v);
  return MonomialIdeal(a.ring(), gens);
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) gens.push_back(u.lcm(v));
  return MonomialIdeal(a.ring(), gens);
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  if (static_cast<int>(u.size()) != ideal.ring().num_vars())
    throw Error(ErrorKind::RingMismatch, "monomial length does not match ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(g.colon(u));
  return MonomialIdeal(ideal.ring(), gens);
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal.ring(), by.ring());
  MonomialIdeal result = MonomialIdeal::unit(ideal.ring());
  for (const auto& g : by.gens()) result = intersect(result, colon(ideal, g));
  return result;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.radical());
  return MonomialIdeal(ideal.ring(), gens);
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, VarSet vars) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens())
    if (VarSet(g.support()).is_subset_of(vars)) gens.push_back(g);
  return MonomialIdeal(ideal.ring(), gens);
}

MonomialIdeal project(const MonomialIdeal& ideal, VarSet vars, const RingSpec& target) {
  const auto idx = vars.indices();
  if (static_cast<int>(idx.size()) != target.num_vars())
    throw Error(ErrorKind::DimensionMismatch, "projection target has the wrong number of variables");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    if (!VarSet(g.support()).is_subset_of(vars))
      throw Error(ErrorKind::WrongBlock, "generator uses a variable outside the projection");
    std::vector<int> e(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) e[k] = g[idx[k]];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(target, gens);
}

MonomialIdeal embed(const MonomialIdeal& ideal, VarSet vars, const RingSpec& ring) {
  const auto idx = vars.indices();
  if (static_cast<int>(idx.size()) != ideal.ring().num_vars())
    throw Error(ErrorKind::DimensionMismatch, "embedding source has the wrong number of variables");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<int> e(ring.num_vars(), 0);
    for (std::size_t k = 0; k < idx.size(); ++k) e[idx[k]] = g[k];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ring, gens);
}

std::string render_monomial(const RingSpec& ring, const Monomial& u) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(static_cast<int>(i));
    if (u[i] > 1) s += "^" + std::to_string(u[i]);
  }
  return s.empty() ? "1" : s;
}

std::string render_generators(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    if (i) s += ", ";
    s += render_monomial(ideal.ring(), ideal.gens()[i]);
  }
  return s + ")";
}

}  // namespace bigrade
