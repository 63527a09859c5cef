#include "bigrade/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bigrade/error.hpp"

namespace bigrade {

namespace {

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/I is the zero module");
}

const Monomial* first_splittable(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.gens())
    if (std::popcount(g.support()) >= 2) return &g;
  return nullptr;
}

bool component_less(const PrimaryComponent& a, const PrimaryComponent& b) {
  if (a.radical.vars != b.radical.vars) return a.radical < b.radical;
  return a.component < b.component;
}

}  // namespace

std::vector<PrimaryComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper(ideal);
  if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "the zero ideal has no irreducible decomposition here");

  const RingSpec& ring = ideal.ring();
  std::vector<MonomialIdeal> pending{ideal};
  std::set<std::vector<Monomial>> seen{ideal.gens()};
  std::vector<MonomialIdeal> pieces;

  while (!pending.empty()) {
    MonomialIdeal current = std::move(pending.back());
    pending.pop_back();
    const Monomial* u = first_splittable(current);
    if (u == nullptr) {
      pieces.push_back(std::move(current));
      continue;
    }
    const int v = std::countr_zero(u->support());
    const Monomial head = Monomial::variable(ring.num_vars(), v, (*u)[v]);
    const Monomial tail = u->colon(head);
    for (const Monomial& part : {head, tail}) {
      MonomialIdeal next = sum(current, MonomialIdeal(ring, {part}));
      if (seen.insert(next.gens()).second) pending.push_back(std::move(next));
    }
  }

  // Irreducible monomial ideals are meet-irreducible, so the irredundant
  // components are exactly the inclusion-minimal pieces.
  std::vector<PrimaryComponent> out;
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < pieces.size() && !redundant; ++b)
      if (a != b && pieces[b].is_subset_of(pieces[a]) && !(pieces[a] == pieces[b])) redundant = true;
    if (!redundant) out.push_back({pieces[a], PrimeSupport{pieces[a].support()}});
  }
  std::sort(out.begin(), out.end(), component_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.component == b.component; }),
            out.end());
  return out;
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal) {
  require_proper(ideal);
  if (ideal.is_zero()) return {PrimaryComponent{ideal, PrimeSupport{}}};
  std::map<VarSet, MonomialIdeal> grouped;
  for (auto& c : irreducible_decomposition(ideal)) {
    auto it = grouped.find(c.radical.vars);
    if (it == grouped.end())
      grouped.emplace(c.radical.vars, c.component);
    else
      it->second = intersect(it->second, c.component);
  }
  std::vector<PrimaryComponent> out;
  for (auto& [vars, q] : grouped) out.push_back({q, PrimeSupport{vars}});
  std::sort(out.begin(), out.end(), component_less);
  return out;
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal) {
  std::vector<PrimeSupport> out;
  for (const auto& c : primary_decomposition(ideal)) out.push_back(c.radical);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PrimeSupport> minimal_elements(std::vector<PrimeSupport> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<PrimeSupport> out;
  for (const auto& p : primes) {
    bool minimal = std::none_of(primes.begin(), primes.end(), [&](const PrimeSupport& q) {
      return q.vars != p.vars && q.vars.is_subset_of(p.vars);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal) {
  require_proper(ideal);
  if (ideal.is_zero()) return {PrimeSupport{}};
  // The radical is squarefree, so its decomposition is already prime.
  return minimal_elements(associated_primes(radical(ideal)));
}

int dim_quotient(const MonomialIdeal& ideal) {
  int min_height = ideal.ring().num_vars();
  for (const auto& p : minimal_primes(ideal)) min_height = std::min(min_height, p.height());
  return ideal.ring().num_vars() - min_height;
}

}  // namespace bigrade
