#include "bigrade/filtration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bigrade/error.hpp"

namespace bigrade {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/I is the zero module");
  if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "filtration of S itself is trivial");
}

std::vector<PrimeSupport> primes_with_cd(const std::vector<PrimeSupport>& primes, const AxisIdeal& axis,
                                         auto predicate) {
  std::vector<PrimeSupport> out;
  for (const auto& p : primes)
    if (predicate(cd_prime(p, axis))) out.push_back(p);
  return out;
}

std::vector<PrimeSupport> ass_of_quotient(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return {};
  return associated_primes(Subquotient::cyclic(ideal));
}

}  // namespace

FiltrationLadder dimension_filtration(const MonomialIdeal& ideal, const AxisIdeal& axis) {
  require_proper_nonzero(ideal);
  const RingSpec& ring = ideal.ring();
  const auto components = primary_decomposition(ideal);

  std::set<int> levels;
  for (const auto& c : components) levels.insert(cd_prime(c.radical, axis));

  FiltrationLadder ladder{ideal, axis, associated_primes(ideal), {}};
  for (int gamma : levels) {
    MonomialIdeal j = MonomialIdeal::unit(ring);
    for (const auto& c : components)
      if (cd_prime(c.radical, axis) > gamma) j = intersect(j, c.component);
    ladder.steps.push_back({std::move(j), gamma});
  }

  const auto& ass = ladder.associated_primes;
  for (std::size_t i = 1; i <= ladder.steps.size(); ++i) {
    const MonomialIdeal& prev = ladder.ideal_at(i - 1);
    const MonomialIdeal& cur = ladder.ideal_at(i);
    const int gamma = ladder.steps[i - 1].cd;
    ensure(prev.is_subset_of(cur) && !(prev == cur), "filtration is not strictly increasing");

    const Subquotient d_i(cur, ideal);
    const auto ass_d = associated_primes(d_i);
    ensure(ass_d == primes_with_cd(ass, axis, [&](int c) { return c <= gamma; }),
           "Ass(D_i) differs from {p in Ass(M) : cd(p) <= cd(D_i)}");
    ensure(ass_of_quotient(cur) == primes_with_cd(ass, axis, [&](int c) { return c > gamma; }),
           "Ass(M/D_i) differs from Ass(M) \\ Ass(D_i)");
    ensure(cd(d_i, axis) == gamma, "cd(D_i) differs from its level");
  }
  ensure(ladder.steps.back().ideal.is_unit(), "filtration does not reach S/I");
  return ladder;
}

std::vector<std::vector<PrimeSupport>> ass_quotients(const FiltrationLadder& ladder) {
  std::vector<std::vector<PrimeSupport>> out;
  std::set<PrimeSupport> seen;
  for (std::size_t i = 1; i <= ladder.steps.size(); ++i) {
    const int gamma = ladder.steps[i - 1].cd;
    auto step = associated_primes(Subquotient(ladder.ideal_at(i), ladder.ideal_at(i - 1)));
    ensure(step == primes_with_cd(ladder.associated_primes, ladder.axis, [&](int c) { return c == gamma; }),
           "Ass(D_i/D_{i-1}) differs from the primes at level cd(D_i)");
    seen.insert(step.begin(), step.end());
    out.push_back(std::move(step));
  }
  ensure(std::vector<PrimeSupport>(seen.begin(), seen.end()) == ladder.associated_primes,
         "the step primes do not cover Ass(M)");
  return out;
}

SeqCmVerdict sequentially_cm(const MonomialIdeal& ideal, const AxisIdeal& axis) {
  const FiltrationLadder ladder = dimension_filtration(ideal, axis);
  SeqCmVerdict out;
  out.verdict = true;
  for (std::size_t i = 1; i <= ladder.steps.size(); ++i) {
    const Subquotient step(ladder.ideal_at(i), ladder.ideal_at(i - 1));
    SeqCmStep s;
    s.grade = grade(step, axis);
    s.cd = cd(step, axis);
    s.is_cm = s.grade == s.cd;
    ensure(s.cd == ladder.steps[i - 1].cd, "cd of a filtration quotient differs from its level");
    out.verdict = out.verdict && s.is_cm;
    out.per_step.push_back(s);
  }
  return out;
}

MgradeConstancy mgrade_constancy(const MonomialIdeal& ideal, const AxisIdeal& axis) {
  const FiltrationLadder ladder = dimension_filtration(ideal, axis);
  MgradeConstancy out;
  out.value = ladder.steps.front().cd;
  out.holds = true;
  for (std::size_t i = 1; i <= ladder.steps.size(); ++i) {
    const int value = mgrade_of_primes(associated_primes(Subquotient(ladder.ideal_at(i), ideal)), axis);
    out.per_step.push_back(value);
    out.holds = out.holds && value == out.value;
  }
  return out;
}

}  // namespace bigrade
