#include "bigrade/invariants.hpp"

#include <algorithm>
#include <limits>

#include "bigrade/error.hpp"

namespace bigrade {

int grade(const Subquotient& module, const AxisIdeal& axis) {
  const auto decomposition = fibers(module, axis);
  const AxisIdeal fiber_axis = decomposition.fiber_axis();
  int best = std::numeric_limits<int>::max();
  for (const auto& cls : decomposition.classes) {
    if (cls.fiber.is_zero()) continue;
    best = std::min(best, depth_module(cls.fiber, fiber_axis));
  }
  ensure(best != std::numeric_limits<int>::max(), "nonzero module with only zero fibers");
  return best;
}

int cd(const Subquotient& module, const AxisIdeal& axis) {
  const auto decomposition = fibers(module, axis);
  int best = -1;
  for (const auto& cls : decomposition.classes) {
    if (cls.fiber.is_zero()) continue;
    best = std::max(best, dim_module(cls.fiber));
  }
  ensure(best >= 0, "nonzero module with only zero fibers");
  if (module.is_cyclic()) {
    const MonomialIdeal killed = sum(module.bottom(), MonomialIdeal::from_vars(module.ring(), axis.complement()));
    ensure(best == dim_quotient(killed), "cd differs from dim S/(I + complement)");
  }
  return best;
}

int cd_prime(const PrimeSupport& prime, const AxisIdeal& axis) { return (axis.vars() - prime.vars).size(); }

int mgrade_of_primes(const std::vector<PrimeSupport>& primes, const AxisIdeal& axis) {
  if (primes.empty()) throw Error(ErrorKind::EmptyList, "mgrade of an empty prime set");
  int best = std::numeric_limits<int>::max();
  for (const auto& p : primes) best = std::min(best, cd_prime(p, axis));
  return best;
}

int mgrade(const MonomialIdeal& ideal, const AxisIdeal& axis) {
  const auto primes = associated_primes(ideal);
  const int value = mgrade_of_primes(primes, axis);
  int max_axis_height = 0;
  for (const auto& p : primes) max_axis_height = std::max(max_axis_height, (p.vars & axis.vars()).size());
  ensure(value == axis.size() - max_axis_height, "mgrade differs from |Z| - max axis height");
  return value;
}

InvariantReport analyze(const MonomialIdeal& ideal, const AxisIdeal& axis) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/I is the zero module");
  const Subquotient module = Subquotient::cyclic(ideal);

  InvariantReport r;
  r.associated_primes = associated_primes(ideal);
  r.grade = grade(module, axis);
  r.cd = cd(module, axis);
  r.mgrade = mgrade(ideal, axis);
  r.dim = dim_quotient(ideal);
  r.depth = depth_module(module, AxisIdeal::all(ideal.ring()));
  r.maximal_depth = r.grade == r.mgrade;
  if (r.maximal_depth) {
    for (const auto& p : r.associated_primes) {
      if (cd_prime(p, axis) == r.grade) {
        r.witness_prime = p;
        break;
      }
    }
    ensure(r.witness_prime.has_value(), "maximal depth without a witnessing prime");
  }
  r.cm_wrt_axis = r.grade == r.cd;
  r.cm_ordinary = r.depth == r.dim;

  ensure(r.grade <= r.mgrade && r.mgrade <= r.cd && r.cd <= r.dim, "grade <= mgrade <= cd <= dim violated");
  int largest_cd = 0;
  for (const auto& p : r.associated_primes) largest_cd = std::max(largest_cd, cd_prime(p, axis));
  ensure(r.cd == largest_cd, "cd differs from the largest cd over associated primes");
  return r;
}

DirectSumVerdict direct_sum_verdict(const std::vector<MonomialIdeal>& ideals, const AxisIdeal& axis) {
  if (ideals.empty()) throw Error(ErrorKind::EmptyList, "direct sum of no modules");
  for (const auto& ideal : ideals) {
    require_same_ring(ideals.front().ring(), ideal.ring());
    if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "a summand is the zero module");
  }

  std::vector<int> grades, mgrades;
  for (const auto& ideal : ideals) {
    grades.push_back(grade(Subquotient::cyclic(ideal), axis));
    mgrades.push_back(mgrade(ideal, axis));
  }
  const int min_grade = *std::min_element(grades.begin(), grades.end());
  const int min_mgrade = *std::min_element(mgrades.begin(), mgrades.end());

  DirectSumVerdict out;
  out.grade = min_grade;
  out.mgrade = min_mgrade;
  out.achiever = static_cast<std::size_t>(std::find(grades.begin(), grades.end(), min_grade) - grades.begin());
  for (std::size_t j = 0; j < ideals.size(); ++j) {
    if (grades[j] == min_grade && grades[j] == mgrades[j]) {
      out.verdict = true;
      out.achiever = j;
      break;
    }
  }
  ensure(out.verdict == (min_grade == min_mgrade), "direct-sum criterion disagrees with the definition");
  return out;
}

TensorVerdict tensor_verdict(const MonomialIdeal& ideal_x, const MonomialIdeal& ideal_y) {
  require_same_ring(ideal_x.ring(), ideal_y.ring());
  const RingSpec& ring = ideal_x.ring();
  const VarSet xs = VarSet::range(0, ring.m);
  const VarSet ys = VarSet::range(ring.m, ring.num_vars());
  if (!ideal_x.support().is_subset_of(xs)) throw Error(ErrorKind::WrongBlock, "Ix uses a y-variable");
  if (!ideal_y.support().is_subset_of(ys)) throw Error(ErrorKind::WrongBlock, "Iy uses an x-variable");
  if (ideal_x.is_unit() || ideal_y.is_unit()) throw Error(ErrorKind::UnitIdeal, "a tensor factor is zero");

  const AxisIdeal q = AxisIdeal::y_block(ring);
  const MonomialIdeal joint = sum(ideal_x, ideal_y);
  const InvariantReport report = analyze(joint, q);

  const RingSpec ring_y = RingSpec::make(0, ring.n, ring.characteristic);
  const MonomialIdeal small_y = project(ideal_y, ys, ring_y);
  const auto ass_y = associated_primes(small_y);

  TensorVerdict out;
  out.grade = report.grade;
  out.mgrade = report.mgrade;
  out.verdict = report.maximal_depth;
  out.depth_y = depth_module(Subquotient::cyclic(small_y), AxisIdeal::all(ring_y));
  out.mdepth_y = ring.n;
  for (const auto& p : ass_y) out.mdepth_y = std::min(out.mdepth_y, ring.n - p.height());

  ensure(out.grade == out.depth_y, "grade(Q, S/I) differs from depth K[y]/Iy");
  ensure(out.mgrade == out.mdepth_y, "mgrade(Q, S/I) differs from mdepth K[y]/Iy");
  ensure(out.verdict == (out.depth_y == out.mdepth_y), "tensor verdict differs from K[y]/Iy");

  // Ass of a tensor product of monomial quotients is the set of sums.
  std::vector<PrimeSupport> sums;
  const RingSpec ring_x = ring.m > 0 ? RingSpec::make(ring.m, 0, ring.characteristic) : ring;
  const auto ass_x = ring.m > 0 ? associated_primes(project(ideal_x, xs, ring_x)) : std::vector<PrimeSupport>{{}};
  for (const auto& px : ass_x) {
    for (const auto& py : ass_y) {
      const VarSet lifted_x = VarSet::of(px.vars.indices());
      std::vector<int> lifted_y;
      for (int v : py.vars.indices()) lifted_y.push_back(v + ring.m);
      sums.push_back(PrimeSupport{lifted_x | VarSet::of(lifted_y)});
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  ensure(sums == report.associated_primes, "Ass of the tensor product is not the set of sums");
  return out;
}

}  // namespace bigrade
