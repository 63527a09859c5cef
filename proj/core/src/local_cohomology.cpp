#include "bigrade/local_cohomology.hpp"

#include <algorithm>
#include <set>

#include "bigrade/box.hpp"
#include "bigrade/error.hpp"
#include "bigrade/filtration.hpp"

namespace bigrade {

namespace {

void require_index(const AxisIdeal& axis, int index) {
  if (index < 0 || index > axis.size())
    throw Error(ErrorKind::PreconditionFailed, "cohomological index outside [0, |Z|]");
}

/// Number of integers t in [lo_bound, r] represented by a capped
/// coordinate value: -1 stands for every negative value, the cap for
/// every value at or above it.
std::int64_t coordinate_count(int value, int cap, int r, bool axis_coordinate) {
  if (value < 0) return axis_coordinate ? r : 0;
  if (value < cap) return value <= r ? 1 : 0;
  return std::max(0, r - cap + 1);
}

FineDegree lift(const FiberDecomposition& decomposition, const AxisIdeal& axis, const std::vector<int>& pattern,
                const std::vector<int>& fiber_degree) {
  FineDegree out(axis.vars().size() + axis.complement().size(), 0);
  const auto off = axis.complement().indices();
  const auto on = decomposition.axis_vars.indices();
  for (std::size_t k = 0; k < off.size(); ++k) out[off[k]] = pattern[k];
  for (std::size_t k = 0; k < on.size(); ++k) out[on[k]] = fiber_degree[k];
  return out;
}

}  // namespace

LCReport lc_report(const MonomialIdeal& ideal, const AxisIdeal& axis, int index) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/I is the zero module");
  require_index(axis, index);
  const auto decomposition = fibers(Subquotient::cyclic(ideal), axis);
  const AxisIdeal fiber_axis = decomposition.fiber_axis();

  LCReport report;
  report.index = index;
  std::int64_t total = 0;
  bool total_finite = true;
  for (const auto& cls : decomposition.classes) {
    FiberCohomology fc;
    fc.pattern = cls.pattern;
    fc.member_count = cls.members.size();
    fc.infinite_family = cls.infinite_family;
    std::int64_t fiber_total = 0;
    if (!cls.fiber.is_zero()) {
      const auto cap = cls.fiber.lcm_box();
      for (const auto& c : cech_representatives(cls.fiber, fiber_axis)) {
        const int d = cech_piece_dim(cls.fiber, fiber_axis, index, c);
        if (d == 0) continue;
        bool negative = false, at_cap = false;
        for (std::size_t k = 0; k < c.size(); ++k) {
          negative = negative || c[k] < 0;
          at_cap = at_cap || c[k] == cap[k];
        }
        ensure(negative || !at_cap, "local cohomology survives beyond the lcm box");
        if (negative) {
          fc.finite_length = false;
          if (!fc.witness_degree) fc.witness_degree = lift(decomposition, axis, cls.pattern, c);
        } else {
          fiber_total += d;
        }
      }
    }
    if (fc.finite_length) {
      fc.total_dim = fiber_total;
      if (fiber_total > 0) {
        report.is_zero = false;
        if (cls.infinite_family)
          total_finite = false;
        else
          total += fiber_total * static_cast<std::int64_t>(cls.members.size());
      }
    } else {
      report.is_zero = false;
      report.finitely_generated = false;
      total_finite = false;
    }
    report.per_fiber.push_back(std::move(fc));
  }
  if (total_finite) report.total_dim = total;
  return report;
}

GeneralizedCm generalized_cm(const MonomialIdeal& ideal, const AxisIdeal& axis) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/I is the zero module");
  GeneralizedCm out;
  out.cd = cd(Subquotient::cyclic(ideal), axis);
  for (int i = 0; i < out.cd; ++i) {
    const bool fg = lc_report(ideal, axis, i).finitely_generated;
    out.finitely_generated.push_back(fg);
    out.verdict = out.verdict && fg;
  }
  return out;
}

std::vector<std::int64_t> growth_scan(const MonomialIdeal& ideal, const AxisIdeal& axis, int index,
                                      const std::vector<int>& radii) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/I is the zero module");
  require_index(axis, index);
  const auto decomposition = fibers(Subquotient::cyclic(ideal), axis);
  const AxisIdeal fiber_axis = decomposition.fiber_axis();

  struct Piece {
    std::vector<int> degree;
    std::vector<int> cap;
    int dim;
  };
  // Nonzero cohomology classes per fiber class.
  std::vector<std::vector<Piece>> pieces(decomposition.classes.size());
  for (std::size_t k = 0; k < decomposition.classes.size(); ++k) {
    const auto& fiber = decomposition.classes[k].fiber;
    if (fiber.is_zero()) continue;
    const auto cap = fiber.lcm_box();
    for (const auto& c : cech_representatives(fiber, fiber_axis)) {
      const int d = cech_piece_dim(fiber, fiber_axis, index, c);
      if (d != 0) pieces[k].push_back({c, cap, d});
    }
  }

  std::vector<std::int64_t> out;
  for (int r : radii) {
    if (r < 0) throw Error(ErrorKind::PreconditionFailed, "negative growth radius");
    std::int64_t total = 0;
    for (std::size_t k = 0; k < decomposition.classes.size(); ++k) {
      if (pieces[k].empty()) continue;
      std::int64_t x_count = 0;
      for (const auto& a : decomposition.classes[k].members) {
        std::int64_t count = 1;
        for (std::size_t t = 0; t < a.size(); ++t)
          count *= coordinate_count(a[t], decomposition.caps[t], r, false);
        x_count += count;
      }
      for (const auto& p : pieces[k]) {
        std::int64_t y_count = 1;
        for (std::size_t t = 0; t < p.degree.size(); ++t)
          y_count *= coordinate_count(p.degree[t], p.cap[t], r, true);
        total += x_count * y_count * p.dim;
      }
    }
    out.push_back(total);
  }
  return out;
}

CorollaryTriple corollary_check(const MonomialIdeal& ideal, const AxisIdeal& axis) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/I is the zero module");
  if (!generalized_cm(ideal, axis).verdict)
    throw Error(ErrorKind::PreconditionFailed, "S/I is not generalized Cohen-Macaulay with respect to the axis");
  const Subquotient module = Subquotient::cyclic(ideal);
  const int g = grade(module, axis);
  if (g == 0) throw Error(ErrorKind::PreconditionFailed, "grade with respect to the axis is 0");

  CorollaryTriple out;
  out.max_depth = g == mgrade(ideal, axis);
  out.cm_wrt_axis = g == cd(module, axis);
  out.seq_cm = ideal.is_zero() ? true : sequentially_cm(ideal, axis).verdict;
  ensure(out.max_depth == out.seq_cm && out.seq_cm == out.cm_wrt_axis,
         "maximal depth, sequential CM and CM disagree on a generalized CM module");
  return out;
}

std::vector<int> finitely_generated_prime_levels(const MonomialIdeal& ideal, const AxisIdeal& axis) {
  std::set<int> levels;
  for (const auto& p : associated_primes(ideal)) {
    const int j = cd_prime(p, axis);
    if (j > 0) levels.insert(j);
  }
  std::vector<int> out;
  for (int j : levels)
    if (lc_report(ideal, axis, j).finitely_generated) out.push_back(j);
  return out;
}

}  // namespace bigrade
