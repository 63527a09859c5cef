#include "bigrade/hypersurface.hpp"

#include <algorithm>

#include "bigrade/error.hpp"
#include "bigrade/invariants.hpp"

namespace bigrade {

FactorProfile::FactorProfile(std::vector<Bidegree> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorKind::BadProfile, "a hypersurface needs at least one factor");
  for (const auto& f : factors_) {
    if (f.x < 0 || f.y < 0 || f.x + f.y < 1)
      throw Error(ErrorKind::BadProfile, "factor bidegrees must be nonnegative and nonzero");
    if (f.y == 0)
      alpha1_ += f.x;
    else if (f.x == 0)
      beta2_ += f.y;
    else {
      alpha2_ += f.x;
      beta1_ += f.y;
    }
  }
  std::sort(factors_.begin(), factors_.end());
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::A: return "a";
    case CaseLabel::B: return "b";
    case CaseLabel::C: return "c";
    case CaseLabel::None: return "none";
  }
  return "none";
}

std::string to_string(CaseTrace trace) {
  switch (trace) {
    case CaseTrace::Case1: return "case1";
    case CaseTrace::Case2: return "case2";
    case CaseTrace::Case3: return "case3";
    case CaseTrace::Case4: return "case4";
    case CaseTrace::Case5: return "case5";
    case CaseTrace::PureX: return "pure_x";
    case CaseTrace::PureY: return "pure_y";
  }
  return "case1";
}

HypersurfaceVerdict classify(const FactorProfile& profile, const RingSpec& ring) {
  if (ring.m < 1 || ring.n < 1) throw Error(ErrorKind::BadRing, "classification needs m >= 1 and n >= 1");
  const int a1 = profile.alpha1(), a2 = profile.alpha2(), b1 = profile.beta1(), b2 = profile.beta2();

  HypersurfaceVerdict v;
  const bool mixed = a2 > 0;  // mixed factors carry both a2 > 0 and b1 > 0
  if (a1 > 0 && a2 > 0 && b1 > 0 && b2 > 0)
    v.case_label = CaseLabel::A;
  else if (a1 == 0 && a2 > 0 && b1 > 0 && b2 > 0)
    v.case_label = CaseLabel::B;
  else if (a2 == 0 && b1 == 0)
    v.case_label = CaseLabel::C;

  if (mixed) {
    if (a1 > 0)
      v.case_trace = b2 > 0 ? CaseTrace::Case1 : CaseTrace::Case4;
    else
      v.case_trace = b2 > 0 ? CaseTrace::Case2 : CaseTrace::Case5;
  } else if (a1 > 0 && b2 > 0) {
    v.case_trace = CaseTrace::Case3;
  } else {
    v.case_trace = a1 > 0 ? CaseTrace::PureX : CaseTrace::PureY;
  }

  // R is Cohen–Macaulay of dimension m+n-1, so grade(Q) = dim R - cd(P, R)
  // with cd(P, R) = m exactly when some factor lies in Q's support.
  v.grade_q = profile.b() > 0 ? ring.n - 1 : ring.n;
  // cd(Q, S/(f_i)) = dim S/(P + f_i) is n-1 for a pure y-form, n otherwise.
  v.mgrade_q = b2 > 0 ? ring.n - 1 : ring.n;
  v.maximal_depth = v.grade_q == v.mgrade_q;
  ensure(v.maximal_depth == (v.case_label != CaseLabel::None), "case label disagrees with grade = mgrade");
  return v;
}

FactorProfile monomial_profile(const Monomial& f, const RingSpec& ring) {
  if (static_cast<int>(f.size()) != ring.num_vars())
    throw Error(ErrorKind::DimensionMismatch, "monomial length does not match ring");
  std::vector<Bidegree> factors;
  for (int v = 0; v < ring.num_vars(); ++v) {
    if (f[v] == 0) continue;
    factors.push_back(ring.is_x(v) ? Bidegree{f[v], 0} : Bidegree{0, f[v]});
  }
  return FactorProfile(std::move(factors));
}

bool monomial_crosscheck(const Monomial& f, const RingSpec& ring) {
  const HypersurfaceVerdict verdict = classify(monomial_profile(f, ring), ring);
  const MonomialIdeal ideal(ring, {f});
  const AxisIdeal q = AxisIdeal::y_block(ring);
  const int g = grade(Subquotient::cyclic(ideal), q);
  const int mg = mgrade(ideal, q);
  return verdict.grade_q == g && verdict.mgrade_q == mg && verdict.maximal_depth == (g == mg);
}

}  // namespace bigrade
