#pragma once

#include <string>
#include <vector>

#include "bigrade/ring.hpp"

namespace bigrade {

struct Bidegree {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Bidegrees of the bihomogeneous irreducible factors of f, with the
/// block sums that the classification depends on. Irreducibility is the
/// caller's assertion.
class FactorProfile {
public:
  /// Throws BadProfile on an empty list or a (0,0) or negative factor.
  explicit FactorProfile(std::vector<Bidegree> factors);

  const std::vector<Bidegree>& factors() const noexcept { return factors_; }

  /// x-degree carried by pure-x factors.
  int alpha1() const noexcept { return alpha1_; }
  /// x-degree carried by mixed factors.
  int alpha2() const noexcept { return alpha2_; }
  /// y-degree carried by mixed factors.
  int beta1() const noexcept { return beta1_; }
  /// y-degree carried by pure-y factors.
  int beta2() const noexcept { return beta2_; }
  int a() const noexcept { return alpha1_ + alpha2_; }
  int b() const noexcept { return beta1_ + beta2_; }

private:
  std::vector<Bidegree> factors_;
  int alpha1_ = 0;
  int alpha2_ = 0;
  int beta1_ = 0;
  int beta2_ = 0;
};

enum class CaseLabel { A, B, C, None };

/// Which branch of the case analysis decided the verdict. Cases 1-5 are the
/// mixed/unmixed splits; PureX and PureY are the profiles with a single
/// nonzero block sum.
enum class CaseTrace { Case1, Case2, Case3, Case4, Case5, PureX, PureY };

struct HypersurfaceVerdict {
  bool maximal_depth = false;
  CaseLabel case_label = CaseLabel::None;
  int grade_q = 0;
  int mgrade_q = 0;
  CaseTrace case_trace = CaseTrace::Case1;
};

std::string to_string(CaseLabel label);
std::string to_string(CaseTrace trace);

/// Maximal depth of S/fS with respect to Q from the factor bidegrees of f.
/// grade(Q) = n-1 when f involves y (b > 0), else n; mgrade(Q) = n-1 when
/// some factor is a pure y-form, else n. Throws BadRing unless m, n >= 1.
HypersurfaceVerdict classify(const FactorProfile& profile, const RingSpec& ring);

/// One factor of bidegree (e,0) or (0,e) per variable power of f.
FactorProfile monomial_profile(const Monomial& f, const RingSpec& ring);

/// classify() on the profile of a monomial agrees with the general
/// invariant engine applied to S/(f). Throws BadProfile for f = 1.
bool monomial_crosscheck(const Monomial& f, const RingSpec& ring);

}  // namespace bigrade
