#pragma once

#include <string>
#include <vector>

#include "bigrade/monomial_ideal.hpp"
#include "bigrade/text_format.hpp"

namespace bigrade::test {

inline MonomialIdeal ideal_of(int m, int n, const std::string& gens) {
  return parse_ideal_text("ring " + std::to_string(m) + " " + std::to_string(n) + "\ngens: " + gens + "\n");
}

inline Monomial mono(int m, int n, const std::string& text) { return parse_monomial(text, RingSpec::make(m, n)); }

inline MonomialIdeal not_seqcm_example() {
  return ideal_of(2, 4, "x1*x2, x1*y3, x1*y4, x2*y1, y1*y3, y1*y4, y2*y4, y2*y3");
}

// (x1,y1,y2) meet (x2,y3,y4)
inline MonomialIdeal gen_cm_example() {
  return intersect(ideal_of(2, 4, "x1, y1, y2"), ideal_of(2, 4, "x2, y3, y4"));
}

// (x1,y1) meet (x2,y2)
inline MonomialIdeal two_planes() { return intersect(ideal_of(2, 2, "x1, y1"), ideal_of(2, 2, "x2, y2")); }

inline PrimeSupport prime_of(const RingSpec& ring, const std::vector<std::string>& names) {
  std::vector<int> vars;
  for (const auto& name : names) {
    for (int v = 0; v < ring.num_vars(); ++v)
      if (ring.var_name(v) == name) vars.push_back(v);
  }
  return PrimeSupport{VarSet::of(vars)};
}

inline std::vector<std::string> prime_names(const std::vector<PrimeSupport>& primes, const RingSpec& ring) {
  std::vector<std::string> out;
  for (const auto& p : primes) out.push_back(p.to_string(ring));
  return out;
}

}  // namespace bigrade::test
