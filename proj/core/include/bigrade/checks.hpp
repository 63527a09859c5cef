#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bigrade/monomial_ideal.hpp"

namespace bigrade {

struct RandomIdealOptions {
  int max_block_size = 3;
  int max_exponent = 2;
  int max_gens = 6;
};

/// A random proper nonzero monomial ideal in K[x_1..x_m, y_1..y_n] with
/// 1 <= m, n <= max_block_size. Uses raw engine output only, so the
/// sequence is identical on every platform.
MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealOptions& options = {});

struct PropertyTally {
  std::string name;
  int checked = 0;
  int violations = 0;
  /// First few offending instances, rendered.
  std::vector<std::string> examples;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int instances = 0;
  std::vector<PropertyTally> properties;
  /// Instances where an associated prime sits at cd level j > 0 but
  /// H^j is finitely generated. Logged, never asserted.
  std::vector<std::string> notes;

  bool passed() const;
  int violations() const;
};

/// Every structural identity of the invariant engine on `count` random
/// ideals drawn from `seed`.
SuiteReport property_suite(std::uint64_t seed, int count, const RandomIdealOptions& options = {});

/// Fiber-decomposition route versus the direct Čech complex of S/I over
/// every representative degree: piece dimensions, grade and cd.
SuiteReport oracle_suite(std::uint64_t seed, int count, const RandomIdealOptions& options = {});

/// Exhaustive hypersurface classification over profiles with at most
/// `max_factors` factors of bidegree <= (max_degree, max_degree) in rings
/// with 1 <= m, n <= max_block, plus the monomial cross-check on every
/// monomial with exponents <= max_degree.
SuiteReport hypersurface_suite(int max_factors = 4, int max_degree = 3, int max_block = 3);

}  // namespace bigrade
