#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bigrade/hypersurface.hpp"
#include "bigrade/monomial_ideal.hpp"

namespace bigrade {

/// Ideal files:
///
///   # Example
///   ring 2 4
///   gens: x1*x2, x1*y3, y2^2
///
/// `#` starts a comment. Terms are `*`-separated products of x<i>[^e] and
/// y<j>[^e] factors; an empty gens list is the zero ideal. Several gens
/// lines accumulate. Throws ParseError with 1-based line and column.
MonomialIdeal parse_ideal_text(std::string_view text, int characteristic = 0);
MonomialIdeal read_ideal_file(const std::string& path, int characteristic = 0);

/// Canonical rendering; parse_ideal_text(render_ideal_text(I)) == I.
std::string render_ideal_text(const MonomialIdeal& ideal);

/// A single term such as `x1^2*y3` in the given ring.
Monomial parse_monomial(std::string_view text, const RingSpec& ring);

struct ProfileSpec {
  FactorProfile profile;
  /// Present when the text carried a `ring m n` line.
  std::optional<RingSpec> ring;
};

/// Factor-profile text: an optional `ring m n` line and a
/// `factors: (a1,b1) (a2,b2) ...` line, where x<i>[^e] / y<j>[^e] may stand
/// for a variable-power factor. The `factors:` prefix is optional.
ProfileSpec parse_profile_text(std::string_view text);
ProfileSpec read_profile_file(const std::string& path);

}  // namespace bigrade
