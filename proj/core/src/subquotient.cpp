#include "bigrade/subquotient.hpp"

#include <algorithm>
#include <set>

#include "bigrade/box.hpp"
#include "bigrade/error.hpp"

namespace bigrade {

Subquotient::Subquotient(MonomialIdeal top, MonomialIdeal bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  require_same_ring(top_.ring(), bottom_.ring());
  if (!bottom_.is_subset_of(top_))
    throw Error(ErrorKind::PreconditionFailed, "subquotient needs J' contained in J");
}

std::vector<int> Subquotient::lcm_box() const {
  auto box = top_.lcm_box();
  const auto other = bottom_.lcm_box();
  for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(box[i], other[i]);
  return box;
}

std::vector<PrimeSupport> associated_primes(const Subquotient& module) {
  if (module.is_zero()) throw Error(ErrorKind::ZeroModule, "associated primes of the zero module");
  const RingSpec& ring = module.ring();
  std::set<PrimeSupport> primes;
  for (BoxWalk w(std::vector<int>(ring.num_vars(), 0), module.lcm_box()); !w.done(); w.next()) {
    if (!module.present(w.point())) continue;
    const MonomialIdeal c = colon(module.bottom(), Monomial(w.point()));
    if (c.is_squarefree() && c.is_irreducible()) primes.insert(PrimeSupport{c.support()});
  }
  return {primes.begin(), primes.end()};
}

}  // namespace bigrade
