#include "bigrade/fibers.hpp"

#include <algorithm>
#include <map>

#include "bigrade/box.hpp"
#include "bigrade/error.hpp"

namespace bigrade {

namespace {

RingSpec axis_ring(const RingSpec& ring, VarSet vars) {
  const int xs = (vars & VarSet::range(0, ring.m)).size();
  const int ys = (vars & VarSet::range(ring.m, ring.num_vars())).size();
  return RingSpec::make(xs, ys, ring.characteristic);
}

}  // namespace

FiberDecomposition fibers(const Subquotient& module, const AxisIdeal& axis) {
  if (module.is_zero()) throw Error(ErrorKind::ZeroModule, "fiber decomposition of the zero module");
  const RingSpec& ring = module.ring();
  FiberDecomposition out{axis_ring(ring, axis.vars()), axis.vars(), {}, {}};

  const auto off = axis.complement().indices();
  const auto box = module.lcm_box();
  for (int v : off) out.caps.push_back(box[v]);

  using Key = std::pair<std::vector<Monomial>, std::vector<Monomial>>;
  std::map<Key, std::size_t> index;

  for (BoxWalk w(std::vector<int>(off.size(), 0), out.caps); !w.done(); w.next()) {
    const auto& a = w.point();
    std::vector<int> shift(ring.num_vars(), 0);
    bool capped = false;
    for (std::size_t k = 0; k < off.size(); ++k) {
      shift[off[k]] = a[k];
      capped = capped || a[k] == out.caps[k];
    }
    const Monomial xa(shift);
    MonomialIdeal top = project(restrict_to(colon(module.top(), xa), axis.vars()), axis.vars(), out.fiber_ring);
    MonomialIdeal bottom =
        project(restrict_to(colon(module.bottom(), xa), axis.vars()), axis.vars(), out.fiber_ring);
    Key key{top.gens(), bottom.gens()};
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(std::move(key), out.classes.size());
      out.classes.push_back(FiberClass{a, {a}, Subquotient(std::move(top), std::move(bottom)), capped});
    } else {
      auto& cls = out.classes[it->second];
      cls.members.push_back(a);
      cls.infinite_family = cls.infinite_family || capped;
    }
  }
  return out;
}

std::vector<int> axis_part(const FiberDecomposition& decomposition, std::span<const int> degree) {
  std::vector<int> out;
  for (int v : decomposition.axis_vars.indices()) out.push_back(degree[v]);
  return out;
}

int class_of(const FiberDecomposition& decomposition, const AxisIdeal& axis, std::span<const int> degree) {
  const auto off = axis.complement().indices();
  std::vector<int> a(off.size());
  for (std::size_t k = 0; k < off.size(); ++k) {
    if (degree[off[k]] < 0) return -1;
    a[k] = std::min(degree[off[k]], decomposition.caps[k]);
  }
  for (std::size_t c = 0; c < decomposition.classes.size(); ++c) {
    const auto& members = decomposition.classes[c].members;
    if (std::find(members.begin(), members.end(), a) != members.end()) return static_cast<int>(c);
  }
  throw Error(ErrorKind::Internal, "capped pattern missing from the fiber decomposition");
}

}  // namespace bigrade
