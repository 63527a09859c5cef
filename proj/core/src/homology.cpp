#include "bigrade/homology.hpp"

#include <algorithm>
#include <bit>

#include "bigrade/box.hpp"
#include "bigrade/decomposition.hpp"
#include "bigrade/error.hpp"
#include "bigrade/rank.hpp"

namespace bigrade {

namespace {

constexpr int kMaxBoxRounds = 8;

int sign_below(std::uint32_t subset, int k) {
  return (std::popcount(subset & ((1u << k) - 1u)) % 2 == 0) ? 1 : -1;
}

/// Cohomological or homological complex on the Boolean lattice of subsets
/// of an axis, with a 0/1-dimensional term per subset. `raising` selects
/// the Čech direction (σ -> σ ∪ {k}); otherwise Koszul (σ -> σ \ {k}).
/// Returns homology dimensions indexed by subset size.
std::vector<int> boolean_complex_homology(int r, const std::vector<char>& term, bool raising, int characteristic) {
  const std::uint32_t full = 1u << r;
  std::vector<std::vector<std::uint32_t>> basis(r + 1);
  std::vector<int> position(full, -1);
  for (std::uint32_t s = 0; s < full; ++s) {
    if (!term[s]) continue;
    auto& level = basis[std::popcount(s)];
    position[s] = static_cast<int>(level.size());
    level.push_back(s);
  }

  // ranks[j] = rank of the map between levels j and j+1.
  std::vector<std::size_t> ranks(r + 1, 0);
  for (int j = 0; j < r; ++j) {
    const auto& low = basis[j];
    const auto& high = basis[j + 1];
    if (low.empty() || high.empty()) continue;
    IntMatrix m(raising ? high.size() : low.size(), raising ? low.size() : high.size());
    bool any = false;
    for (std::size_t h = 0; h < high.size(); ++h) {
      const std::uint32_t s = high[h];
      for (int k = 0; k < r; ++k) {
        if (!(s & (1u << k))) continue;
        const std::uint32_t t = s & ~(1u << k);
        if (position[t] < 0) continue;
        const std::size_t l = static_cast<std::size_t>(position[t]);
        // Koszul sign uses elements of s below k; Čech uses elements of t
        // below k, which are the same elements.
        const int sign = sign_below(t, k);
        if (raising)
          m(h, l) = sign;
        else
          m(l, h) = sign;
        any = true;
      }
    }
    if (any) ranks[j] = rank(m, characteristic);
  }

  std::vector<int> h(r + 1, 0);
  for (int j = 0; j <= r; ++j) {
    const std::size_t in = (j > 0) ? ranks[j - 1] : 0;
    const std::size_t out = (j < r) ? ranks[j] : 0;
    h[j] = static_cast<int>(basis[j].size() - in - out);
  }
  return h;
}

void check_degree(const Subquotient& module, std::span<const int> degree) {
  if (static_cast<int>(degree.size()) != module.ring().num_vars())
    throw Error(ErrorKind::DimensionMismatch, "fine degree has the wrong length");
}

bool nilpotent_off_axis(const Subquotient& module, const AxisIdeal& axis) {
  const MonomialIdeal ann = module.annihilator();
  for (int v : axis.complement().indices()) {
    const bool has_power = std::any_of(ann.gens().begin(), ann.gens().end(), [&](const Monomial& g) {
      return g.support() == (std::uint64_t{1} << v) || g.is_one();
    });
    if (!has_power) return false;
  }
  return true;
}

}  // namespace

int fine_piece(const Subquotient& module, std::span<const int> degree) {
  check_degree(module, degree);
  if (std::any_of(degree.begin(), degree.end(), [](int c) { return c < 0; })) return 0;
  return module.present(degree) ? 1 : 0;
}

std::vector<int> koszul_homology(const Subquotient& module, const AxisIdeal& axis, std::span<const int> degree) {
  check_degree(module, degree);
  const auto zs = axis.vars().indices();
  const int r = static_cast<int>(zs.size());
  if (std::any_of(degree.begin(), degree.end(), [](int c) { return c < 0; })) return std::vector<int>(r + 1, 0);

  std::vector<char> term(std::size_t{1} << r, 0);
  std::vector<int> shifted(degree.begin(), degree.end());
  for (std::uint32_t s = 0; s < term.size(); ++s) {
    bool ok = true;
    for (int k = 0; k < r && ok; ++k)
      if ((s >> k) & 1u) ok = degree[zs[k]] >= 1;
    if (!ok) continue;
    for (int k = 0; k < r; ++k) shifted[zs[k]] = degree[zs[k]] - static_cast<int>((s >> k) & 1u);
    term[s] = module.present(shifted) ? 1 : 0;
  }
  return boolean_complex_homology(r, term, /*raising=*/false, module.ring().characteristic);
}

int koszul_homology_dim(const Subquotient& module, const AxisIdeal& axis, int j, std::span<const int> degree) {
  if (j < 0 || j > axis.size()) throw Error(ErrorKind::PreconditionFailed, "Koszul index out of range");
  return koszul_homology(module, axis, degree)[j];
}

BettiTable betti_and_projdim(const Subquotient& module, const AxisIdeal& axis) {
  if (module.is_zero()) throw Error(ErrorKind::ZeroModule, "Betti numbers of the zero module");
  if (!nilpotent_off_axis(module, axis))
    throw Error(ErrorKind::PreconditionFailed, "module is not finitely generated over the axis subring");

  const int nv = module.ring().num_vars();
  std::vector<int> box = module.lcm_box();
  for (int round = 0; round < kMaxBoxRounds; ++round) {
    BettiTable table;
    std::vector<int> hi(box);
    for (int& h : hi) ++h;
    std::vector<bool> grow(nv, false);
    bool shell_clean = true;
    for (BoxWalk w(std::vector<int>(nv, 0), hi); !w.done(); w.next()) {
      const auto& b = w.point();
      const auto h = koszul_homology(module, axis, b);
      for (int j = 0; j < static_cast<int>(h.size()); ++j) {
        if (h[j] == 0) continue;
        table.entries.push_back({b, j, h[j]});
        table.projdim = std::max(table.projdim, j);
        for (int i = 0; i < nv; ++i) {
          if (b[i] == hi[i]) {
            grow[i] = true;
            shell_clean = false;
          }
        }
      }
    }
    if (shell_clean) {
      std::sort(table.entries.begin(), table.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
        return a.index != b.index ? a.index < b.index : a.degree < b.degree;
      });
      table.certified_box = std::move(box);
      return table;
    }
    for (int i = 0; i < nv; ++i)
      if (grow[i]) box[i] = 2 * box[i] + 1;
  }
  throw Error(ErrorKind::Internal, "Betti scan box failed to certify");
}

int depth_module(const Subquotient& module, const AxisIdeal& axis) {
  return axis.size() - betti_and_projdim(module, axis).projdim;
}

int dim_module(const Subquotient& module) {
  if (module.is_zero()) throw Error(ErrorKind::ZeroModule, "dimension of the zero module");
  return dim_quotient(module.annihilator());
}

std::vector<int> cech_cohomology(const Subquotient& module, const AxisIdeal& axis, std::span<const int> degree) {
  check_degree(module, degree);
  const auto zs = axis.vars().indices();
  const int r = static_cast<int>(zs.size());
  std::vector<int> zero(r + 1, 0);
  for (int v : axis.complement().indices())
    if (degree[v] < 0) return zero;

  std::uint32_t negative = 0;
  for (int k = 0; k < r; ++k)
    if (degree[zs[k]] < 0) negative |= 1u << k;

  const auto cap = module.lcm_box();
  std::vector<char> term(std::size_t{1} << r, 0);
  std::vector<int> probe(degree.begin(), degree.end());
  bool any = false;
  for (std::uint32_t s = 0; s < term.size(); ++s) {
    if ((s & negative) != negative) continue;
    // Inverting the variables of s: membership stabilizes once their
    // exponents reach the cap.
    for (int k = 0; k < r; ++k) {
      const int z = zs[k];
      probe[z] = ((s >> k) & 1u) ? std::max(degree[z], cap[z]) : degree[z];
    }
    term[s] = module.present(probe) ? 1 : 0;
    any = any || term[s];
  }
  if (!any) return zero;
  return boolean_complex_homology(r, term, /*raising=*/true, module.ring().characteristic);
}

int cech_piece_dim(const Subquotient& module, const AxisIdeal& axis, int i, std::span<const int> degree) {
  if (i < 0 || i > axis.size()) throw Error(ErrorKind::PreconditionFailed, "cohomological index out of range");
  return cech_cohomology(module, axis, degree)[i];
}

std::vector<FineDegree> cech_representatives(const Subquotient& module, const AxisIdeal& axis) {
  const auto cap = module.lcm_box();
  std::vector<int> lo(cap.size(), 0);
  for (int z : axis.vars().indices()) lo[z] = -1;
  std::vector<FineDegree> out;
  for (BoxWalk w(lo, cap); !w.done(); w.next()) out.push_back(w.point());
  return out;
}

FineDegree cech_class_of(const Subquotient& module, const AxisIdeal& axis, std::span<const int> degree) {
  check_degree(module, degree);
  const auto cap = module.lcm_box();
  FineDegree out(degree.begin(), degree.end());
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (out[v] < 0) {
      if (!axis.vars().contains(static_cast<int>(v))) return {};
      out[v] = -1;
    } else {
      out[v] = std::min(out[v], cap[v]);
    }
  }
  return out;
}

}  // namespace bigrade
