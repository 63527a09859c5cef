#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the library beyond ideal membership.

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "bigrade/box.hpp"
#include "bigrade/monomial_ideal.hpp"

namespace bigrade::oracle {

// Every monomial with all exponents <= bound.
inline std::vector<Monomial> monomials_up_to(int num_vars, int bound) {
  std::vector<Monomial> out;
  for (BoxWalk walk(std::vector<int>(num_vars, 0), std::vector<int>(num_vars, bound)); !walk.done(); walk.next())
    out.emplace_back(walk.point());
  return out;
}

inline bool divisible_by_some(const Monomial& u, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.divides(u)) return true;
  return false;
}

// Rank over Q by plain fraction elimination.
inline int rational_rank(std::vector<std::vector<boost::multiprecision::cpp_rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const auto factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// dim H^i of the Cech complex of S/I on the variables in axis_vars, in fine
// degree c. Term for a subset s of the axis is nonzero iff s covers the
// negative coordinates, no coordinate outside the axis is negative, and the
// monomial with the s-coordinates pushed past every generator is not in I.
inline std::vector<int> cech_dims(const MonomialIdeal& ideal, const std::vector<int>& axis_vars,
                                  const std::vector<int>& c) {
  const int r = static_cast<int>(axis_vars.size());
  int big = 1;
  for (const auto& g : ideal.gens())
    for (std::size_t k = 0; k < g.size(); ++k) big = std::max(big, g[k] + 1);

  for (std::size_t v = 0; v < c.size(); ++v) {
    bool on_axis = false;
    for (int a : axis_vars) on_axis = on_axis || a == static_cast<int>(v);
    if (!on_axis && c[v] < 0) return std::vector<int>(r + 1, 0);
  }

  auto present = [&](unsigned subset) {
    std::vector<int> e(c);
    for (int k = 0; k < r; ++k) {
      const int v = axis_vars[k];
      if (subset >> k & 1u)
        e[v] = std::max(e[v], big);
      else if (e[v] < 0)
        return false;
    }
    return !ideal.contains(Monomial(e));
  };

  std::vector<std::vector<unsigned>> terms(r + 1);
  for (unsigned s = 0; s < (1u << r); ++s)
    if (present(s)) terms[std::popcount(s)].push_back(s);

  using Q = boost::multiprecision::cpp_rational;
  std::vector<int> ranks(r + 1, 0);  // rank of the map C^i -> C^{i+1}
  for (int i = 0; i < r; ++i) {
    if (terms[i].empty() || terms[i + 1].empty()) continue;
    std::vector<std::vector<Q>> m(terms[i + 1].size(), std::vector<Q>(terms[i].size(), 0));
    for (std::size_t a = 0; a < terms[i + 1].size(); ++a) {
      for (std::size_t b = 0; b < terms[i].size(); ++b) {
        const unsigned big_set = terms[i + 1][a], small_set = terms[i][b];
        if ((small_set & ~big_set) != 0) continue;
        const unsigned added = big_set & ~small_set;
        const int below = std::popcount(small_set & (added - 1));
        m[a][b] = below % 2 == 0 ? 1 : -1;
      }
    }
    ranks[i] = rational_rank(std::move(m));
  }
  std::vector<int> out(r + 1, 0);
  for (int i = 0; i <= r; ++i) {
    const int incoming = i > 0 ? ranks[i - 1] : 0;
    out[i] = static_cast<int>(terms[i].size()) - ranks[i] - incoming;
  }
  return out;
}

// Sum of dim H^index over the box: axis coordinates in [-radius, radius],
// the rest in [0, radius].
inline std::int64_t cech_box_sum(const MonomialIdeal& ideal, const std::vector<int>& axis_vars, int index,
                                 int radius) {
  const int nv = ideal.ring().num_vars();
  std::vector<int> lo(nv, 0), hi(nv, radius);
  for (int v : axis_vars) lo[v] = -radius;
  std::int64_t total = 0;
  for (BoxWalk walk(lo, hi); !walk.done(); walk.next()) total += cech_dims(ideal, axis_vars, walk.point())[index];
  return total;
}

}  // namespace bigrade::oracle
