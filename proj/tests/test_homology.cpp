#include <doctest.h>

#include <random>

#include "bigrade/checks.hpp"
#include "bigrade/error.hpp"
#include "bigrade/homology.hpp"
#include "bigrade/rank.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bigrade;
using bigrade::test::ideal_of;

namespace {

Subquotient cyclic(int m, int n, const std::string& gens) { return Subquotient::cyclic(ideal_of(m, n, gens)); }

AxisIdeal everything(const Subquotient& module) { return AxisIdeal::all(module.ring()); }

}  // namespace

TEST_CASE("rank") {
  IntMatrix a(3, 3);
  a(0, 0) = 1, a(0, 1) = 2, a(0, 2) = 3;
  a(1, 0) = 2, a(1, 1) = 4, a(1, 2) = 6;
  a(2, 0) = 1, a(2, 1) = 0, a(2, 2) = 1;
  CHECK(rank(a, 0) == 2);
  CHECK(rank(a, 2) == 1);

  IntMatrix b(2, 2);
  b(0, 0) = 1, b(0, 1) = 1;
  b(1, 0) = 1, b(1, 1) = -1;
  CHECK(rank(b, 0) == 2);
  CHECK(rank(b, 2) == 1);
  CHECK(rank(IntMatrix(0, 4), 0) == 0);

  // Entries large enough to overflow 64-bit Bareiss products.
  IntMatrix big(3, 3);
  const std::int64_t huge = std::int64_t{1} << 40;
  big(0, 0) = huge, big(0, 1) = huge + 1, big(0, 2) = 3;
  big(1, 0) = huge - 1, big(1, 1) = huge, big(1, 2) = 5;
  big(2, 0) = 2 * huge - 1, big(2, 1) = 2 * huge + 1, big(2, 2) = 8;
  CHECK(rank(big, 0) == 2);
}

TEST_CASE("fine pieces") {
  const auto ring = RingSpec::make(1, 1);
  const auto module = Subquotient::cyclic(ideal_of(1, 1, "x1*y1"));
  CHECK(fine_piece(module, std::vector<int>{1, 1}) == 0);
  CHECK(fine_piece(module, std::vector<int>{1, 0}) == 1);
  const Subquotient part(ideal_of(1, 1, "x1"), ideal_of(1, 1, "x1*y1"));
  CHECK(fine_piece(part, std::vector<int>{1, 2}) == 0);
  CHECK(fine_piece(part, std::vector<int>{1, 0}) == 1);
  CHECK(fine_piece(part, std::vector<int>{0, 0}) == 0);
  CHECK_THROWS_AS(Subquotient(ideal_of(1, 1, "x1*y1"), ideal_of(1, 1, "x1")), Error);
  (void)ring;
}

TEST_CASE("Koszul homology") {
  const auto point = cyclic(0, 1, "y1");
  CHECK(koszul_homology_dim(point, everything(point), 1, std::vector<int>{1}) == 1);

  const auto free = cyclic(0, 2, "");
  for (int j = 1; j <= 2; ++j)
    for (const auto& b : {std::vector<int>{0, 0}, std::vector<int>{1, 1}, std::vector<int>{2, 1}})
      CHECK(koszul_homology_dim(free, everything(free), j, b) == 0);

  const auto cross = cyclic(0, 2, "y1*y2");
  CHECK(koszul_homology_dim(cross, everything(cross), 1, std::vector<int>{1, 1}) == 1);
  CHECK(koszul_homology(cross, everything(cross), std::vector<int>{1, 1}) == std::vector<int>{0, 1, 0});
}

TEST_CASE("Betti numbers and projective dimension") {
  const auto point = cyclic(0, 1, "y1");
  const auto t1 = betti_and_projdim(point, everything(point));
  CHECK(t1.projdim == 1);
  bool found = false;
  for (const auto& e : t1.entries)
    if (e.index == 1 && e.degree == std::vector<int>{1}) found = e.value == 1;
  CHECK(found);

  CHECK(betti_and_projdim(cyclic(0, 2, "y1, y2"), AxisIdeal::all(RingSpec::make(0, 2))).projdim == 2);
  const auto cross = cyclic(0, 2, "y1*y2");
  CHECK(betti_and_projdim(cross, everything(cross)).projdim == 1);
  CHECK(depth_module(cross, everything(cross)) == 1);
  CHECK(depth_module(cyclic(0, 2, ""), AxisIdeal::all(RingSpec::make(0, 2))) == 2);
  CHECK(depth_module(cyclic(0, 2, "y1, y2"), AxisIdeal::all(RingSpec::make(0, 2))) == 0);

  const auto unit = Subquotient::cyclic(MonomialIdeal::unit(RingSpec::make(0, 2)));
  try {
    betti_and_projdim(unit, everything(unit));
    FAIL("expected ZeroModule");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroModule);
  }

  // y-block Koszul over a module not finite over K[y] is refused.
  const auto mixed = cyclic(1, 1, "x1*y1");
  CHECK_THROWS_AS(betti_and_projdim(mixed, AxisIdeal::y_block(mixed.ring())), Error);
}

TEST_CASE("Krull dimension of subquotients") {
  CHECK(dim_module(Subquotient::cyclic(MonomialIdeal::zero(RingSpec::make(2, 1)))) == 3);
  CHECK(dim_module(Subquotient(ideal_of(1, 1, "x1"), ideal_of(1, 1, "x1*y1"))) == 1);
  CHECK(dim_module(Subquotient::cyclic(test::two_planes())) == 2);
}

TEST_CASE("Cech pieces") {
  const auto field = cyclic(0, 2, "y1, y2");
  CHECK(cech_piece_dim(field, everything(field), 0, std::vector<int>{0, 0}) == 1);
  CHECK(cech_piece_dim(field, everything(field), 0, std::vector<int>{1, 0}) == 0);

  const auto module = Subquotient::cyclic(test::gen_cm_example());
  const auto q = AxisIdeal::y_block(module.ring());
  std::int64_t h0 = 0, h1 = 0;
  std::vector<int> one_degree;
  for (const auto& c : cech_representatives(module, q)) {
    h0 += cech_piece_dim(module, q, 0, c);
    const int d = cech_piece_dim(module, q, 1, c);
    if (d > 0 && c == std::vector<int>{0, 0, 0, 0, 0, 0}) one_degree = c;
    h1 += d;
  }
  CHECK(h0 == 0);
  CHECK(h1 == 1);
  CHECK(one_degree == std::vector<int>{0, 0, 0, 0, 0, 0});
  // Negative coordinates off the axis give nothing.
  CHECK(cech_piece_dim(module, q, 1, std::vector<int>{-1, 0, 0, 0, 0, 0}) == 0);
}

TEST_CASE("Auslander-Buchsbaum and Koszul/Cech agreement") {
  std::mt19937_64 rng(17);
  RandomIdealOptions opts;
  opts.max_block_size = 2;
  for (int trial = 0; trial < 60; ++trial) {
    const auto ideal = random_ideal(rng, opts);
    if (ideal.is_unit()) continue;
    const auto module = Subquotient::cyclic(ideal);
    const auto all = AxisIdeal::all(ideal.ring());
    const auto table = betti_and_projdim(module, all);
    const int depth = depth_module(module, all);
    CHECK(depth + table.projdim == all.size());

    // Highest nonvanishing Koszul homology over the certified box.
    int top_koszul = 0;
    std::vector<int> lo(table.certified_box.size(), 0);
    for (BoxWalk walk(lo, table.certified_box); !walk.done(); walk.next()) {
      const auto h = koszul_homology(module, all, walk.point());
      for (int j = 0; j < static_cast<int>(h.size()); ++j)
        if (h[j] != 0) top_koszul = std::max(top_koszul, j);
    }
    CHECK(top_koszul == table.projdim);

    int first_cech = -1;
    for (const auto& c : cech_representatives(module, all)) {
      const auto h = cech_cohomology(module, all, c);
      for (int i = 0; i < static_cast<int>(h.size()); ++i)
        if (h[i] != 0 && (first_cech < 0 || i < first_cech)) first_cech = i;
    }
    CHECK(first_cech == depth);
  }
}

TEST_CASE("certified Betti box survives enlargement") {
  std::mt19937_64 rng(19);
  RandomIdealOptions opts;
  opts.max_block_size = 2;
  for (int trial = 0; trial < 40; ++trial) {
    const auto ideal = random_ideal(rng, opts);
    if (ideal.is_unit()) continue;
    const auto module = Subquotient::cyclic(ideal);
    const auto all = AxisIdeal::all(ideal.ring());
    const auto table = betti_and_projdim(module, all);
    auto wider = table.certified_box;
    for (auto& w : wider) w += 1;
    std::vector<int> lo(wider.size(), 0);
    for (BoxWalk walk(lo, wider); !walk.done(); walk.next()) {
      bool inside = true;
      for (std::size_t k = 0; k < wider.size(); ++k) inside = inside && walk.point()[k] <= table.certified_box[k];
      if (inside) continue;
      for (int h : koszul_homology(module, all, walk.point())) CHECK(h == 0);
    }
  }
}

TEST_CASE("Cech pieces depend only on the capped degree class") {
  std::mt19937_64 rng(23);
  RandomIdealOptions opts;
  opts.max_block_size = 2;
  for (int trial = 0; trial < 40; ++trial) {
    const auto ideal = random_ideal(rng, opts);
    if (ideal.is_unit()) continue;
    const auto module = Subquotient::cyclic(ideal);
    const auto q = AxisIdeal::y_block(ideal.ring());
    const int nv = ideal.ring().num_vars();
    for (int sample = 0; sample < 20; ++sample) {
      std::vector<int> c(nv);
      for (int v = 0; v < nv; ++v) {
        const int spread = static_cast<int>(rng() % 11);
        c[v] = q.vars().contains(v) ? spread - 5 : spread;
      }
      const auto cls = cech_class_of(module, q, c);
      CHECK(cech_cohomology(module, q, c) == cech_cohomology(module, q, cls));
    }
  }
}

TEST_CASE("Cech pieces match the independent oracle") {
  std::mt19937_64 rng(29);
  RandomIdealOptions opts;
  opts.max_block_size = 2;
  for (int trial = 0; trial < 30; ++trial) {
    const auto ideal = random_ideal(rng, opts);
    if (ideal.is_unit()) continue;
    const auto module = Subquotient::cyclic(ideal);
    const auto q = AxisIdeal::y_block(ideal.ring());
    for (const auto& c : cech_representatives(module, q))
      CHECK(cech_cohomology(module, q, c) == oracle::cech_dims(ideal, q.vars().indices(), c));
  }
}
