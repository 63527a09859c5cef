#include <doctest.h>

#include <random>

#include "bigrade/checks.hpp"
#include "bigrade/error.hpp"
#include "bigrade/invariants.hpp"
#include "bigrade/local_cohomology.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bigrade;
using bigrade::test::ideal_of;

namespace {

AxisIdeal q_of(const MonomialIdeal& i) { return AxisIdeal::y_block(i.ring()); }

}  // namespace

TEST_CASE("local cohomology of the generalized CM example") {
  const auto ideal = test::gen_cm_example();
  const auto h1 = lc_report(ideal, q_of(ideal), 1);
  CHECK(h1.finitely_generated);
  CHECK_FALSE(h1.is_zero);
  REQUIRE(h1.total_dim.has_value());
  CHECK(*h1.total_dim == 1);

  const auto h0 = lc_report(ideal, q_of(ideal), 0);
  CHECK(h0.is_zero);
  CHECK(h0.finitely_generated);
  CHECK(h0.total_dim == std::optional<std::int64_t>{0});

  const auto g = generalized_cm(ideal, q_of(ideal));
  CHECK(g.verdict);
  CHECK(g.cd == 2);

  const auto triple = corollary_check(ideal, q_of(ideal));
  CHECK_FALSE(triple.max_depth);
  CHECK_FALSE(triple.seq_cm);
  CHECK_FALSE(triple.cm_wrt_axis);
}

TEST_CASE("local cohomology of the maximal depth example") {
  const auto ideal = test::not_seqcm_example();
  const auto h1 = lc_report(ideal, q_of(ideal), 1);
  CHECK_FALSE(h1.finitely_generated);
  CHECK_FALSE(h1.total_dim.has_value());
  CHECK_FALSE(generalized_cm(ideal, q_of(ideal)).verdict);
  try {
    corollary_check(ideal, q_of(ideal));
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("CM ideals are generalized CM") {
  const auto ideal = ideal_of(1, 2, "y1");
  CHECK(analyze(ideal, q_of(ideal)).cm_wrt_axis);
  CHECK(generalized_cm(ideal, q_of(ideal)).verdict);
  const auto t = corollary_check(ideal, q_of(ideal));
  CHECK(t.max_depth);
  CHECK(t.seq_cm);
  CHECK(t.cm_wrt_axis);
}

TEST_CASE("index and ideal errors") {
  const auto ideal = test::gen_cm_example();
  CHECK_THROWS_AS(lc_report(ideal, q_of(ideal), 5), Error);
  CHECK_THROWS_AS(lc_report(ideal, q_of(ideal), -1), Error);
  const auto unit = MonomialIdeal::unit(ideal.ring());
  try {
    lc_report(unit, q_of(unit), 0);
    FAIL("expected UnitIdeal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnitIdeal);
  }
}

TEST_CASE("growth scans") {
  const auto gen = test::gen_cm_example();
  CHECK(growth_scan(gen, q_of(gen), 1, {1, 2, 3, 4}) == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(growth_scan(gen, q_of(gen), 0, {1, 2, 3, 4}) == std::vector<std::int64_t>{0, 0, 0, 0});

  const auto ex = test::not_seqcm_example();
  const auto dims = growth_scan(ex, q_of(ex), 1, {1, 2, 3, 4});
  for (std::size_t k = 1; k < dims.size(); ++k) CHECK(dims[k] > dims[k - 1]);
}

TEST_CASE("growth scans match brute-force Cech sums") {
  for (const auto& ideal : {test::gen_cm_example(), test::not_seqcm_example(), test::two_planes()}) {
    const auto q = q_of(ideal);
    for (int i = 0; i <= q.size(); ++i) {
      const auto scanned = growth_scan(ideal, q, i, {1, 2});
      CHECK(scanned[0] == oracle::cech_box_sum(ideal, q.vars().indices(), i, 1));
      CHECK(scanned[1] == oracle::cech_box_sum(ideal, q.vars().indices(), i, 2));
    }
  }

  std::mt19937_64 rng(31);
  RandomIdealOptions opts;
  opts.max_block_size = 2;
  for (int trial = 0; trial < 15; ++trial) {
    const auto ideal = random_ideal(rng, opts);
    if (ideal.is_unit()) continue;
    const auto q = q_of(ideal);
    for (int i = 0; i <= q.size(); ++i) {
      const auto scanned = growth_scan(ideal, q, i, {1, 2, 3});
      for (int r = 1; r <= 3; ++r) CHECK(scanned[r - 1] == oracle::cech_box_sum(ideal, q.vars().indices(), i, r));
    }
  }
}

TEST_CASE("finite generation agrees with growth") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ideal = random_ideal(rng);
    if (ideal.is_unit()) continue;
    const auto q = q_of(ideal);
    for (int i = 0; i <= q.size(); ++i) {
      const auto r = lc_report(ideal, q, i);
      const auto dims = growth_scan(ideal, q, i, {4, 5, 6});
      if (r.total_dim) {
        CHECK(dims == std::vector<std::int64_t>(3, *r.total_dim));
      } else {
        CHECK(dims[1] > dims[0]);
        CHECK(dims[2] > dims[1]);
      }
      if (!r.finitely_generated) CHECK_FALSE(r.total_dim.has_value());
    }
  }
}
