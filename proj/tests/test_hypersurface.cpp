#include <doctest.h>

#include "bigrade/error.hpp"
#include "bigrade/hypersurface.hpp"
#include "bigrade/text_format.hpp"
#include "support.hpp"

using namespace bigrade;
using bigrade::test::mono;

TEST_CASE("factor profiles") {
  const FactorProfile p({{1, 0}, {1, 1}, {0, 1}, {2, 0}, {3, 2}});
  CHECK(p.alpha1() == 3);
  CHECK(p.alpha2() == 4);
  CHECK(p.beta1() == 3);
  CHECK(p.beta2() == 1);
  CHECK(p.a() == 7);
  CHECK(p.b() == 4);
  try {
    FactorProfile(std::vector<Bidegree>{{0, 0}});
    FAIL("expected BadProfile");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadProfile);
  }
  CHECK_THROWS_AS(FactorProfile(std::vector<Bidegree>{}), Error);
}

TEST_CASE("classification") {
  const auto ring = RingSpec::make(2, 3);
  const auto a = classify(FactorProfile({{1, 0}, {1, 1}, {0, 1}}), ring);
  CHECK(a.case_label == CaseLabel::A);
  CHECK(a.maximal_depth);
  CHECK(a.grade_q == 2);
  CHECK(a.mgrade_q == 2);

  const auto none = classify(FactorProfile({{1, 1}}), RingSpec::make(2, 2));
  CHECK(none.case_label == CaseLabel::None);
  CHECK_FALSE(none.maximal_depth);
  CHECK(none.grade_q == 1);
  CHECK(none.mgrade_q == 2);

  const auto c = classify(FactorProfile({{2, 0}}), ring);
  CHECK(c.case_label == CaseLabel::C);
  CHECK(c.maximal_depth);
  CHECK(c.grade_q == 3);
  CHECK(c.mgrade_q == 3);

  const auto b = classify(FactorProfile({{1, 1}, {0, 2}}), ring);
  CHECK(b.case_label == CaseLabel::B);
  CHECK(b.maximal_depth);

  for (auto bad : {RingSpec::make(0, 2), RingSpec::make(2, 0)}) {
    try {
      classify(FactorProfile({{1, 1}}), bad);
      FAIL("expected BadRing");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadRing);
    }
  }
}

TEST_CASE("monomial cross-check") {
  const auto ring = RingSpec::make(2, 2);
  const auto f = mono(2, 2, "x1*y1");
  const auto profile = monomial_profile(f, ring);
  CHECK(profile.factors() == std::vector<Bidegree>{{0, 1}, {1, 0}});
  CHECK(classify(profile, ring).case_label == CaseLabel::C);
  CHECK(monomial_crosscheck(f, ring));

  const auto xx = mono(2, 2, "x1*x2");
  const auto v = classify(monomial_profile(xx, ring), ring);
  CHECK(v.grade_q == 2);
  CHECK(v.mgrade_q == 2);
  CHECK(monomial_crosscheck(xx, ring));

  const auto yy = mono(2, 2, "y1*y2");
  CHECK(classify(monomial_profile(yy, ring), ring).grade_q == 1);
  CHECK(monomial_crosscheck(yy, ring));
  CHECK(monomial_crosscheck(mono(2, 2, "x1^3*y2^2"), ring));
  CHECK_THROWS_AS(monomial_profile(Monomial::one(4), ring), Error);
}

TEST_CASE("profile text") {
  const auto parsed = parse_profile_text("factors: (1,0) (1,1) x1 y2^3");
  CHECK(parsed.profile.factors().size() == 4);
  CHECK(parsed.profile.alpha1() == 2);
  CHECK(parsed.profile.beta2() == 3);
  CHECK_FALSE(parsed.ring.has_value());
  const auto with_ring = parse_profile_text("ring 2 3\nfactors: (1,1)\n");
  REQUIRE(with_ring.ring.has_value());
  CHECK(with_ring.ring->n == 3);
  CHECK_THROWS_AS(parse_profile_text("factors: (1,"), ParseError);
  CHECK_THROWS_AS(parse_profile_text("factors: (0,0)"), Error);
}
