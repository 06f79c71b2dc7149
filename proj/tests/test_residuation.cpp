#include <doctest.h>

#include "gomplab/fixtures.hpp"
#include "gomplab/gomp_axioms.hpp"
#include "gomplab/residuation.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gomplab;
using testutil::id;
using testutil::set;

TEST_CASE("R tables for the GOMP construction") {
  const auto b4 = fixtures::boolean4();
  const auto ops = build_R_gomp(b4);
  const Element a = id(b4, "a");
  CHECK(ops.R(a, b4.bottom()) == set(b4, {"0", "a'"}));
  CHECK(ops.R(b4.comp(b4.comp(a)), a) == b4.universe());
  CHECK_FALSE(ops.conjunction.has_value());
  CHECK(matches_gomp_formula(ops));

  const auto mo2 = fixtures::mo2();
  CHECK(build_R_gomp(mo2).R(id(mo2, "a"), id(mo2, "b")) == mo2.universe());
}

TEST_CASE("M tables for the strong construction") {
  const auto b4 = fixtures::boolean4();
  const auto ops = build_MR_strong(b4);
  const Element a = id(b4, "a");
  CHECK(ops.M(a, a) == set(b4, {"0", "a"}));
  CHECK(ops.M(id(b4, "a'"), a) == set(b4, {"0"}));
  CHECK(matches_strong_formula(ops));

  const auto mo2 = fixtures::mo2();
  CHECK(build_MR_strong(mo2).M(id(mo2, "a"), id(mo2, "b")) == set(mo2, {"0", "b"}));
}

TEST_CASE("conditional operator residuation") {
  CHECK(is_conditionally_operator_residuated(build_R_gomp(fixtures::boolean4())).passed);
  CHECK(is_conditionally_operator_residuated(build_R_gomp(fixtures::mo2())).passed);
}

TEST_CASE("a constant R on the two-element chain is not residuated") {
  const auto c2 = fixtures::chain2();
  ResiduationOperators ops{c2, std::vector<ElementSet>(4, set(c2, {"0"})), std::nullopt};
  const auto r = is_conditionally_operator_residuated(ops);
  CHECK_FALSE(r.passed);
  const auto iv = conditional_residuation_clause(ops, "iv");
  CHECK_FALSE(iv.passed);
  CHECK(iv.condition_tag == "iv");
  // The clause is violated at x = 1 as well as at x = 0.
  const Element one = id(c2, "1");
  CHECK(ops.R(c2.comp(c2.comp(one)), one) != c2.universe());
}

TEST_CASE("operator divisibility") {
  CHECK(satisfies_operator_divisibility(build_R_gomp(fixtures::boolean4())).passed);
  const auto o6 = fixtures::benzene6();
  const auto ops = build_R_gomp(o6);
  CHECK(ops.R(id(o6, "b'"), id(o6, "a")) == o6.universe());
  const auto r = satisfies_operator_divisibility(ops);
  CHECK_FALSE(r.passed);
  CHECK(r.condition_tag == "divisibility");
  CHECK(r.witness == testutil::ids(o6, {"a", "b'"}));
}

TEST_CASE("operator residuation for the strong construction") {
  CHECK(is_operator_residuated(build_MR_strong(fixtures::boolean4())).passed);
  CHECK(is_operator_residuated(build_MR_strong(fixtures::mo2())).passed);
  const auto o6 = build_MR_strong(fixtures::benzene6());
  const bool full = is_operator_residuated(o6).passed && satisfies_operator_divisibility(o6).passed;
  CHECK_FALSE(full);
  CHECK_THROWS_AS(is_operator_residuated(build_R_gomp(fixtures::boolean4())), std::logic_error);
}

TEST_CASE("round trip of the four implications on the fixtures") {
  CHECK(verify_residuation_theorems(fixtures::boolean4()).passed);
  CHECK(verify_residuation_theorems(fixtures::benzene6()).passed);
  CHECK(verify_residuation_theorems(fixtures::chain2()).passed);
  CHECK(verify_residuation_theorems(fixtures::mo2()).passed);
}

TEST_CASE("the implications hold on every enumerated orthoposet") {
  for (const auto& p : testutil::corpus(8)) {
    CHECK(verify_residuation_theorems(p).passed);
    const auto ops = build_R_gomp(p);
    const bool residuated = is_conditionally_operator_residuated(ops).passed &&
                            satisfies_operator_divisibility(ops).passed;
    CHECK(residuated == oracle::is_gomp(p));
  }
}

TEST_CASE("R entries are lower cones") {
  for (const auto& p : testutil::corpus(8)) {
    const auto ops = build_R_gomp(p);
    for (ElementSet r : ops.implication) {
      CHECK(lower_cone(p, upper_cone(p, r)) == r);
    }
  }
}

TEST_CASE("a non-antitone unary map fails with its own tag") {
  // A three-element chain with the identity map, which preserves the order.
  const auto p = OrthoPoset::from_relation(3, {{0, 1}, {1, 2}}, {0, 1, 2});
  const auto ops = build_R_gomp(p);
  const auto r = is_conditionally_operator_residuated(ops);
  CHECK_FALSE(r.passed);
  CHECK(r.condition_tag == "antitone");
}

TEST_CASE("commutativity of M is recorded per structure") {
  CHECK(conjunction_is_commutative(build_MR_strong(fixtures::boolean4())));
  std::size_t commutative = 0;
  const auto all = testutil::corpus(8);
  for (const auto& p : all) commutative += conjunction_is_commutative(build_MR_strong(p));
  MESSAGE("M commutative on " << commutative << " of " << all.size() << " orthoposets");
}

TEST_CASE("the implications hold on every bounded structure with n <= 5 and any unary map") {
  std::size_t structures = 0;
  for (int n = 2; n <= 5; ++n) {
    testutil::for_each_bounded_structure(n, [&](const OrthoPoset& p) {
      ++structures;
      const auto r = verify_residuation_theorems(p);
      REQUIRE_MESSAGE(r.passed, r.condition_tag);
    });
  }
  MESSAGE(structures << " structures");
}
