#include <doctest.h>


#include "gomplab/directoid.hpp"
#include "gomplab/fixtures.hpp"
#include "gomplab/gomp_axioms.hpp"
#include "gomplab/theorem_suite.hpp"
#include "test_util.hpp"

using namespace gomplab;
using testutil::id;

TEST_CASE("canonical assignment") {
  const auto b4 = fixtures::boolean4();
  const auto d = assign_canonical_directoid(b4);
  CHECK(d.join(id(b4, "a"), id(b4, "a'")) == id(b4, "1"));
  const auto o6 = fixtures::benzene6();
  const auto d6 = assign_canonical_directoid(o6);
  CHECK(d6.join(id(o6, "a"), id(o6, "b")) == id(o6, "1"));
  for (const auto& p : testutil::corpus(8)) {
    const auto dp = assign_canonical_directoid(p);
    CHECK(is_assigned_to(dp, p));
    CHECK(is_directoid(dp).passed);
    for (Element x = 0; x < p.size(); ++x) {
      CHECK(dp.join(x, p.bottom()) == x);
      CHECK(dp.join(x, p.top()) == p.top());
    }
  }
}

TEST_CASE("the canonical choice is the least-id minimal upper bound") {
  // Two atoms under two incomparable coatoms: U(1,2) has minimal elements 3, 4.
  const auto p = OrthoPoset::from_relation(
      6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}, {5, 3, 4, 1, 2, 0});
  const auto d = assign_canonical_directoid(p);
  CHECK(d.join(1, 2) == 3);
  CHECK(d.join(2, 1) == 3);
  // Only the pair (1, 2) has a choice: U(1, 2) = {3, 4, 5}.
  CHECK(assignment_count(p) == 3);
}

TEST_CASE("assignment counts") {
  CHECK(assignment_count(fixtures::chain2()) == 1);
  CHECK(assignment_count(fixtures::boolean4()) == 1);
  CHECK(assignment_count(fixtures::mo2()) == 1);
  CHECK(enumerate_assignments(fixtures::chain2(), 10).size() == 1);
  CHECK(enumerate_assignments(fixtures::mo2(), 10).size() == 1);
  CHECK_THROWS(enumerate_assignments(fixtures::mo2(), 0));
}

TEST_CASE("enumerated assignments are distinct, assigned, and start canonical") {
  for (const auto& p : testutil::corpus(8)) {
    const auto total = assignment_count(p, 5000);
    const auto all = enumerate_assignments(p, 5000);
    CHECK(all.size() == std::min<std::uint64_t>(total, 5000));
    REQUIRE_FALSE(all.empty());
    CHECK(all.front() == assign_canonical_directoid(p));
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(is_assigned_to(all[i], p));
      if (i > 0) CHECK_FALSE(all[i] == all[i - 1]);
    }
    const auto sampled = sample_assignments(p, 20);
    CHECK(sampled.front() == all.front());
    for (const auto& d : sampled) CHECK(is_assigned_to(d, p));
    CHECK(sample_assignments(p, 20) == sampled);
  }
}

TEST_CASE("directoid axioms") {
  CHECK(is_directoid(assign_canonical_directoid(fixtures::chain2())).passed);
  std::vector<Element> table{0, 1, 2, 1, 1, 2, 1, 2, 2};
  const Directoid bad(3, table, {2, 1, 0}, 0, 2);
  const auto r = is_directoid(bad);
  CHECK_FALSE(r.passed);
  CHECK(r.condition_tag == "commutative");
  CHECK(r.witness == std::vector<Element>{0, 2});
}

TEST_CASE("induced order recovers the poset") {
  for (const auto& p : testutil::corpus(8)) {
    const auto d = assign_canonical_directoid(p);
    const auto rep = induced_order(d);
    CHECK(rep.is_poset);
    for (Element x = 0; x < p.size(); ++x) {
      for (Element y = 0; y < p.size(); ++y) CHECK(rep.relation[x * p.size() + y] == p.leq(x, y));
    }
    const auto q = induced_poset(d);
    REQUIRE(q.has_value());
    for (Element x = 0; x < p.size(); ++x) CHECK(q->down(x) == p.down(x));
  }
  // Constant-top table: x join x = x fails, so the relation is not reflexive.
  const Directoid top(3, std::vector<Element>(9, 2), {2, 1, 0}, 0, 2);
  CHECK_FALSE(induced_order(top).is_poset);
  CHECK_FALSE(induced_poset(top).has_value());
}

TEST_CASE("characterization report on the fixtures") {
  const auto b4 = assign_canonical_directoid(fixtures::boolean4());
  CHECK(theorem_characterization_report(b4).all_pass());
  CHECK(in_class_A(b4).passed);
  CHECK(in_variety_W(b4).passed);
  CHECK(theorem_characterization_report(assign_canonical_directoid(fixtures::chain2())).all_pass());
  CHECK(in_variety_W(assign_canonical_directoid(fixtures::mo2())).passed);

  const auto o6 = assign_canonical_directoid(fixtures::benzene6());
  const auto rep = theorem_characterization_report(o6);
  CHECK_FALSE(rep.condition_i.passed);
  CHECK(rep.condition_ii.passed);
  CHECK(rep.condition_iii.passed);
  CHECK(rep.condition_iv.passed);
  CHECK_FALSE(in_class_A(o6).passed);
  const auto w = in_variety_W(o6);
  CHECK_FALSE(w.passed);
  CHECK(w.witness.size() == 3);
}

TEST_CASE("GOMP iff class A for every assignment with n <= 7") {
  for (const auto& p : testutil::corpus(7)) {
    const bool gomp = is_gomp(p).passed;
    for (const auto& d : enumerate_assignments(p, 1000)) CHECK(in_class_A(d).passed == gomp);
  }
}

TEST_CASE("meet absorption on directoids assigned to GOMPs") {
  for (const auto& p : testutil::corpus(8)) {
    if (!is_gomp(p).passed) continue;
    for (const auto& d : enumerate_assignments(p, 200)) {
      for (Element x = 0; x < d.size(); ++x) {
        for (Element y = 0; y < d.size(); ++y) {
          CHECK(d.meet(d.join(x, y), x) == x);
          CHECK(d.join(d.meet(x, y), x) == x);
        }
      }
    }
  }
}

TEST_CASE("cone characterization") {
  const auto b4 = fixtures::boolean4();
  CHECK(cone_characterization_check(b4, assign_canonical_directoid(b4)).passed);
  const auto mo2 = fixtures::mo2();
  const auto d = assign_canonical_directoid(mo2);
  CHECK(cone_characterization_check(mo2, d).passed);
  ElementSet image;
  const Element a = id(mo2, "a");
  const Element b = id(mo2, "b");
  for (Element x = 0; x < mo2.size(); ++x) image.insert(d.meet(d.meet(a, x), d.meet(b, x)));
  CHECK(image == lower_cone(mo2, ElementSet{a, b}));
  for (const auto& p : testutil::corpus(8)) {
    if (!is_gomp(p).passed) continue;
    CHECK(cone_characterization_check(p, assign_canonical_directoid(p)).passed);
  }
}

TEST_CASE("W is contained in A on all commutative idempotent algebras with n <= 4") {
  std::size_t members = 0;
  std::size_t algebras = 0;
  for (int n = 1; n <= 4; ++n) {
    for_each_commutative_idempotent_algebra(n, [&](const Directoid& d) {
      ++algebras;
      if (!in_variety_W(d).passed) return;
      ++members;
      CHECK(in_class_A(d).passed);
    });
  }
  CHECK(members == 53);
  MESSAGE(members << " members of W among " << algebras << " algebras");
}

TEST_CASE("W is contained in A on directoids assigned to bounded posets with n <= 6") {
  std::size_t members = 0;
  for (int n = 2; n <= 6; ++n) {
    testutil::for_each_bounded_structure(n, [&](const OrthoPoset& p) {
      for (Element x = 0; x < n; ++x) {
        if (p.comp(p.comp(x)) != x) return;
      }
      for (const auto& d : enumerate_assignments(p, 100)) {
        if (!in_variety_W(d).passed) continue;
        ++members;
        CHECK(in_class_A(d).passed);
      }
    });
  }
  MESSAGE(members << " members of W");
}
