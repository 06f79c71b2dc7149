#include <doctest.h>

#include "gomplab/congruence.hpp"
#include "gomplab/fixtures.hpp"
#include "gomplab/gomp_axioms.hpp"
#include "gomplab/term.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gomplab;
using testutil::id;
using testutil::set;

TEST_CASE("terms evaluate on the Boolean algebra") {
  const auto b4 = fixtures::boolean4();
  const auto d = assign_canonical_directoid(b4);
  const Element a = id(b4, "a");
  const Element one = id(b4, "1");
  CHECK(eval_term(d, majority_term(), {{'x', a}, {'y', a}, {'z', one}}) == a);
  CHECK(eval_term(d, maltsev_term(), {{'x', a}, {'y', a}, {'z', one}}) == one);
  CHECK(eval_term(d, regularity_base_term(), {{'x', a}, {'y', a}}) == id(b4, "0"));
  CHECK_THROWS_AS(eval_term(d, majority_term(), {{'x', a}}), UnassignedVariable);
  CHECK(eval_term(d, meet(Term::var('x'), Term::one()), {{'x', a}}) == a);
  CHECK(eval_term(d, comp(Term::zero()), {}) == one);
}

TEST_CASE("term shapes") {
  CHECK(majority_term().to_string() == "(((x v y) ^ (y v z)) ^ (z v x))");
  CHECK(regularity_term_1().to_string().find("v z") != std::string::npos);
}

TEST_CASE("term verifiers on the fixtures") {
  for (const auto& p : {fixtures::boolean4(), fixtures::mo2(), fixtures::chain2()}) {
    const auto d = assign_canonical_directoid(p);
    CHECK(verify_majority(d).passed);
    CHECK(verify_maltsev(d).passed);
    CHECK(verify_regularity_terms(d).passed);
  }
  const auto o6 = assign_canonical_directoid(fixtures::benzene6());
  MESSAGE("benzene ring: Maltsev term " << (verify_maltsev(o6).passed ? "holds" : "fails"));
}

TEST_CASE("a table violating absorption fails the majority identities") {
  // Three-element chain 0 < m < 1 whose join sends (0, m) to the top.
  const Directoid d(3, {0, 2, 2, 2, 1, 2, 2, 2, 2}, {2, 1, 0}, 0, 2);
  const auto r = verify_majority(d);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.condition_tag.empty());
  CHECK(r.witness.size() == 2);
}

TEST_CASE("principal congruences") {
  const auto b4 = fixtures::boolean4();
  const auto d = assign_canonical_directoid(b4);
  const Element a = id(b4, "a");
  CHECK(principal_congruence(d, a, a) == Partition::identity(4));
  const auto theta = principal_congruence(d, id(b4, "0"), a);
  CHECK(theta.block_count() == 2);
  CHECK(theta.class_of(a) == set(b4, {"0", "a"}));
  CHECK(theta.class_of(id(b4, "1")) == set(b4, {"a'", "1"}));

  const auto c2 = assign_canonical_directoid(fixtures::chain2());
  CHECK(principal_congruence(c2, 0, 1) == Partition::total(2));
}

TEST_CASE("congruence lattices of the fixtures") {
  const auto c2 = congruence_lattice(assign_canonical_directoid(fixtures::chain2()));
  CHECK(c2.size() == 2);
  const auto b4 = congruence_lattice(assign_canonical_directoid(fixtures::boolean4()));
  CHECK(b4.size() == 4);
  const auto mo2 = assign_canonical_directoid(fixtures::mo2());
  std::vector<std::vector<int>> maps;
  for (const auto& q : congruence_lattice(mo2)) maps.push_back(q.block_map());
  CHECK(maps == oracle::congruences(mo2));
}

TEST_CASE("congruence lattices match the partition filter for n <= 6") {
  for (const auto& p : testutil::corpus(6)) {
    for (const auto& d : enumerate_assignments(p, 50)) {
      std::vector<std::vector<int>> maps;
      for (const auto& q : congruence_lattice(d)) maps.push_back(q.block_map());
      CHECK(maps == oracle::congruences(d));
    }
  }
  for (int n = 2; n <= 4; ++n) {
    testutil::for_each_bounded_structure(n, [](const OrthoPoset& p) {
      const auto d = assign_canonical_directoid(p);
      std::vector<std::vector<int>> maps;
      for (const auto& q : congruence_lattice(d)) maps.push_back(q.block_map());
      REQUIRE(maps == oracle::congruences(d));
    });
  }
}

TEST_CASE("principal congruences are minimal") {
  for (const auto& p : testutil::corpus(6)) {
    const auto d = assign_canonical_directoid(p);
    const auto all = oracle::congruences(d);
    for (Element a = 0; a < d.size(); ++a) {
      for (Element b = 0; b < d.size(); ++b) {
        const auto theta = principal_congruence(d, a, b);
        CHECK(theta.related(a, b));
        CHECK(is_congruence(d, theta));
        for (const auto& q : all) {
          if (q[a] != q[b]) continue;
          for (Element x = 0; x < d.size(); ++x) {
            for (Element y = 0; y < d.size(); ++y) {
              if (theta.related(x, y)) CHECK(q[x] == q[y]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("direct properties on the fixtures") {
  for (const auto& p : {fixtures::boolean4(), fixtures::mo2(), fixtures::chain2()}) {
    const auto props = direct_congruence_properties(assign_canonical_directoid(p));
    CHECK(props.permutable);
    CHECK(props.distributive);
    CHECK(props.regular);
  }
}

TEST_CASE("partition operations") {
  const Partition a({0, 0, 1, 1});
  const Partition b({0, 1, 0, 1});
  CHECK(meet(a, b) == Partition::identity(4));
  CHECK(equivalence_join(a, b) == Partition::total(4));
  CHECK(permutes(a, b));
  const Partition c({0, 0, 1, 2});
  const Partition e({0, 1, 1, 2});
  CHECK_FALSE(permutes(c, e));
  CHECK(Partition({3, 3, 7, 3}) == Partition({0, 0, 1, 0}));
}

TEST_CASE("size guard") {
  const int n = 13;
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) table[x * n + y] = std::max(x, y);
  }
  std::vector<Element> comp(n);
  for (Element x = 0; x < n; ++x) comp[x] = n - 1 - x;
  CHECK_THROWS_AS(congruence_lattice(Directoid(n, table, comp, 0, n - 1)), std::length_error);
}

TEST_CASE("terms and direct checks agree on GOMP directoids with n <= 6") {
  for (const auto& p : testutil::corpus(6)) {
    if (!is_gomp(p).passed) continue;
    for (const auto& d : enumerate_assignments(p, 100)) {
      const auto props = direct_congruence_properties(d);
      CHECK(verify_majority(d).passed);
      CHECK(props.distributive);
      if (!in_variety_W(d).passed) continue;
      CHECK(verify_maltsev(d).passed);
      CHECK(verify_regularity_terms(d).passed);
      CHECK(props.permutable);
      CHECK(props.regular);
    }
  }
}

TEST_CASE("partial Maltsev operation") {
  const auto b4 = fixtures::boolean4();
  const auto d = assign_canonical_directoid(b4);
  const Element a = id(b4, "a");
  const Element one = id(b4, "1");
  CHECK(partial_maltsev_eval(b4, d, a, a, one) == one);
  CHECK(partial_maltsev_eval(b4, d, a, one, one) == a);
}

TEST_CASE("partial Maltsev identities hold on GOMPs wherever defined") {
  for (const auto& p : testutil::corpus(8)) {
    if (!is_gomp(p).passed) continue;
    const auto d = assign_canonical_directoid(p);
    for (Element x = 0; x < p.size(); ++x) {
      for (Element z = 0; z < p.size(); ++z) {
        if (auto v = partial_maltsev_eval(p, d, x, x, z)) CHECK(*v == z);
        if (auto v = partial_maltsev_eval(p, d, x, z, z)) CHECK(*v == x);
      }
    }
  }
}

TEST_CASE("the partial Maltsev operation can be undefined") {
  // Found by scanning the enumerated orthoposets for a triple whose suprema
  // do not all exist.
  bool found = false;
  for (const auto& p : testutil::corpus(10)) {
    const auto d = assign_canonical_directoid(p);
    for (Element x = 0; x < p.size() && !found; ++x) {
      for (Element y = 0; y < p.size() && !found; ++y) {
        for (Element z = 0; z < p.size() && !found; ++z) {
          if (partial_maltsev_eval(p, d, x, y, z)) continue;
          found = true;
          const ElementSet inner = lower_cone(p, ElementSet{p.comp(y), d.join(x, y)});
          const ElementSet other = lower_cone(p, ElementSet{p.comp(y), d.join(y, z)});
          ElementSet a = inner;
          a.insert(z);
          ElementSet b = other;
          b.insert(x);
          CHECK((!supremum(p, a) || !supremum(p, b)));
        }
      }
    }
  }
  CHECK(found);
}

TEST_CASE("frozen fixture where the partial Maltsev operation is undefined") {
  // Ten elements: atoms a, b, c, d; each of a, b lies below c' and d', each
  // of c, d below a' and b'. Found by the scan above.
  const std::vector<std::string> names{"0", "a", "b", "c", "d", "c'", "d'", "a'", "b'", "1"};
  const Relation covers{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6},
                        {3, 7}, {3, 8}, {4, 7}, {4, 8}, {5, 9}, {6, 9}, {7, 9}, {8, 9}};
  const auto p = OrthoPoset::from_relation(10, covers, {9, 7, 8, 5, 6, 3, 4, 1, 2, 0}, names);
  REQUIRE(is_orthoposet(p).passed);
  CHECK_FALSE(is_lattice(p));
  const auto d = assign_canonical_directoid(p);
  const Element a = id(p, "a");
  const Element b = id(p, "b");
  // x v L(y', y join z) with y = 0 reduces to the supremum of a and b.
  CHECK(minimal_elements(p, upper_cone(p, ElementSet{a, b})) == set(p, {"c'", "d'"}));
  CHECK_FALSE(partial_maltsev_eval(p, d, a, p.bottom(), b).has_value());
}
