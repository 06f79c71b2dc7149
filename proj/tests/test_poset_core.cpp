#include <doctest.h>

#include "gomplab/fixtures.hpp"
#include "gomplab/ortho_poset.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gomplab;
using testutil::id;
using testutil::set;

TEST_CASE("cones on the Boolean algebra") {
  const auto b4 = fixtures::boolean4();
  CHECK(lower_cone(b4, set(b4, {"a", "a'"})) == set(b4, {"0"}));
  CHECK(lower_cone(b4, {}) == b4.universe());
  CHECK(lower_cone(b4, set(b4, {"1"})) == b4.universe());
  CHECK(upper_cone(b4, set(b4, {"0"})) == b4.universe());
  CHECK(upper_cone(b4, set(b4, {"a"})) == set(b4, {"a", "1"}));
}

TEST_CASE("upper cone of two atoms of the benzene ring is the top") {
  const auto o6 = fixtures::benzene6();
  CHECK(upper_cone(o6, set(o6, {"a", "b"})) == set(o6, {"1"}));
}

TEST_CASE("cones match the definition on every bounded structure with n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    testutil::for_each_bounded_structure(n, [](const OrthoPoset& p) {
      if (p.comp(0) != 0) return;  // the unary map does not affect cones
      for (ElementSet a : oracle::all_subsets(p.size())) {
        REQUIRE(lower_cone(p, a) == oracle::lower(p, a));
        REQUIRE(upper_cone(p, a) == oracle::upper(p, a));
      }
    });
  }
}

TEST_CASE("cones are antitone and Galois closed") {
  for (const auto& p : testutil::corpus(8)) {
    const auto subsets = oracle::all_subsets(p.size());
    for (ElementSet a : subsets) {
      const ElementSet la = lower_cone(p, a);
      const ElementSet ua = upper_cone(p, a);
      CHECK(lower_cone(p, upper_cone(p, la)) == la);
      CHECK(upper_cone(p, lower_cone(p, ua)) == ua);
      for (Element x = 0; x < p.size(); ++x) {
        ElementSet b = a;
        b.insert(x);
        CHECK(lower_cone(p, b).is_subset_of(la));
        CHECK(upper_cone(p, b).is_subset_of(ua));
      }
    }
    for (Element x = 0; x < p.size(); ++x) {
      CHECK(p.down(x).contains(x));
      CHECK(p.up(x).contains(x));
    }
  }
}

TEST_CASE("orthoposet axioms on the fixtures") {
  CHECK(is_orthoposet(fixtures::boolean4()).passed);
  CHECK(is_orthoposet(fixtures::benzene6()).passed);
  CHECK(is_orthoposet(fixtures::mo2()).passed);
  CHECK(is_orthoposet(fixtures::chain2()).passed);

  const auto c2 = fixtures::chain2_identity();
  const auto r = is_orthoposet(c2);
  CHECK_FALSE(r.passed);
  CHECK(r.condition_tag == "complement_upper");
  CHECK(r.witness == std::vector<Element>{0});
  REQUIRE(r.witness_sets.size() == 1);
  CHECK(r.witness_sets[0] != ElementSet::singleton(c2.top()));
}

TEST_CASE("orthoposet check agrees with the definition on all small structures") {
  for (int n = 2; n <= 5; ++n) {
    testutil::for_each_bounded_structure(n, [](const OrthoPoset& p) {
      REQUIRE(is_orthoposet(p).passed == oracle::is_orthoposet(p));
    });
  }
}

TEST_CASE("a unary map that is not an involution is caught first") {
  const auto p = OrthoPoset::from_relation(3, {{0, 1}, {1, 2}}, {2, 2, 0});
  const auto r = is_orthoposet(p);
  CHECK(r.condition_tag == "involution");
  CHECK(r.witness == std::vector<Element>{1});
}

TEST_CASE("De Morgan laws") {
  const auto mo2 = fixtures::mo2();
  const ElementSet lab = lower_cone(mo2, set(mo2, {"a", "b"}));
  CHECK(lab == set(mo2, {"0"}));
  CHECK(mo2.comp_image(lab) == set(mo2, {"1"}));
  CHECK(upper_cone(mo2, set(mo2, {"a'", "b'"})) == set(mo2, {"1"}));
  CHECK(check_de_morgan(mo2).passed);
  CHECK(check_de_morgan(fixtures::boolean4()).passed);
  for (const auto& p : testutil::corpus(8)) CHECK(check_de_morgan(p).passed);
}

TEST_CASE("construction validates the order") {
  CHECK_THROWS_AS(OrthoPoset::from_relation(2, {{0, 1}, {1, 0}}, {1, 0}), StructureError);
  CHECK_THROWS_AS(OrthoPoset::from_relation(3, {{0, 1}}, {0, 1, 2}), StructureError);
  CHECK_THROWS_AS(OrthoPoset::from_relation(2, {{0, 5}}, {1, 0}), StructureError);
  CHECK_THROWS_AS(OrthoPoset::from_relation(2, {{0, 1}}, {1}), StructureError);
  CHECK_THROWS_AS(OrthoPoset::from_relation(2, {{0, 1}}, {1, 0}, {"x", "x"}), StructureError);
  CHECK_THROWS_AS(OrthoPoset::from_relation(0, {}, {}), StructureError);
  CHECK_NOTHROW(OrthoPoset::from_relation(1, {}, {0}));
}

TEST_CASE("covering relation and relabeling") {
  const auto o6 = fixtures::benzene6();
  const auto covers = o6.covers();
  CHECK(covers.size() == 6);
  const auto again = OrthoPoset::from_relation(o6.size(), covers, o6.comp_map(), o6.names());
  CHECK(again == o6);

  const std::vector<Element> perm{5, 4, 3, 2, 1, 0};
  const auto r = o6.relabeled(perm);
  CHECK(r.bottom() == 5);
  CHECK(r.top() == 0);
  CHECK(is_orthoposet(r).passed);
  CHECK(r.name(perm[id(o6, "a")]) == "a");
}

TEST_CASE("suprema and lattices") {
  const auto o6 = fixtures::benzene6();
  CHECK(supremum(o6, set(o6, {"a", "b"})) == id(o6, "1"));
  CHECK(is_lattice(o6));
  CHECK(is_lattice(fixtures::mo2()));
  // Two incomparable elements below two incomparable elements: no join.
  const auto bowtie = OrthoPoset::from_relation(
      6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}, {5, 3, 4, 1, 2, 0});
  CHECK_FALSE(is_lattice(bowtie));
  CHECK_FALSE(supremum(bowtie, ElementSet{1, 2}).has_value());
  CHECK(minimal_elements(bowtie, upper_cone(bowtie, ElementSet{1, 2})) == ElementSet{3, 4});
}
