#include <doctest.h>

#include <filesystem>

#include "gomplab/fixtures.hpp"
#include "gomplab/structure_io.hpp"
#include "test_util.hpp"

using namespace gomplab;

TEST_CASE("parse a documented example") {
  const char* text = R"(# benzene ring
name: o6
elements: 0 a b a' b' 1
covers: 0 a, 0 b, a b', b a', a' 1, b' 1
comp: 0 1, a a', b b', a' a, b' b, 1 0
bottom: 0
top: 1
)";
  const auto f = parse_structure(text);
  CHECK(f.label == "o6");
  CHECK(f.poset == fixtures::benzene6());
  CHECK_FALSE(f.directoid.has_value());
}

TEST_CASE("leq form and continuation lines") {
  const char* text = R"(elements: 0 x 1
leq: 0 x,
  x 1
comp: 0 1, x x, 1 0
bottom: 0
top: 1
)";
  const auto f = parse_structure(text);
  CHECK(f.poset.size() == 3);
  CHECK(f.poset.leq(0, 2));
}

TEST_CASE("round trip of every enumerated structure") {
  for (const auto& p : testutil::corpus(10)) {
    const StructureFile f{"s", p, std::nullopt};
    const auto text = serialize_structure(f);
    const auto back = parse_structure(text);
    CHECK(back == f);
    CHECK(serialize_structure(back) == text);
  }
}

TEST_CASE("round trip with a join table") {
  const auto p = fixtures::benzene6();
  const StructureFile f{"o6", p, assign_canonical_directoid(p)};
  const auto back = parse_structure(serialize_structure(f));
  CHECK(back == f);
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "gomplab_io_test.struct";
  const StructureFile f{"mo2", fixtures::mo2(), std::nullopt};
  save_structure(path, f);
  CHECK(load_structure(path) == f);
  std::filesystem::remove(path);
  CHECK_THROWS(load_structure(path));
}

TEST_CASE("parse errors carry line and field") {
  const char* unknown = "elements: 0 1\ncovers: 0 2\ncomp: 0 1, 1 0\nbottom: 0\ntop: 1\n";
  try {
    parse_structure(unknown);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.field() == "covers");
  }
  CHECK_THROWS_AS(parse_structure("elements: 0 1\ncovers: 0 1\nbottom: 0\ntop: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("elements: 0 1\nwhat: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("elements: 0 0\ncovers: 0 1\ncomp: 0 1, 1 0\nbottom: 0\ntop: 1\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_structure("elements: 0 1\ncovers: 0 1\ncomp: 0 1, 1 0\nbottom: 1\ntop: 1\n"),
      ParseError);
  // Order errors are reported against the line that introduced the pairs.
  try {
    parse_structure("elements: 0 1\ncovers: 0 1, 1 0\ncomp: 0 1, 1 0\nbottom: 0\ntop: 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.field() == "covers");
    CHECK(std::string(e.what()).find("cycle") != std::string::npos);
  }
}

TEST_CASE("element names") {
  CHECK(is_valid_element_name("a'"));
  CHECK_FALSE(is_valid_element_name("a b"));
  CHECK_FALSE(is_valid_element_name("a,b"));
  CHECK_FALSE(is_valid_element_name(""));
  CHECK_FALSE(is_valid_element_name("#"));
}
