#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "doublelift/examples.hpp"
#include "doublelift/serialize.hpp"

using namespace dlift;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("fixture files round-trip byte for byte") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const std::string text = slurp(entry.path());
    const StructureTable t = parse_structure(text);
    CHECK(write_structure(t) == text);
    CHECK(check_structure(t).ok());
    ++seen;
  }
  CHECK(seen >= 36);
}

TEST_CASE("in-memory structures survive a write and read") {
  const Lift l = fixture_lift("arrow:z2:z3:const");
  const DecoratedBicategory dec = decorated_horizontalization(l.category);
  CHECK(as_decorated(parse_structure(write_structure(to_table(dec)))) == dec);
  CHECK(as_precosheaf(parse_structure(write_structure(to_table(l.phi)))) == l.phi);
  CHECK(as_double_category(parse_structure(write_structure(to_table(l.category)))) == l.category);
  const Monoid m = semidirect_product(action_by_name(cyclic_group(2), cyclic_group(5), "inv"));
  CHECK(as_monoid(parse_structure(write_structure(to_table(m)))) == m);

  for (const StructureTable& t : {to_table(delooping(m)), to_table(monoidal_delooping(cyclic_group(4))),
                                  to_table(suspend(monoidal_delooping(cyclic_group(3))))}) {
    const std::string text = write_structure(t);
    CHECK(write_structure(parse_structure(text)) == text);
    CHECK(check_structure(t).ok());
  }
}

TEST_CASE("non-canonical input normalizes") {
  const std::string messy =
      R"({"product": [[1,1,0],[0,1,1],[1,0,1],[0,0,0]], "unit": 0, "size": 2, "kind": "monoid"})";
  const std::string canonical = write_structure(to_table(cyclic_group(2)));
  CHECK(write_structure(parse_structure(messy)) == canonical);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_structure("{\n  \"kind\": \"monoid\",\n  \"size\": 2,,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("schema errors carry the JSON path") {
  auto path_of = [](const std::string& text) {
    try {
      parse_structure(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == 0);
      return e.path();
    }
    return std::string("<none>");
  };
  CHECK(path_of(R"({"kind": "monoid", "size": 2, "unit": 0, "product": [[0,0,0],[0,1,1],[1,0,1],[1,5,1]]})") ==
        "/product/3");
  CHECK(path_of(R"({"kind": "monoid", "size": 2, "unit": 0, "product": [[0,0,0],[0,0,0]]})") == "/product/1");
  CHECK(path_of(R"({"kind": "cube"})") == "/kind");
  CHECK_THROWS_WITH_AS(parse_structure(R"({"size": 2})"), doctest::Contains("missing field 'kind'"), ParseError);
}

TEST_CASE("a table that parses can still fail its laws") {
  const StructureTable t =
      parse_structure(R"({"kind": "monoid", "size": 2, "unit": 0, "product": [[0,0,0],[0,1,1],[1,0,1],[1,1,1]]})");
  CHECK(check_structure(t).ok());
  const StructureTable bad =
      parse_structure(R"({"kind": "monoid", "size": 2, "unit": 1, "product": [[0,0,0],[0,1,1],[1,0,1],[1,1,1]]})");
  CHECK_FALSE(check_structure(bad).ok());
  CHECK_THROWS_AS(as_monoid(bad), LawViolation);
  CHECK_THROWS_AS(as_decorated(t), ShapeError);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(read_structure_file("/nonexistent/x.json"), IoError);
  const auto path = std::filesystem::temp_directory_path() / "doublelift_test_z2.json";
  write_structure_file(to_table(cyclic_group(2)), path.string());
  CHECK(as_monoid(read_structure_file(path.string())) == cyclic_group(2));
  std::filesystem::remove(path);
}
