#include <cstring>
#include <string>

#include "doctest.h"
#include "doublelift/doublelift.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  dl_string_free(s);
  return out;
}

struct Handle {
  dl_structure* s = nullptr;
  ~Handle() { dl_free(s); }
};

const char* const kZ2 = R"({"kind": "monoid", "size": 2, "unit": 0, "product": [[0,0,0],[0,1,1],[1,0,1],[1,1,0]]})";

}  // namespace

TEST_CASE("load, inspect and write a structure") {
  Handle h;
  REQUIRE(dl_load_string(kZ2, &h.s) == DL_OK);
  CHECK(std::strcmp(dl_kind(h.s), "monoid") == 0);
  CHECK(dl_kind(nullptr) == nullptr);
  char* text = nullptr;
  REQUIRE(dl_write_canonical(h.s, &text) == DL_OK);
  const std::string canonical = take(text);
  CHECK(canonical.rfind("{\n  \"kind\": \"monoid\"", 0) == 0);
  Handle again;
  REQUIRE(dl_load_string(canonical.c_str(), &again.s) == DL_OK);
  REQUIRE(dl_write_canonical(again.s, &text) == DL_OK);
  CHECK(take(text) == canonical);
}

TEST_CASE("errors map to statuses") {
  Handle h;
  CHECK(dl_load_string("{ nope", &h.s) == DL_ERR_PARSE);
  CHECK(h.s == nullptr);
  CHECK(std::string(dl_last_error()).find("line 1") != std::string::npos);
  CHECK(dl_load_file("/nonexistent/x.json", &h.s) == DL_ERR_IO);
  CHECK(dl_load_string(nullptr, &h.s) == DL_ERR_ARGUMENT);
  CHECK(std::strcmp(dl_status_name(DL_ERR_SHAPE), "unsupported shape") == 0);

  Handle bad;
  REQUIRE(dl_load_string(R"({"kind": "monoid", "size": 2, "unit": 1, "product": [[0,0,0],[0,1,1],[1,0,1],[1,1,1]]})",
                         &bad.s) == DL_OK);
  char* report = nullptr;
  CHECK(dl_check(bad.s, DL_FORMAT_TEXT, &report) == DL_CHECK_FAILED);
  CHECK(take(report).find("FAIL") != std::string::npos);
  CHECK(std::string(dl_last_error()).find("unit") != std::string::npos);

  Handle z2;
  REQUIRE(dl_load_string(kZ2, &z2.s) == DL_OK);
  report = nullptr;
  CHECK(dl_analyze(z2.s, DL_FORMAT_TEXT, &report) == DL_ERR_SHAPE);
  CHECK(report == nullptr);
}

TEST_CASE("lift an example and analyze the result") {
  Handle dec, phi, lifted;
  REQUIRE(dl_example_structure("semidirect:z3:z2:inv", "decorated-bicategory", &dec.s) == DL_OK);
  REQUIRE(dl_example_structure("semidirect:z3:z2:inv", "precosheaf", &phi.s) == DL_OK);
  char* report = nullptr;
  REQUIRE(dl_lift(dec.s, phi.s, DL_FORMAT_JSON, &report, &lifted.s) == DL_OK);
  CHECK(take(report).find("\"passed\": true") != std::string::npos);
  REQUIRE(lifted.s != nullptr);
  CHECK(std::strcmp(dl_kind(lifted.s), "double-category") == 0);

  REQUIRE(dl_analyze(lifted.s, DL_FORMAT_TEXT, &report) == DL_OK);
  const std::string analysis = take(report);
  CHECK(analysis.find("squares: 6") != std::string::npos);
  CHECK(analysis.find("vertical_length: 1") != std::string::npos);

  CHECK(dl_folding(lifted.s, 1'000'000, DL_FORMAT_TEXT, &report) == DL_OK);
  CHECK(take(report).find("absent") != std::string::npos);
}

TEST_CASE("adjunction and examples through the C interface") {
  Handle g, a, p;
  REQUIRE(dl_load_string(kZ2, &g.s) == DL_OK);
  REQUIRE(dl_example_structure("semidirect:z3:z2:inv", "precosheaf", &p.s) == DL_OK);
  REQUIRE(dl_load_string(R"({"kind": "monoid", "size": 3, "unit": 0, "product": [[0,0,0],[0,1,1],[0,2,2],[1,0,1],[1,1,2],[1,2,0],[2,0,2],[2,1,0],[2,2,1]]})",
                         &a.s) == DL_OK);
  const dl_structure* phis[] = {p.s};
  char* report = nullptr;
  CHECK(dl_adjunction(g.s, a.s, phis, 1, DL_FORMAT_TEXT, &report) == DL_OK);
  take(report);

  CHECK(dl_run_example("mat:4", 0, DL_FORMAT_TEXT, &report) == DL_OK);
  CHECK(take(report).find("rank-one-factorization") != std::string::npos);
  CHECK(dl_run_example("cube:1", 0, DL_FORMAT_TEXT, &report) == DL_ERR_SHAPE);
  Handle none;
  CHECK(dl_example_structure("semidirect:z3:z2:inv", "bogus", &none.s) == DL_ERR_ARGUMENT);
}
