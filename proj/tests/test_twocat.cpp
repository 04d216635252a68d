#include "doctest.h"
#include "doublelift/examples.hpp"
#include "doublelift/twocat.hpp"

using namespace dlift;

TEST_CASE("suspension of a commutative monoid") {
  const StrictBicategory b = suspend(monoidal_delooping(cyclic_group(3)));
  CHECK(b.cells0_count() == 1);
  CHECK(b.cells1_count() == 1);
  CHECK(b.cells2_count() == 3);
  CHECK(check_laws(b.table()).ok());
  // 2-cells compose the same way in both directions.
  for (Id x = 0; x < 3; ++x)
    for (Id y = 0; y < 3; ++y) CHECK(b.vcomp(x, y) == b.hcomp2(x, y));
}

TEST_CASE("suspension of the graded category over Z2 and Z3") {
  const StrictBicategory b = suspend(graded_category(cyclic_group(2), cyclic_group(3)));
  CHECK(b.cells1_count() == 2);
  CHECK(b.cells2_count() == 6);
  CHECK(check_laws(b.table()).ok());
  const CellSplit split = split_cells(b);
  CHECK(split.rest_cells1.empty());
  CHECK(split.rest_part.morphism_count() == 0);
  CHECK(split.endo_part.object_count() == 2);
}

TEST_CASE("two-object decoration splits into endomorphisms and the rest") {
  const DecoratedBicategory dec = arrow_decorated_bicategory(2, 3);
  const StrictBicategory& b = dec.bicat();
  CHECK(check_laws(b.table()).ok());
  const CellSplit split = split_cells(b);
  CHECK(split.endo_cells1 == std::vector<Id>{0, 1});
  CHECK(split.rest_cells1 == std::vector<Id>{2});
  CHECK(split.endo_cells2.size() == 5);
  CHECK(split.rest_cells2.size() == 2);
  CHECK(end_category(b, 0).category == monoidal_delooping(cyclic_group(2)));
  CHECK(end_category(b, 1).category == monoidal_delooping(cyclic_group(3)));
  CHECK_THROWS_AS(end_category(b, 2), ShapeError);
}

TEST_CASE("interchange mutation is caught") {
  BicategoryTable t = arrow_decorated_bicategory(2, 2).bicat().table();
  // x ⊛ gamma: send 1 ⊛ gamma_0 to gamma_0 instead of gamma_1.
  const std::size_t n2 = t.cells2.size();
  const Id x1 = 1, gamma0 = 4;
  t.horizontal2[pair_index(x1, gamma0, n2)] = gamma0;
  const LawReport r = check_laws(t);
  CHECK_FALSE(r.ok());
  bool interchange_failed = false;
  for (const auto& law : r.results()) interchange_failed |= law.law == "interchange" && !law.passed;
  CHECK(interchange_failed);
}

TEST_CASE("locally discrete bicategories have only identity 2-cells") {
  const Category x = arrow_decorated_bicategory(1, 1).decoration();
  const StrictBicategory b = locally_discrete(x);
  CHECK(check_laws(b.table()).ok());
  CHECK(b.cells1_count() == x.morphism_count());
  CHECK(b.cells2_count() == x.morphism_count());
  for (Id k = 0; k < b.cells1_count(); ++k) CHECK(b.id2(k) == k);
}

TEST_CASE("decoration must share the 0-cells") {
  const Category two_objects = arrow_decorated_bicategory(1, 1).decoration();
  CHECK_THROWS_AS(DecoratedBicategory(two_objects, suspend(monoidal_delooping(cyclic_group(2)))), ShapeError);
}
