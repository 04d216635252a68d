#include "doctest.h"
#include "doublelift/doublecat.hpp"
#include "doublelift/examples.hpp"
#include "oracles.hpp"

using namespace dlift;

TEST_CASE("the trivial double category over a category") {
  const Category x = arrow_decorated_bicategory(1, 1).decoration();
  const StrictBicategory b = locally_discrete(x);
  const DoubleCategory c = horizontal_double_category(b);
  CHECK(check_double_axioms(c.table()).ok());
  CHECK(c.c0().morphism_count() == x.object_count());
  CHECK(c.square_count() == x.morphism_count());
  CHECK(globular_squares(c).size() == c.square_count());
  CHECK(horizontalization(c).bicat == b);
}

TEST_CASE("the hand-built commuting square is a double category") {
  const auto fixture = oracle::length_two();
  const LawReport r = check_double_axioms(fixture.table);
  CHECK(r.ok());
  if (!r.ok()) MESSAGE(r.first_failure()->law << ": " << r.first_failure()->counterexample);
}

TEST_CASE("double axiom suite catches single-entry corruptions") {
  const DoubleCategory c = fixture_lift("semidirect:z3:z2:inv").category;
  const std::size_t n = c.square_count();

  DoubleCategoryTable t = c.table();
  t.horizontal_squares[pair_index(1, 2, n)] = 1;
  CHECK_FALSE(check_double_axioms(t).ok());

  t = c.table();
  t.morphisms.compose[pair_index(4, 5, n)] = 0;
  CHECK_FALSE(check_double_axioms(t).ok());

  t = c.table();
  t.source.morphisms[3] = 0;
  CHECK_FALSE(check_double_axioms(t).ok());

  t = c.table();
  t.identity.morphisms[1] = 0;
  CHECK_FALSE(check_double_axioms(t).ok());
}

TEST_CASE("double functors compose") {
  const DoubleCategory c = fixture_lift("semidirect:z5:z4:mul2").category;
  const DoubleFunctor id = identity_double_functor(c);
  CHECK(check_double_functor(c, c, id).ok());
  CHECK(compose_double_functors(id, id) == id);
  DoubleFunctor broken = id;
  std::swap(broken.f1.morphisms[0], broken.f1.morphisms[1]);
  CHECK_FALSE(check_double_functor(c, c, broken).ok());
}

TEST_CASE("horizontalization of a lift keeps the globular squares in order") {
  const Lift l = fixture_lift("semidirect:z4:z2:inv");
  const Horizontalization h = horizontalization(l.category);
  CHECK(h.squares == globular_squares(l.category));
  CHECK(h.squares == std::vector<Id>{0, 1, 2, 3});
}

TEST_CASE("restricting to every square changes nothing") {
  const DoubleCategory c = fixture_lift("arrow:z2:z2:id").category;
  const SubDoubleCategory sub = restrict_squares(c, std::vector<char>(c.square_count(), 1));
  CHECK(sub.category == c);
  CHECK_THROWS(restrict_squares(c, std::vector<char>(c.square_count(), 0)));
}
