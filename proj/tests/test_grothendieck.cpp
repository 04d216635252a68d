#include "doctest.h"
#include "doublelift/examples.hpp"
#include "doublelift/grothendieck.hpp"
#include "doublelift/lift.hpp"

using namespace dlift;

namespace {

MonoidAction inversion(std::size_t n) {
  return action_by_name(cyclic_group(2), cyclic_group(n), "inv");
}

DecoratedBicategory single_object(const Monoid& m, const Monoid& n) {
  return DecoratedBicategory(delooping(m), suspend(monoidal_delooping(n)));
}

}  // namespace

TEST_CASE("action pre-cosheaves are attached to (ΩM, 2ΩN)") {
  const Precosheaf phi = action_precosheaf(inversion(3));
  CHECK(check_precosheaf(phi.base(), phi.fibers(), phi.actions()).ok());
  CHECK(check_attached(single_object(cyclic_group(2), cyclic_group(3)), phi).ok());
  const LawReport wrong = check_attached(single_object(cyclic_group(2), cyclic_group(4)), phi);
  CHECK_FALSE(wrong.ok());
  CHECK(wrong.first_failure()->law == "fiber-constraint");
}

TEST_CASE("a non-functorial family is rejected") {
  const Precosheaf phi = action_precosheaf(inversion(3));
  std::vector<Functor> action = phi.actions();
  action[1].morphisms = {0, 0, 0};  // constant at the unit
  const LawReport r = check_precosheaf(phi.base(), phi.fibers(), action);
  CHECK(r.first_failure()->law == "action-functoriality");
}

TEST_CASE("the constant pre-cosheaf over a group decoration is not a functor") {
  try {
    constant_precosheaf(single_object(cyclic_group(2), cyclic_group(3)));
    FAIL("expected a law violation");
  } catch (const LawViolation& e) {
    CHECK(e.law() == "action-functoriality");
  }
  // No composite of non-identities is an identity here.
  const DecoratedBicategory arrow = arrow_decorated_bicategory(2, 3);
  const Precosheaf phi = constant_precosheaf(arrow);
  CHECK(check_attached(arrow, phi).ok());
  CHECK(phi.action(2).morphisms == std::vector<Id>{0, 0});
  // Over the truncated naturals the constant family is an action.
  CHECK_NOTHROW(constant_precosheaf(single_object(truncated_naturals(2), cyclic_group(3))));
}

TEST_CASE("total category composes by the twisted rule") {
  const MonoidAction act = inversion(3);
  const Precosheaf phi = action_precosheaf(act);
  const TotalCategory t = total_category(phi);
  REQUIRE(t.objects.size() == 1);
  REQUIRE(t.morphisms.size() == 6);
  CHECK(check_laws(t.category.table()).ok());
  const Monoid& n = act.target();
  const Monoid& m = act.acting();
  for (Id g = 0; g < 6; ++g)
    for (Id f = 0; f < 6; ++f) {
      const TotalMorphism a = t.morphisms[g], b = t.morphisms[f], c = t.morphisms[t.category.compose(g, f)];
      CHECK(c.base == m.mul(a.base, b.base));
      CHECK(c.fiber == n.mul(a.fiber, act.apply(a.base, b.fiber)));
    }
}

TEST_CASE("Φ acts on the 2-cells of B through End_B") {
  const MonoidAction act = inversion(5);
  const DecoratedBicategory dec = single_object(cyclic_group(2), cyclic_group(5));
  const Precosheaf phi = action_precosheaf(act);
  const BicellAction bicell(dec, phi);
  for (Id p = 0; p < 5; ++p) {
    CHECK(bicell.cell2(0, p) == p);
    CHECK(bicell.cell2(1, p) == (5 - p) % 5);
  }
  CHECK(bicell.cell1(1, 0) == 0);
}

TEST_CASE("the extended total category adds the rest cells as globulars") {
  const DecoratedBicategory dec = arrow_decorated_bicategory(2, 2);
  const Precosheaf phi = arrow_precosheaf(dec, {0, 1});
  const ExtendedTotal e = extended_total(dec, phi);
  CHECK(check_laws(e.category.table()).ok());
  const std::size_t n2 = dec.bicat().cells2_count();
  for (Id k = 0; k < n2; ++k) {
    CHECK(e.squares[k].cell == k);
    CHECK(e.category.dom(k) == dec.bicat().dom1(k));
  }
  // Pairs over f: top is i_a, Φ_f(i_a) = i_b, cells End(i_b).
  CHECK(e.squares.size() == n2 + 2);
  for (Id k = static_cast<Id>(n2); k < e.squares.size(); ++k) {
    CHECK(e.squares[k].src == 2);
    CHECK(e.squares[k].top == 0);
    CHECK(e.squares[k].bottom == 1);
  }
}
