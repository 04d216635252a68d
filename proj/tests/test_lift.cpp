#include "doctest.h"
#include "doublelift/adjoint.hpp"
#include "doublelift/examples.hpp"
#include "doublelift/lift.hpp"
#include "oracles.hpp"

using namespace dlift;

namespace {

/// |B2| plus, for each non-identity f: a -> b and each endo 1-cell x at a,
/// the 2-cells out of Φ_f(x) into endo 1-cells at b.
std::size_t square_count(const DecoratedBicategory& dec, const Precosheaf& phi) {
  const StrictBicategory& b = dec.bicat();
  const Category& c = dec.decoration();
  std::size_t count = b.cells2_count();
  for (Id f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    const EndCategory from = end_category(b, c.dom(f)), to = end_category(b, c.cod(f));
    for (Id x = 0; x < from.cells1.size(); ++x) {
      const Id image = phi.action(f).objects[x];
      for (Id k = 0; k < to.category.base().morphism_count(); ++k) count += to.category.base().dom(k) == image;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("lifts have the expected squares and horizontalization") {
  for (const auto& name : standard_fixture_names()) {
    CAPTURE(name);
    const Lift l = fixture_lift(name);
    const DecoratedBicategory dec = decorated_horizontalization(l.category);
    CHECK(check_double_axioms(l.category.table()).ok());
    CHECK(l.category.square_count() == square_count(dec, l.phi));
    const std::size_t n2 = dec.bicat().cells2_count();
    for (Id k = 0; k < l.category.square_count(); ++k) {
      CHECK(l.category.is_globular(k) == (k < n2));
      CHECK(l.find(l.squares[k].src, l.squares[k].top, l.squares[k].cell) == k);
    }
  }
}

TEST_CASE("H* of the lift is the input, identifier for identifier") {
  const MonoidAction act = action_by_name(cyclic_group(4), cyclic_group(5), "mul2");
  const DecoratedBicategory dec(delooping(cyclic_group(4)), suspend(monoidal_delooping(cyclic_group(5))));
  const Lift l = lift(dec, action_precosheaf(act));
  CHECK(decorated_horizontalization(l.category) == dec);
  const DecoratedBicategory arrow = arrow_decorated_bicategory(2, 3);
  CHECK(decorated_horizontalization(lift(arrow, constant_precosheaf(arrow)).category) == arrow);
}

TEST_CASE("End(i_*) of a single-object lift is the semidirect product") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& act : enumerate_actions(cyclic_group(2), cyclic_group(n))) {
      const SemidirectFixture s = build_semidirect_fixture(act);
      const auto expected = oracle::semidirect_product(act.target().table(), act.acting().table(), act.maps());
      const std::size_t size = s.endo.size();
      for (Id x = 0; x < size; ++x)
        for (Id y = 0; y < size; ++y)
          CHECK(s.bijection[s.endo.mul(x, y)] == expected[s.bijection[x] * size + s.bijection[y]]);
    }
}

TEST_CASE("lifting along a transformation") {
  const Monoid z2 = cyclic_group(2), z3 = cyclic_group(3);
  const DecoratedBicategory dec(delooping(z2), suspend(monoidal_delooping(z3)));
  const Precosheaf inv = action_precosheaf(action_by_name(z2, z3, "inv"));
  const Precosheaf triv = action_precosheaf(action_by_name(z2, z3, "triv"));
  const Lift li = lift(dec, inv), lt = lift(dec, triv);

  const NaturalTransformation id = identity_transformation(inv);
  const DoubleFunctor f = lift_functor(li, li, id);
  CHECK(f == identity_double_functor(li.category));
  CHECK(fixes_horizontalization(li.category, li.category, f));

  // η Φ_g = Ψ_g η forces η(-x) = η(x), so only the zero map is natural.
  const auto etas = enumerate_transformations(inv, triv);
  REQUIRE(etas.size() == 1);
  CHECK(etas[0].components[0].morphisms == std::vector<Id>{0, 0, 0});
  const DoubleFunctor zero = lift_functor(li, lt, etas[0]);
  CHECK(check_double_functor(li.category, lt.category, zero).ok());
  CHECK_FALSE(fixes_horizontalization(li.category, lt.category, zero));

  const NaturalTransformation not_natural{{Functor{{0}, {0, 1, 2}}}};
  CHECK(check_natural_transformation(inv, triv, not_natural).first_failure()->law == "naturality");
  CHECK_THROWS_AS(lift_functor(li, lt, not_natural), LawViolation);
}

TEST_CASE("transformations compose componentwise") {
  const Monoid z2 = cyclic_group(2), z5 = cyclic_group(5);
  const Precosheaf inv = action_precosheaf(action_by_name(z2, z5, "inv"));
  const auto etas = enumerate_transformations(inv, inv);
  CHECK(etas.size() == 5);  // every endomorphism of Z5 commutes with negation
  for (const auto& a : etas)
    for (const auto& b : etas) {
      const auto c = compose_transformations(a, b);
      CHECK(check_natural_transformation(inv, inv, c).ok());
      CHECK(c.components[0] == compose_functors(a.components[0], b.components[0]));
    }
}
