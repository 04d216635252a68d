#include "doctest.h"
#include "doublelift/analysis.hpp"
#include "doublelift/examples.hpp"
#include "oracles.hpp"

using namespace dlift;

TEST_CASE("gamma agrees with a naive closure of globulars and identities") {
  for (const auto& name : standard_fixture_names()) {
    CAPTURE(name);
    const DoubleCategory c = fixture_lift(name).category;
    std::vector<char> generators(c.square_count(), 0);
    for (Id p = 0; p < c.square_count(); ++p)
      generators[p] = c.c0().is_identity(c.source(p)) && c.c0().is_identity(c.target(p));
    for (Id v = 0; v < c.c0().morphism_count(); ++v) generators[c.hid_square(v)] = 1;
    CHECK(gamma_squares(c) == oracle::closure(c, generators));
  }
}

TEST_CASE("vertical length 2 on the commuting square") {
  const auto fixture = oracle::length_two();
  const DoubleCategory c(fixture.table);
  CHECK(is_gg(c));
  const VerticalChain chain = vertical_chain(c);
  CHECK(chain.length == 2);
  CHECK(vertical_length(c) == 2);
  const Id h = 8;
  for (Id x = 0; x < 4; ++x) CHECK(static_cast<bool>(chain.levels[0][fixture.square(h, x)]) == (x != 3));
  CHECK(chain.sizes().back() == c.square_count());
}

TEST_CASE("lifts have vertical length 1") {
  for (const auto& name : standard_fixture_names()) {
    CAPTURE(name);
    CHECK(vertical_length(fixture_lift(name).category) == 1);
  }
}

TEST_CASE("factorization witnesses agree with V1") {
  for (const auto& name : standard_fixture_names()) {
    CAPTURE(name);
    const Lift l = fixture_lift(name);
    const DecoratedBicategory dec = decorated_horizontalization(l.category);
    const BicellAction bicell(dec, l.phi);
    const auto v1 = vertical_chain(l.category).levels.front();
    for (Id p = 0; p < l.category.square_count(); ++p) {
      if (l.category.is_globular(p)) {
        CHECK_THROWS_AS(v1_membership(l, p), ShapeError);
        continue;
      }
      const V1Witness w = v1_membership(l, p);
      CHECK(w.member == static_cast<bool>(v1[p]));
      if (w.member) {
        const LiftSquare& s = l.squares[p];
        CHECK(s.cell == dec.bicat().vcomp(w.eta, bicell.cell2(s.src, w.psi)));
      }
    }
  }
}

TEST_CASE("graded lifts are not generated by globular squares") {
  // Only the unit 1-cell has a horizontal identity, so pair squares over
  // the other objects of C_G(H) are unreachable.
  const DoubleCategory c = fixture_lift("graded:z2:z3:inv").category;
  CHECK_FALSE(is_gg(c));
  CHECK(gamma(c).category.square_count() == 9);
}

TEST_CASE("foldings: the inversion action has none, the trivial action has one") {
  const DoubleCategory inv = fixture_lift("semidirect:z3:z2:inv").category;
  const FoldingSearch absent = find_folding(inv, 10'000'000);
  CHECK(absent.status == SearchStatus::absent);
  CHECK_FALSE(absent.certificate.empty());

  const DoubleCategory triv = fixture_lift("semidirect:z3:z2:triv").category;
  const FoldingSearch found = find_folding(triv, 10'000'000);
  REQUIRE(found.status == SearchStatus::found);
  CHECK(validate_folding(triv, *found.folding).ok());
  const FoldingSearch co = find_cofolding(triv, 10'000'000);
  REQUIRE(co.status == SearchStatus::found);
  CHECK(validate_folding(triv, *co.folding, FoldingKind::cofolding).ok());

  Folding broken = *found.folding;
  std::swap(broken.lambda[3], broken.lambda[4]);
  CHECK_FALSE(validate_folding(triv, broken).ok());
}

TEST_CASE("an exhausted budget is inconclusive, never absent") {
  const DoubleCategory inv = fixture_lift("semidirect:z5:z4:mul2").category;
  const FoldingSearch s = find_folding(inv, 1);
  CHECK(s.status != SearchStatus::absent);
  CHECK(find_folding(inv, 10'000'000).status != SearchStatus::inconclusive);
}

TEST_CASE("folding search needs a single object and 1-cell") {
  CHECK_THROWS_AS(find_folding(fixture_lift("arrow:z2:z2:id").category, 100), ShapeError);
  CHECK_THROWS_AS(find_folding(fixture_lift("graded:z2:z3:triv").category, 100), ShapeError);
}

TEST_CASE("surjective actions give globularily generated lifts") {
  for (const auto& name : standard_fixture_names()) {
    if (name.rfind("semidirect", 0) != 0) continue;
    CAPTURE(name);
    const Lift l = fixture_lift(name);
    if (gg_criterion_surjective(l.phi)) CHECK(is_gg(l.category));
  }
  const Lift c = fixture_lift("semidirect:z3:n2:const");
  CHECK_FALSE(gg_criterion_surjective(c.phi));
  CHECK_THROWS_AS(gg_criterion_surjective(fixture_lift("arrow:z2:z2:id").phi), ShapeError);
}
