#pragma once

// The double category C^Φ of a decorated bicategory and a pre-cosheaf, the
// constant pre-cosheaf, and the action of C^• on natural transformations.

#include <map>
#include <tuple>
#include <vector>

#include "doublelift/doublecat.hpp"
#include "doublelift/grothendieck.hpp"

namespace dlift {

/// C1 objects are the 1-cells of B with unchanged identifiers; squares[k]
/// records the provenance of square k. Squares below |B_2| are the 2-cells of
/// B and are exactly the globular squares.
struct Lift {
  DoubleCategory category;
  std::vector<LiftSquare> squares;

  /// Square with vertical side f, top 1-cell and underlying 2-cell, or kNoId.
  Id find(Id f, Id top, Id cell) const;

  std::map<std::tuple<Id, Id, Id>, Id> index;
  Precosheaf phi;
};

/// Throws LawViolation when phi is not attached to dec.
Lift lift(const DecoratedBicategory& dec, const Precosheaf& phi);

/// Identities act as identity functors and every other morphism a -> b as
/// the constant functor at the unit of End_B(b). Throws LawViolation
/// ("action-functoriality") when that family is not a functor, which happens
/// as soon as a composite of non-identities is an identity.
Precosheaf constant_precosheaf(const DecoratedBicategory& dec);

/// One strict monoidal endofunctor of each fiber.
struct NaturalTransformation {
  std::vector<Functor> components;
  friend bool operator==(const NaturalTransformation&, const NaturalTransformation&) = default;
};

LawReport check_natural_transformation(const Precosheaf& from, const Precosheaf& to,
                                       const NaturalTransformation& eta);
NaturalTransformation identity_transformation(const Precosheaf& phi);
NaturalTransformation compose_transformations(const NaturalTransformation& after,
                                              const NaturalTransformation& before);

/// eta runs from source.phi to target.phi. F0 is the identity; F1 applies
/// the components of eta to endomorphism cells and fixes the other 2-cells.
/// Throws LawViolation when eta is not natural or the result fails the
/// double functor laws.
DoubleFunctor lift_functor(const Lift& source, const Lift& target, const NaturalTransformation& eta);

/// True when H*F is the identity: same C0, F0 and F1 on 1-cells are
/// identities, and F1 sends the k-th globular square of source to the k-th
/// globular square of target.
bool fixes_horizontalization(const DoubleCategory& source, const DoubleCategory& target,
                             const DoubleFunctor& f);

}  // namespace dlift
