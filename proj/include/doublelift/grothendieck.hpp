#pragma once

// Pre-cosheaves B* -> strict monoidal categories, the Grothendieck total
// category, and its extension by the non-endomorphism 2-cells of B.

#include <vector>

#include "doublelift/fincat.hpp"
#include "doublelift/twocat.hpp"

namespace dlift {

/// action[f] is a strict monoidal functor fibers[dom f] -> fibers[cod f].
LawReport check_precosheaf(const Category& base, const std::vector<StrictMonoidalCategory>& fibers,
                           const std::vector<Functor>& action);

class Precosheaf {
 public:
  Precosheaf(Category base, std::vector<StrictMonoidalCategory> fibers, std::vector<Functor> action);

  const Category& base() const { return base_; }
  const StrictMonoidalCategory& fiber(Id x) const { return fibers_[x]; }
  const std::vector<StrictMonoidalCategory>& fibers() const { return fibers_; }
  const Functor& action(Id f) const { return action_[f]; }
  const std::vector<Functor>& actions() const { return action_; }

  friend bool operator==(const Precosheaf& a, const Precosheaf& b) {
    return a.base_ == b.base_ && a.fibers_ == b.fibers_ && a.action_ == b.action_;
  }

 private:
  Category base_;
  std::vector<StrictMonoidalCategory> fibers_;
  std::vector<Functor> action_;
};

/// Base ΩM, fiber ΩA as a strict monoidal category, Φ_m acting by maps[m].
Precosheaf action_precosheaf(const MonoidAction& phi);

/// The base is the decoration and each fiber is End_B(a) table-for-table.
LawReport check_attached(const DecoratedBicategory& dec, const Precosheaf& phi);

struct TotalObject {
  Id base = 0;
  Id fiber = 0;
  friend bool operator==(const TotalObject&, const TotalObject&) = default;
};

/// (alpha, beta) out of (dom alpha, source) with beta: Φ_alpha(source) -> a'.
struct TotalMorphism {
  Id base = 0;
  Id source = 0;
  Id fiber = 0;
  friend bool operator==(const TotalMorphism&, const TotalMorphism&) = default;
};

struct TotalCategory {
  Category category;
  std::vector<TotalObject> objects;
  std::vector<TotalMorphism> morphisms;
};

/// Objects sorted by (x, a), morphisms by (alpha, source, beta).
TotalCategory total_category(const Precosheaf& phi);

/// A morphism of the extended total category, with its square boundary:
/// src and tgt are decoration morphisms, top and bottom are 1-cells, cell is
/// the underlying 2-cell of B.
struct LiftSquare {
  Id src = 0;
  Id tgt = 0;
  Id top = 0;
  Id bottom = 0;
  Id cell = 0;
  friend bool operator==(const LiftSquare&, const LiftSquare&) = default;
};

/// Objects are the 1-cells of B. Morphism k < |B_2| is the 2-cell k; the
/// remaining morphisms are pairs (f, phi) with f not an identity, ordered by
/// (f, top, phi).
struct ExtendedTotal {
  Category category;
  std::vector<LiftSquare> squares;
};

ExtendedTotal extended_total(const DecoratedBicategory& dec, const Precosheaf& phi);

/// Φ_f applied to 1-cells and 2-cells of B, through the End_B identifiers.
class BicellAction {
 public:
  BicellAction(const DecoratedBicategory& dec, const Precosheaf& phi);
  Id cell1(Id f, Id x) const;
  Id cell2(Id f, Id p) const;

 private:
  const Precosheaf* phi_;
  std::vector<EndCategory> ends_;
  std::vector<Id> local1_, local2_;
};

}  // namespace dlift
