#pragma once

// Strict double categories as tables, their axiom suite, double functors and
// the (decorated) horizontalization.

#include <vector>

#include "doublelift/fincat.hpp"
#include "doublelift/twocat.hpp"

namespace dlift {

/// objects is C0, morphisms is C1: its objects are the horizontal 1-cells and
/// its morphisms the squares, composed vertically. Horizontal composition is
/// diagrammatic: horizontal_cells[x * n + y] is x then y, defined when
/// target(x) = source(y), likewise horizontal_squares.
struct DoubleCategoryTable {
  CategoryTable objects;
  CategoryTable morphisms;
  Functor source;
  Functor target;
  Functor identity;
  std::vector<Id> horizontal_cells;
  std::vector<Id> horizontal_squares;
};

/// Every failure is a report entry, nothing throws.
LawReport check_double_axioms(const DoubleCategoryTable& table);

class DoubleCategory {
 public:
  explicit DoubleCategory(DoubleCategoryTable table);

  const Category& c0() const { return c0_; }
  const Category& c1() const { return c1_; }

  std::size_t cell_count() const { return c1_.object_count(); }
  std::size_t square_count() const { return c1_.morphism_count(); }

  /// Vertical sides of a square.
  Id source(Id square) const { return table_.source.morphisms[square]; }
  Id target(Id square) const { return table_.target.morphisms[square]; }
  /// Horizontal sides of a square.
  Id top(Id square) const { return c1_.dom(square); }
  Id bottom(Id square) const { return c1_.cod(square); }
  Id cell_source(Id cell) const { return table_.source.objects[cell]; }
  Id cell_target(Id cell) const { return table_.target.objects[cell]; }

  Id hid_cell(Id object) const { return table_.identity.objects[object]; }
  Id hid_square(Id morphism) const { return table_.identity.morphisms[morphism]; }

  /// psi below phi: psi o phi in C1, or kNoId.
  Id vcomp(Id psi, Id phi) const { return c1_.compose(psi, phi); }
  Id hcomp(Id phi, Id psi) const {
    return table_.horizontal_squares[pair_index(phi, psi, square_count())];
  }
  Id hcomp_cells(Id x, Id y) const { return table_.horizontal_cells[pair_index(x, y, cell_count())]; }

  bool is_globular(Id square) const {
    return c0_.is_identity(source(square)) && c0_.is_identity(target(square));
  }

  const DoubleCategoryTable& table() const { return table_; }

  friend bool operator==(const DoubleCategory& a, const DoubleCategory& b);

 private:
  DoubleCategoryTable table_;
  Category c0_;
  Category c1_;
};

/// Ascending identifiers of the squares with identity vertical sides.
std::vector<Id> globular_squares(const DoubleCategory& c);

/// 2-cell k of the bicategory is globular square squares[k].
struct Horizontalization {
  StrictBicategory bicat;
  std::vector<Id> squares;
};

Horizontalization horizontalization(const DoubleCategory& c);
DecoratedBicategory decorated_horizontalization(const DoubleCategory& c);

/// Discrete C0 on the 0-cells, 1-cells of b horizontally, 2-cells of b as
/// squares. With b = locally_discrete(X) this is the trivial double category
/// over X.
DoubleCategory horizontal_double_category(const StrictBicategory& b);

struct DoubleFunctor {
  Functor f0;
  Functor f1;
  friend bool operator==(const DoubleFunctor&, const DoubleFunctor&) = default;
};

LawReport check_double_functor(const DoubleCategory& source, const DoubleCategory& target,
                               const DoubleFunctor& f);
DoubleFunctor identity_double_functor(const DoubleCategory& c);
DoubleFunctor compose_double_functors(const DoubleFunctor& after, const DoubleFunctor& before);

/// Keeps C0 and all horizontal 1-cells and the squares flagged in keep, which
/// must be closed under both compositions and contain all identities.
struct SubDoubleCategory {
  DoubleCategory category;
  std::vector<Id> squares;  // new identifier -> old identifier
};

SubDoubleCategory restrict_squares(const DoubleCategory& c, const std::vector<char>& keep);

}  // namespace dlift
