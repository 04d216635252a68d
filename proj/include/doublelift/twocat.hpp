#pragma once

// Finite strict bicategories, decorated bicategories and the split of the
// 1-cells into endomorphisms and the rest.

#include <string>
#include <vector>

#include "doublelift/core.hpp"
#include "doublelift/fincat.hpp"

namespace dlift {

struct Cell1 {
  Id dom0 = 0;
  Id cod0 = 0;
  friend bool operator==(const Cell1&, const Cell1&) = default;
};

struct Cell2 {
  Id dom1 = 0;
  Id cod1 = 0;
  friend bool operator==(const Cell2&, const Cell2&) = default;
};

/// Horizontal composition is written diagrammatically: horizontal1[x * n1 + y]
/// is x then y, defined when cod0(x) = dom0(y). vertical[psi * n2 + phi] is
/// psi o phi, defined when cod1(phi) = dom1(psi). Undefined entries are kNoId.
struct BicategoryTable {
  std::size_t cells0 = 0;
  std::vector<Cell1> cells1;
  std::vector<Cell2> cells2;
  std::vector<Id> identity1;  // per 0-cell
  std::vector<Id> identity2;  // per 1-cell
  std::vector<Id> vertical;
  std::vector<Id> horizontal1;
  std::vector<Id> horizontal2;
  std::vector<std::string> cell0_names;
  std::vector<std::string> cell1_names;
  std::vector<std::string> cell2_names;
};

LawReport check_laws(const BicategoryTable& table);

class StrictBicategory {
 public:
  explicit StrictBicategory(BicategoryTable table);

  std::size_t cells0_count() const { return table_.cells0; }
  std::size_t cells1_count() const { return table_.cells1.size(); }
  std::size_t cells2_count() const { return table_.cells2.size(); }

  Id dom0(Id x) const { return table_.cells1[x].dom0; }
  Id cod0(Id x) const { return table_.cells1[x].cod0; }
  Id dom1(Id phi) const { return table_.cells2[phi].dom1; }
  Id cod1(Id phi) const { return table_.cells2[phi].cod1; }
  Id id1(Id a) const { return table_.identity1[a]; }
  Id id2(Id x) const { return table_.identity2[x]; }
  bool is_endo(Id x) const { return dom0(x) == cod0(x); }

  Id vcomp(Id psi, Id phi) const { return table_.vertical[pair_index(psi, phi, cells2_count())]; }
  Id hcomp1(Id x, Id y) const { return table_.horizontal1[pair_index(x, y, cells1_count())]; }
  Id hcomp2(Id phi, Id psi) const { return table_.horizontal2[pair_index(phi, psi, cells2_count())]; }

  /// Objects are 1-cells, morphisms are 2-cells, composition is vertical.
  Category vertical_category() const;

  const BicategoryTable& table() const { return table_; }

  friend bool operator==(const StrictBicategory& a, const StrictBicategory& b);

 private:
  BicategoryTable table_;
};

class DecoratedBicategory {
 public:
  /// Throws ShapeError when the decoration's objects are not the 0-cells.
  DecoratedBicategory(Category decoration, StrictBicategory bicat);

  const Category& decoration() const { return decoration_; }
  const StrictBicategory& bicat() const { return bicat_; }

  friend bool operator==(const DecoratedBicategory& a, const DecoratedBicategory& b) {
    return a.decoration_ == b.decoration_ && a.bicat_ == b.bicat_;
  }

 private:
  Category decoration_;
  StrictBicategory bicat_;
};

DecoratedBicategory decorate(Category decoration, StrictBicategory bicat);

/// Both parts are categories under vertical composition. The id vectors map
/// local identifiers back to cells of the bicategory.
struct CellSplit {
  Category endo_part;
  Category rest_part;
  std::vector<Id> endo_cells1, endo_cells2;
  std::vector<Id> rest_cells1, rest_cells2;
};

CellSplit split_cells(const StrictBicategory& b);

/// One 0-cell; 1-cells are objects of d and 2-cells its morphisms.
StrictBicategory suspend(const StrictMonoidalCategory& d);

/// End_B(a) with the ascending 1-cell and 2-cell identifiers it was cut from.
struct EndCategory {
  StrictMonoidalCategory category;
  std::vector<Id> cells1;
  std::vector<Id> cells2;
};

EndCategory end_category(const StrictBicategory& b, Id a);

/// 0-cells are the objects of x, 1-cells its morphisms, and the only 2-cells
/// are identities (2-cell k is the identity on 1-cell k).
StrictBicategory locally_discrete(const Category& x);

}  // namespace dlift
