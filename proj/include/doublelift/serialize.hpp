#pragma once

// Textual form of every structure kind: a JSON document tagged by "kind",
// with tables as sorted [lhs, rhs, result] triples.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "doublelift/doublecat.hpp"
#include "doublelift/grothendieck.hpp"

namespace dlift {

struct DecoratedTable {
  CategoryTable decoration;
  BicategoryTable bicat;
};

struct PrecosheafTable {
  CategoryTable base;
  std::vector<MonoidalTable> fibers;
  std::vector<Functor> action;
};

/// Unvalidated tables; check_structure runs the axiom suite of the kind.
using StructureTable = std::variant<MonoidTable, CategoryTable, MonoidalTable, BicategoryTable,
                                    DecoratedTable, PrecosheafTable, DoubleCategoryTable>;

/// Syntax errors carry a 1-based line and column; schema errors carry the
/// JSON path of the offending value and line 0.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, std::string path);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

StructureTable parse_structure(std::string_view text);
StructureTable read_structure_file(const std::string& path);

/// Canonical form: fixed field order, sorted triples, trailing newline.
std::string write_structure(const StructureTable& s);
void write_structure_file(const StructureTable& s, const std::string& path);

const char* kind_name(const StructureTable& s);
LawReport check_structure(const StructureTable& s);

StructureTable to_table(const Monoid& m);
StructureTable to_table(const Category& c);
StructureTable to_table(const StrictMonoidalCategory& c);
StructureTable to_table(const StrictBicategory& b);
StructureTable to_table(const DecoratedBicategory& d);
StructureTable to_table(const Precosheaf& p);
StructureTable to_table(const DoubleCategory& c);

/// Validated values; ShapeError on a kind mismatch, LawViolation on a failed law.
Monoid as_monoid(const StructureTable& s);
DecoratedBicategory as_decorated(const StructureTable& s);
Precosheaf as_precosheaf(const StructureTable& s);
DoubleCategory as_double_category(const StructureTable& s);

}  // namespace dlift
