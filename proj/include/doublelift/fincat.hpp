#pragma once

// Finite monoids, finite categories, functors and strict monoidal categories.
// Every structure is table-backed and checked exhaustively when constructed.

#include <optional>
#include <string>
#include <vector>

#include "doublelift/core.hpp"

namespace dlift {

// ---------------------------------------------------------------------------
// Monoids
// ---------------------------------------------------------------------------

/// Raw multiplication table; product[x * size + y] = x * y.
struct MonoidTable {
  std::size_t size = 0;
  Id unit = 0;
  std::vector<Id> product;
  std::vector<std::string> names;
};

LawReport check_laws(const MonoidTable& table);

class Monoid {
 public:
  /// Throws LawViolation when the table is not a monoid.
  explicit Monoid(MonoidTable table);

  std::size_t size() const { return table_.size; }
  Id unit() const { return table_.unit; }
  Id mul(Id x, Id y) const { return table_.product[pair_index(x, y, table_.size)]; }
  const MonoidTable& table() const { return table_; }

  bool is_commutative() const;
  bool is_group() const;
  /// Two-sided inverse, or kNoId.
  Id inverse(Id x) const;
  std::vector<Id> center() const;

  std::string element_name(Id x) const;

  friend bool operator==(const Monoid& a, const Monoid& b) {
    return a.table_.size == b.table_.size && a.table_.unit == b.table_.unit &&
           a.table_.product == b.table_.product;
  }

 private:
  MonoidTable table_;
};

/// Z/n under addition; element k is the residue k.
Monoid cyclic_group(std::size_t n);
/// {0, ..., k} under addition capped at k. Conical: x + y = 0 forces x = y = 0.
Monoid truncated_naturals(std::size_t k);
Monoid trivial_monoid();
/// Element (n, m) has index m * |N| + n.
Monoid direct_product(const Monoid& n, const Monoid& m);

/// Image of each element under a map between monoids.
using ElementMap = std::vector<Id>;

LawReport check_morphism(const Monoid& source, const Monoid& target, const ElementMap& map);
ElementMap compose_maps(const ElementMap& after, const ElementMap& before);
ElementMap identity_map(std::size_t size);
bool is_bijective(const ElementMap& map, std::size_t target_size);
bool is_surjective(const ElementMap& map, std::size_t target_size);

class MonoidMorphism {
 public:
  MonoidMorphism(Monoid source, Monoid target, ElementMap map);
  const Monoid& source() const { return source_; }
  const Monoid& target() const { return target_; }
  const ElementMap& map() const { return map_; }
  Id operator()(Id x) const { return map_[x]; }

 private:
  Monoid source_;
  Monoid target_;
  ElementMap map_;
};

/// All monoid endomorphisms, in lexicographic order of their element maps.
std::vector<ElementMap> endomorphisms(const Monoid& m);
std::vector<ElementMap> automorphisms(const Monoid& m);
/// Exhaustive search over bijections with order-profile pruning.
std::optional<ElementMap> find_isomorphism(const Monoid& a, const Monoid& b);

/// An action of `acting` on `target` by monoid endomorphisms: maps[m] is the
/// endomorphism for m. Validated to be a monoid morphism into End(target).
class MonoidAction {
 public:
  MonoidAction(Monoid acting, Monoid target, std::vector<ElementMap> maps);

  const Monoid& acting() const { return acting_; }
  const Monoid& target() const { return target_; }
  const std::vector<ElementMap>& maps() const { return maps_; }
  Id apply(Id m, Id n) const { return maps_[m][n]; }

  bool all_surjective() const;

 private:
  Monoid acting_;
  Monoid target_;
  std::vector<ElementMap> maps_;
};

LawReport check_action(const Monoid& acting, const Monoid& target,
                       const std::vector<ElementMap>& maps);

/// Every action of `acting` on `target` by endomorphisms.
std::vector<MonoidAction> enumerate_actions(const Monoid& acting, const Monoid& target);

/// N x| M on pairs (n, m), index m * |N| + n, with
/// (n', m')(n, m) = (n' * phi_{m'}(n), m' m). Throws ShapeError when N is
/// not commutative.
Monoid semidirect_product(const MonoidAction& phi);
Monoid semidirect_product(const Monoid& n, const Monoid& m, const std::vector<ElementMap>& maps);

// ---------------------------------------------------------------------------
// Categories
// ---------------------------------------------------------------------------

struct Arrow {
  Id dom = 0;
  Id cod = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// compose[g * morphisms + f] = g o f, or kNoId when cod(f) != dom(g).
struct CategoryTable {
  std::size_t objects = 0;
  std::vector<Arrow> morphisms;
  std::vector<Id> identity;
  std::vector<Id> compose;
  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;
};

LawReport check_laws(const CategoryTable& table);

class Category {
 public:
  explicit Category(CategoryTable table);

  std::size_t object_count() const { return table_.objects; }
  std::size_t morphism_count() const { return table_.morphisms.size(); }
  Id dom(Id f) const { return table_.morphisms[f].dom; }
  Id cod(Id f) const { return table_.morphisms[f].cod; }
  Id identity(Id x) const { return table_.identity[x]; }
  /// g o f, or kNoId.
  Id compose(Id g, Id f) const {
    return table_.compose[pair_index(g, f, table_.morphisms.size())];
  }
  bool is_identity(Id f) const { return table_.identity[dom(f)] == f; }
  std::vector<Id> hom(Id x, Id y) const;
  const CategoryTable& table() const { return table_; }

  std::string object_name(Id x) const;
  std::string morphism_name(Id f) const;

  friend bool operator==(const Category& a, const Category& b) {
    return a.table_.objects == b.table_.objects && a.table_.morphisms == b.table_.morphisms &&
           a.table_.identity == b.table_.identity && a.table_.compose == b.table_.compose;
  }

 private:
  CategoryTable table_;
};

/// Builds a category from dom/cod data and a total composition callback
/// evaluated only on composable pairs.
template <typename Compose>
CategoryTable make_category_table(std::size_t objects, std::vector<Arrow> morphisms,
                                  std::vector<Id> identity, Compose&& compose) {
  CategoryTable t;
  t.objects = objects;
  t.morphisms = std::move(morphisms);
  t.identity = std::move(identity);
  const std::size_t n = t.morphisms.size();
  t.compose.assign(n * n, kNoId);
  for (Id g = 0; g < n; ++g)
    for (Id f = 0; f < n; ++f)
      if (t.morphisms[f].cod == t.morphisms[g].dom) t.compose[pair_index(g, f, n)] = compose(g, f);
  return t;
}

struct Functor {
  std::vector<Id> objects;
  std::vector<Id> morphisms;
  friend bool operator==(const Functor&, const Functor&) = default;
};

LawReport check_functor(const Category& source, const Category& target, const Functor& f);
Functor identity_functor(const Category& c);
/// after o before.
Functor compose_functors(const Functor& after, const Functor& before);
bool is_full(const Category& source, const Category& target, const Functor& f);

/// One object, morphisms = elements, composition g o f = g * f.
Category delooping(const Monoid& m);

struct EndomorphismMonoid {
  Monoid monoid;
  /// Element k of the monoid is morphism morphisms[k] of the category.
  std::vector<Id> morphisms;
};
EndomorphismMonoid endomorphism_monoid(const Category& c, Id object);

std::optional<Functor> find_category_isomorphism(const Category& a, const Category& b);

// ---------------------------------------------------------------------------
// Strict monoidal categories
// ---------------------------------------------------------------------------

struct MonoidalTable {
  CategoryTable base;
  std::vector<Id> tensor_objects;    // objects x objects
  std::vector<Id> tensor_morphisms;  // morphisms x morphisms, total
  Id unit = 0;
};

LawReport check_laws(const MonoidalTable& table);

class StrictMonoidalCategory {
 public:
  explicit StrictMonoidalCategory(MonoidalTable table);

  const Category& base() const { return base_; }
  Id unit() const { return unit_; }
  Id tensor(Id x, Id y) const { return tensor_objects_[pair_index(x, y, base_.object_count())]; }
  Id tensor_morphisms(Id f, Id g) const {
    return tensor_morphisms_[pair_index(f, g, base_.morphism_count())];
  }
  MonoidalTable table() const;

  friend bool operator==(const StrictMonoidalCategory& a, const StrictMonoidalCategory& b) {
    return a.base_ == b.base_ && a.unit_ == b.unit_ && a.tensor_objects_ == b.tensor_objects_ &&
           a.tensor_morphisms_ == b.tensor_morphisms_;
  }

 private:
  Category base_;
  std::vector<Id> tensor_objects_;
  std::vector<Id> tensor_morphisms_;
  Id unit_;
};

/// Tensor = product. Throws ShapeError for a non-commutative monoid, which
/// admits no strict monoidal structure on its delooping.
StrictMonoidalCategory monoidal_delooping(const Monoid& m);

LawReport check_strict_monoidal_functor(const StrictMonoidalCategory& source,
                                        const StrictMonoidalCategory& target, const Functor& f);

std::optional<Functor> find_monoidal_isomorphism(const StrictMonoidalCategory& a,
                                                 const StrictMonoidalCategory& b);

}  // namespace dlift
