#include "doublelift/doublecat.hpp"

#include <fmt/format.h>

namespace dlift {

namespace {

bool same_category(const CategoryTable& a, const CategoryTable& b) {
  return a.objects == b.objects && a.morphisms == b.morphisms && a.identity == b.identity &&
         a.compose == b.compose;
}

}  // namespace

LawReport check_double_axioms(const DoubleCategoryTable& t) {
  LawReport report;
  report.merge(check_laws(t.objects), "c0-");
  report.merge(check_laws(t.morphisms), "c1-");
  if (!report.ok()) return report;
  const Category c0(t.objects);
  const Category c1(t.morphisms);

  report.merge(check_functor(c1, c0, t.source), "source-");
  report.merge(check_functor(c1, c0, t.target), "target-");
  report.merge(check_functor(c0, c1, t.identity), "identity-");
  if (!report.ok()) return report;

  const Functor id0 = identity_functor(c0);
  report.law("source-identity").require(compose_functors(t.source, t.identity) == id0, [] {
    return std::string("s o i is not the identity");
  });
  report.law("target-identity").require(compose_functors(t.target, t.identity) == id0, [] {
    return std::string("t o i is not the identity");
  });

  const std::size_t nc = c1.object_count(), ns = c1.morphism_count();
  auto wf = report.law("hcomp-well-formed");
  wf.require(t.horizontal_cells.size() == nc * nc && t.horizontal_squares.size() == ns * ns,
             [] { return std::string("horizontal table sizes"); });
  if (!wf.passed()) return report;
  for (Id x : t.horizontal_cells)
    wf.require(x == kNoId || x < nc, [&] { return fmt::format("1-cell composite {} out of range", x); });
  for (Id x : t.horizontal_squares)
    wf.require(x == kNoId || x < ns, [&] { return fmt::format("square composite {} out of range", x); });
  if (!wf.passed() || !report.ok()) return report;

  auto hc = [&](Id x, Id y) { return t.horizontal_cells[pair_index(x, y, nc)]; };
  auto hs = [&](Id p, Id q) { return t.horizontal_squares[pair_index(p, q, ns)]; };
  const auto& s = t.source;
  const auto& tg = t.target;

  auto domain = report.law("hcomp-domain");
  auto boundary = report.law("hcomp-boundary");
  for (Id x = 0; x < nc; ++x)
    for (Id y = 0; y < nc; ++y) {
      const bool composable = tg.objects[x] == s.objects[y];
      const Id xy = hc(x, y);
      domain.require(composable == (xy != kNoId), [&] { return fmt::format("1-cells ({}, {})", x, y); });
      if (composable && xy != kNoId)
        boundary.require(s.objects[xy] == s.objects[x] && tg.objects[xy] == tg.objects[y],
                         [&] { return fmt::format("1-cells ({}, {})", x, y); });
    }
  for (Id p = 0; p < ns; ++p)
    for (Id q = 0; q < ns; ++q) {
      const bool composable = tg.morphisms[p] == s.morphisms[q];
      const Id pq = hs(p, q);
      domain.require(composable == (pq != kNoId), [&] { return fmt::format("squares ({}, {})", p, q); });
      if (composable && pq != kNoId)
        boundary.require(s.morphisms[pq] == s.morphisms[p] && tg.morphisms[pq] == tg.morphisms[q] &&
                             c1.dom(pq) == hc(c1.dom(p), c1.dom(q)) &&
                             c1.cod(pq) == hc(c1.cod(p), c1.cod(q)),
                         [&] { return fmt::format("squares ({}, {})", p, q); });
    }
  if (!domain.passed() || !boundary.passed()) return report;

  std::vector<std::vector<Id>> cells_from(c0.object_count()), squares_from(c0.morphism_count());
  for (Id x = 0; x < nc; ++x) cells_from[s.objects[x]].push_back(x);
  for (Id p = 0; p < ns; ++p) squares_from[s.morphisms[p]].push_back(p);

  auto unit = report.law("hcomp-unit");
  auto assoc = report.law("hcomp-associativity");
  for (Id x = 0; x < nc; ++x) {
    unit.require(hc(t.identity.objects[s.objects[x]], x) == x && hc(x, t.identity.objects[tg.objects[x]]) == x,
                 [&] { return fmt::format("1-cell {}", x); });
    for (Id y : cells_from[tg.objects[x]])
      for (Id z : cells_from[tg.objects[y]])
        assoc.require(hc(hc(x, y), z) == hc(x, hc(y, z)),
                      [&] { return fmt::format("1-cells ({}, {}, {})", x, y, z); });
  }
  for (Id p = 0; p < ns; ++p) {
    unit.require(hs(t.identity.morphisms[s.morphisms[p]], p) == p &&
                     hs(p, t.identity.morphisms[tg.morphisms[p]]) == p,
                 [&] { return fmt::format("square {}", p); });
    for (Id q : squares_from[tg.morphisms[p]])
      for (Id r : squares_from[tg.morphisms[q]])
        assoc.require(hs(hs(p, q), r) == hs(p, hs(q, r)),
                      [&] { return fmt::format("squares ({}, {}, {})", p, q, r); });
  }

  auto ids = report.law("hcomp-identities");
  for (Id x = 0; x < nc; ++x)
    for (Id y : cells_from[tg.objects[x]])
      ids.require(hs(c1.identity(x), c1.identity(y)) == c1.identity(hc(x, y)),
                  [&] { return fmt::format("1-cells ({}, {})", x, y); });

  std::vector<std::vector<Id>> below(nc);
  for (Id p = 0; p < ns; ++p) below[c1.dom(p)].push_back(p);
  auto inter = report.law("interchange");
  for (Id p = 0; p < ns; ++p)
    for (Id q : squares_from[tg.morphisms[p]])
      for (Id p2 : below[c1.cod(p)])
        for (Id q2 : below[c1.cod(q)]) {
          if (tg.morphisms[p2] != s.morphisms[q2]) continue;
          inter.require(c1.compose(hs(p2, q2), hs(p, q)) == hs(c1.compose(p2, p), c1.compose(q2, q)), [&] {
            return fmt::format("({} | {}) over ({} | {})", p2, q2, p, q);
          });
        }
  return report;
}

DoubleCategory::DoubleCategory(DoubleCategoryTable table)
    : table_([&] {
        check_double_axioms(table).throw_if_failed();
        return std::move(table);
      }()),
      c0_(table_.objects),
      c1_(table_.morphisms) {}

bool operator==(const DoubleCategory& a, const DoubleCategory& b) {
  const auto& x = a.table_;
  const auto& y = b.table_;
  return same_category(x.objects, y.objects) && same_category(x.morphisms, y.morphisms) &&
         x.source == y.source && x.target == y.target && x.identity == y.identity &&
         x.horizontal_cells == y.horizontal_cells && x.horizontal_squares == y.horizontal_squares;
}

std::vector<Id> globular_squares(const DoubleCategory& c) {
  std::vector<Id> out;
  for (Id p = 0; p < c.square_count(); ++p)
    if (c.is_globular(p)) out.push_back(p);
  return out;
}

Horizontalization horizontalization(const DoubleCategory& c) {
  const auto glob = globular_squares(c);
  std::vector<Id> local(c.square_count(), kNoId);
  for (Id k = 0; k < glob.size(); ++k) local[glob[k]] = k;
  auto lookup = [&](Id p) { return p == kNoId ? kNoId : local[p]; };

  BicategoryTable t;
  t.cells0 = c.c0().object_count();
  for (Id x = 0; x < c.cell_count(); ++x) t.cells1.push_back(Cell1{c.cell_source(x), c.cell_target(x)});
  for (Id p : glob) t.cells2.push_back(Cell2{c.top(p), c.bottom(p)});
  for (Id a = 0; a < t.cells0; ++a) t.identity1.push_back(c.hid_cell(a));
  for (Id x = 0; x < c.cell_count(); ++x) t.identity2.push_back(local[c.c1().identity(x)]);
  for (Id q : glob)
    for (Id p : glob) t.vertical.push_back(lookup(c.vcomp(q, p)));
  for (Id x = 0; x < c.cell_count(); ++x)
    for (Id y = 0; y < c.cell_count(); ++y) t.horizontal1.push_back(c.hcomp_cells(x, y));
  for (Id p : glob)
    for (Id q : glob) t.horizontal2.push_back(lookup(c.hcomp(p, q)));
  t.cell0_names = c.c0().table().object_names;
  t.cell1_names = c.c1().table().object_names;
  if (!c.c1().table().morphism_names.empty())
    for (Id p : glob) t.cell2_names.push_back(c.c1().morphism_name(p));
  return Horizontalization{StrictBicategory(std::move(t)), glob};
}

DecoratedBicategory decorated_horizontalization(const DoubleCategory& c) {
  return DecoratedBicategory(c.c0(), horizontalization(c).bicat);
}

DoubleCategory horizontal_double_category(const StrictBicategory& b) {
  const std::size_t n0 = b.cells0_count();
  DoubleCategoryTable t;
  t.objects = make_category_table(n0, [&] {
    std::vector<Arrow> arrows;
    for (Id a = 0; a < n0; ++a) arrows.push_back(Arrow{a, a});
    return arrows;
  }(), identity_map(n0), [](Id g, Id) { return g; });
  t.objects.object_names = b.table().cell0_names;
  t.morphisms = b.vertical_category().table();
  for (Id x = 0; x < b.cells1_count(); ++x) {
    t.source.objects.push_back(b.dom0(x));
    t.target.objects.push_back(b.cod0(x));
  }
  for (Id p = 0; p < b.cells2_count(); ++p) {
    t.source.morphisms.push_back(b.dom0(b.dom1(p)));
    t.target.morphisms.push_back(b.cod0(b.dom1(p)));
  }
  for (Id a = 0; a < n0; ++a) {
    t.identity.objects.push_back(b.id1(a));
    t.identity.morphisms.push_back(b.id2(b.id1(a)));
  }
  t.horizontal_cells = b.table().horizontal1;
  t.horizontal_squares = b.table().horizontal2;
  return DoubleCategory(std::move(t));
}

LawReport check_double_functor(const DoubleCategory& c, const DoubleCategory& d, const DoubleFunctor& f) {
  LawReport report;
  report.merge(check_functor(c.c0(), d.c0(), f.f0), "f0-");
  report.merge(check_functor(c.c1(), d.c1(), f.f1), "f1-");
  if (!report.ok()) return report;
  const auto& ct = c.table();
  const auto& dt = d.table();
  report.law("commutes-source").require(
      compose_functors(dt.source, f.f1) == compose_functors(f.f0, ct.source),
      [] { return std::string("s F1 != F0 s"); });
  report.law("commutes-target").require(
      compose_functors(dt.target, f.f1) == compose_functors(f.f0, ct.target),
      [] { return std::string("t F1 != F0 t"); });
  report.law("commutes-identity").require(
      compose_functors(f.f1, ct.identity) == compose_functors(dt.identity, f.f0),
      [] { return std::string("F1 i != i F0"); });
  auto h = report.law("preserves-hcomp");
  for (Id x = 0; x < c.cell_count(); ++x)
    for (Id y = 0; y < c.cell_count(); ++y) {
      const Id xy = c.hcomp_cells(x, y);
      if (xy == kNoId) continue;
      h.require(f.f1.objects[xy] == d.hcomp_cells(f.f1.objects[x], f.f1.objects[y]),
                [&] { return fmt::format("1-cells ({}, {})", x, y); });
    }
  for (Id p = 0; p < c.square_count(); ++p)
    for (Id q = 0; q < c.square_count(); ++q) {
      const Id pq = c.hcomp(p, q);
      if (pq == kNoId) continue;
      h.require(f.f1.morphisms[pq] == d.hcomp(f.f1.morphisms[p], f.f1.morphisms[q]),
                [&] { return fmt::format("squares ({}, {})", p, q); });
    }
  return report;
}

DoubleFunctor identity_double_functor(const DoubleCategory& c) {
  return DoubleFunctor{identity_functor(c.c0()), identity_functor(c.c1())};
}

DoubleFunctor compose_double_functors(const DoubleFunctor& after, const DoubleFunctor& before) {
  return DoubleFunctor{compose_functors(after.f0, before.f0), compose_functors(after.f1, before.f1)};
}

SubDoubleCategory restrict_squares(const DoubleCategory& c, const std::vector<char>& keep) {
  if (keep.size() != c.square_count()) throw ShapeError("restrict_squares: flag vector size");
  std::vector<Id> squares, local(c.square_count(), kNoId);
  for (Id p = 0; p < c.square_count(); ++p)
    if (keep[p]) {
      local[p] = static_cast<Id>(squares.size());
      squares.push_back(p);
    }
  auto lookup = [&](Id p) { return p == kNoId ? kNoId : local[p]; };
  const auto& ct = c.table();

  DoubleCategoryTable t;
  t.objects = ct.objects;
  t.morphisms.objects = c.cell_count();
  t.morphisms.object_names = ct.morphisms.object_names;
  for (Id p : squares) t.morphisms.morphisms.push_back(Arrow{c.top(p), c.bottom(p)});
  for (Id x = 0; x < c.cell_count(); ++x) t.morphisms.identity.push_back(lookup(c.c1().identity(x)));
  for (Id q : squares)
    for (Id p : squares) t.morphisms.compose.push_back(lookup(c.vcomp(q, p)));
  if (!ct.morphisms.morphism_names.empty())
    for (Id p : squares) t.morphisms.morphism_names.push_back(ct.morphisms.morphism_names[p]);
  t.source.objects = ct.source.objects;
  t.target.objects = ct.target.objects;
  for (Id p : squares) {
    t.source.morphisms.push_back(c.source(p));
    t.target.morphisms.push_back(c.target(p));
  }
  t.identity.objects = ct.identity.objects;
  for (Id f = 0; f < c.c0().morphism_count(); ++f) t.identity.morphisms.push_back(lookup(c.hid_square(f)));
  t.horizontal_cells = ct.horizontal_cells;
  for (Id p : squares)
    for (Id q : squares) t.horizontal_squares.push_back(lookup(c.hcomp(p, q)));
  return SubDoubleCategory{DoubleCategory(std::move(t)), std::move(squares)};
}

}  // namespace dlift
