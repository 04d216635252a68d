#include "doublelift/twocat.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace dlift {

namespace {

CategoryTable vertical_table(const BicategoryTable& t) {
  CategoryTable c;
  c.objects = t.cells1.size();
  c.morphisms.reserve(t.cells2.size());
  for (const auto& cell : t.cells2) c.morphisms.push_back(Arrow{cell.dom1, cell.cod1});
  c.identity = t.identity2;
  c.compose = t.vertical;
  c.object_names = t.cell1_names;
  c.morphism_names = t.cell2_names;
  return c;
}

}  // namespace

LawReport check_laws(const BicategoryTable& t) {
  LawReport report;
  const std::size_t n0 = t.cells0, n1 = t.cells1.size(), n2 = t.cells2.size();
  auto wf = report.law("well-formed");
  wf.require(t.identity1.size() == n0 && t.identity2.size() == n1,
             [] { return std::string("identity table sizes"); });
  wf.require(t.vertical.size() == n2 * n2 && t.horizontal2.size() == n2 * n2 &&
                 t.horizontal1.size() == n1 * n1,
             [] { return std::string("composition table sizes"); });
  wf.require(t.cell0_names.empty() || t.cell0_names.size() == n0, [] { return std::string("0-cell names"); });
  wf.require(t.cell1_names.empty() || t.cell1_names.size() == n1, [] { return std::string("1-cell names"); });
  wf.require(t.cell2_names.empty() || t.cell2_names.size() == n2, [] { return std::string("2-cell names"); });
  if (!wf.passed()) return report;
  for (Id x = 0; x < n1; ++x)
    wf.require(t.cells1[x].dom0 < n0 && t.cells1[x].cod0 < n0,
               [&] { return fmt::format("1-cell {} has out-of-range boundary", x); });
  for (Id p = 0; p < n2; ++p)
    wf.require(t.cells2[p].dom1 < n1 && t.cells2[p].cod1 < n1,
               [&] { return fmt::format("2-cell {} has out-of-range boundary", p); });
  for (Id a = 0; a < n0; ++a)
    wf.require(t.identity1[a] < n1, [&] { return fmt::format("identity of 0-cell {}", a); });
  for (Id x = 0; x < n1; ++x)
    wf.require(t.identity2[x] < n2, [&] { return fmt::format("identity of 1-cell {}", x); });
  for (Id c : t.horizontal1)
    wf.require(c == kNoId || c < n1, [&] { return fmt::format("1-cell composite {} out of range", c); });
  for (Id c : t.horizontal2)
    wf.require(c == kNoId || c < n2, [&] { return fmt::format("2-cell composite {} out of range", c); });
  if (!wf.passed()) return report;

  const auto& c1 = t.cells1;
  const auto& c2 = t.cells2;
  auto glob = report.law("globular");
  for (Id p = 0; p < n2; ++p)
    glob.require(c1[c2[p].dom1].dom0 == c1[c2[p].cod1].dom0 && c1[c2[p].dom1].cod0 == c1[c2[p].cod1].cod0,
                 [&] { return fmt::format("2-cell {} joins non-parallel 1-cells", p); });
  auto ids = report.law("identity-boundary");
  for (Id a = 0; a < n0; ++a)
    ids.require(c1[t.identity1[a]].dom0 == a && c1[t.identity1[a]].cod0 == a,
                [&] { return fmt::format("identity 1-cell of {}", a); });
  if (!glob.passed() || !ids.passed()) return report;

  report.merge(check_laws(vertical_table(t)), "vertical-");
  if (!report.ok()) return report;

  auto h1 = [&](Id x, Id y) { return t.horizontal1[pair_index(x, y, n1)]; };
  auto h2 = [&](Id p, Id q) { return t.horizontal2[pair_index(p, q, n2)]; };
  auto v = [&](Id q, Id p) { return t.vertical[pair_index(q, p, n2)]; };

  auto domain = report.law("horizontal-domain");
  auto boundary = report.law("horizontal-boundary");
  for (Id x = 0; x < n1; ++x)
    for (Id y = 0; y < n1; ++y) {
      const bool composable = c1[x].cod0 == c1[y].dom0;
      const Id xy = h1(x, y);
      domain.require(composable == (xy != kNoId), [&] { return fmt::format("1-cells ({}, {})", x, y); });
      if (composable && xy != kNoId)
        boundary.require(c1[xy].dom0 == c1[x].dom0 && c1[xy].cod0 == c1[y].cod0,
                         [&] { return fmt::format("1-cells ({}, {})", x, y); });
    }
  for (Id p = 0; p < n2; ++p)
    for (Id q = 0; q < n2; ++q) {
      const bool composable = c1[c2[p].dom1].cod0 == c1[c2[q].dom1].dom0;
      const Id pq = h2(p, q);
      domain.require(composable == (pq != kNoId), [&] { return fmt::format("2-cells ({}, {})", p, q); });
      if (composable && pq != kNoId)
        boundary.require(c2[pq].dom1 == h1(c2[p].dom1, c2[q].dom1) && c2[pq].cod1 == h1(c2[p].cod1, c2[q].cod1),
                         [&] { return fmt::format("2-cells ({}, {})", p, q); });
    }
  if (!domain.passed() || !boundary.passed()) return report;

  std::vector<std::vector<Id>> cells_from(n0), squares_from(n1);
  for (Id x = 0; x < n1; ++x) cells_from[c1[x].dom0].push_back(x);
  for (Id p = 0; p < n2; ++p) squares_from[c2[p].dom1].push_back(p);
  std::vector<std::vector<Id>> two_from(n0);
  for (Id p = 0; p < n2; ++p) two_from[c1[c2[p].dom1].dom0].push_back(p);

  auto unit = report.law("horizontal-unit");
  auto assoc = report.law("horizontal-associativity");
  for (Id x = 0; x < n1; ++x) {
    unit.require(h1(t.identity1[c1[x].dom0], x) == x && h1(x, t.identity1[c1[x].cod0]) == x,
                 [&] { return fmt::format("1-cell {}", x); });
    for (Id y : cells_from[c1[x].cod0])
      for (Id z : cells_from[c1[y].cod0])
        assoc.require(h1(h1(x, y), z) == h1(x, h1(y, z)),
                      [&] { return fmt::format("1-cells ({}, {}, {})", x, y, z); });
  }
  for (Id p = 0; p < n2; ++p) {
    const Id a = c1[c2[p].dom1].dom0, b = c1[c2[p].dom1].cod0;
    unit.require(h2(t.identity2[t.identity1[a]], p) == p && h2(p, t.identity2[t.identity1[b]]) == p,
                 [&] { return fmt::format("2-cell {}", p); });
    for (Id q : two_from[b])
      for (Id r : two_from[c1[c2[q].dom1].cod0])
        assoc.require(h2(h2(p, q), r) == h2(p, h2(q, r)),
                      [&] { return fmt::format("2-cells ({}, {}, {})", p, q, r); });
  }

  auto hid = report.law("horizontal-identities");
  for (Id x = 0; x < n1; ++x)
    for (Id y : cells_from[c1[x].cod0])
      hid.require(h2(t.identity2[x], t.identity2[y]) == t.identity2[h1(x, y)],
                  [&] { return fmt::format("1-cells ({}, {})", x, y); });

  auto inter = report.law("interchange");
  for (Id p = 0; p < n2; ++p)
    for (Id q : two_from[c1[c2[p].dom1].cod0])
      for (Id p2 : squares_from[c2[p].cod1])
        for (Id q2 : squares_from[c2[q].cod1])
          inter.require(v(h2(p2, q2), h2(p, q)) == h2(v(p2, p), v(q2, q)), [&] {
            return fmt::format("({} * {}) o ({} * {})", p2, q2, p, q);
          });
  return report;
}

StrictBicategory::StrictBicategory(BicategoryTable table) : table_(std::move(table)) {
  check_laws(table_).throw_if_failed();
}

Category StrictBicategory::vertical_category() const { return Category(vertical_table(table_)); }

bool operator==(const StrictBicategory& a, const StrictBicategory& b) {
  const auto& x = a.table_;
  const auto& y = b.table_;
  return x.cells0 == y.cells0 && x.cells1 == y.cells1 && x.cells2 == y.cells2 &&
         x.identity1 == y.identity1 && x.identity2 == y.identity2 && x.vertical == y.vertical &&
         x.horizontal1 == y.horizontal1 && x.horizontal2 == y.horizontal2;
}

DecoratedBicategory::DecoratedBicategory(Category decoration, StrictBicategory bicat)
    : decoration_(std::move(decoration)), bicat_(std::move(bicat)) {
  if (decoration_.object_count() != bicat_.cells0_count())
    throw ShapeError(fmt::format("decoration has {} objects but the bicategory has {} 0-cells",
                                 decoration_.object_count(), bicat_.cells0_count()));
}

DecoratedBicategory decorate(Category decoration, StrictBicategory bicat) {
  return DecoratedBicategory(std::move(decoration), std::move(bicat));
}

namespace {

// Full subcategory of the vertical category on the chosen 1-cells.
Category vertical_restriction(const StrictBicategory& b, const std::vector<Id>& cells1,
                              std::vector<Id>& cells2) {
  std::vector<Id> local1(b.cells1_count(), kNoId);
  for (Id k = 0; k < cells1.size(); ++k) local1[cells1[k]] = k;
  cells2.clear();
  for (Id p = 0; p < b.cells2_count(); ++p)
    if (local1[b.dom1(p)] != kNoId) cells2.push_back(p);
  std::vector<Id> local2(b.cells2_count(), kNoId);
  for (Id k = 0; k < cells2.size(); ++k) local2[cells2[k]] = k;

  std::vector<Arrow> arrows;
  for (Id p : cells2) arrows.push_back(Arrow{local1[b.dom1(p)], local1[b.cod1(p)]});
  std::vector<Id> ids;
  for (Id x : cells1) ids.push_back(local2[b.id2(x)]);
  auto t = make_category_table(cells1.size(), std::move(arrows), std::move(ids),
                               [&](Id q, Id p) { return local2[b.vcomp(cells2[q], cells2[p])]; });
  const auto& bt = b.table();
  if (!bt.cell1_names.empty())
    for (Id x : cells1) t.object_names.push_back(bt.cell1_names[x]);
  if (!bt.cell2_names.empty())
    for (Id p : cells2) t.morphism_names.push_back(bt.cell2_names[p]);
  return Category(std::move(t));
}

}  // namespace

CellSplit split_cells(const StrictBicategory& b) {
  std::vector<Id> endo1, rest1, endo2, rest2;
  for (Id x = 0; x < b.cells1_count(); ++x) (b.is_endo(x) ? endo1 : rest1).push_back(x);
  Category endo = vertical_restriction(b, endo1, endo2);
  Category rest = vertical_restriction(b, rest1, rest2);
  return CellSplit{std::move(endo), std::move(rest), std::move(endo1), std::move(endo2),
                   std::move(rest1), std::move(rest2)};
}

StrictBicategory suspend(const StrictMonoidalCategory& d) {
  const Category& c = d.base();
  BicategoryTable t;
  t.cells0 = 1;
  t.cells1.assign(c.object_count(), Cell1{0, 0});
  for (Id f = 0; f < c.morphism_count(); ++f) t.cells2.push_back(Cell2{c.dom(f), c.cod(f)});
  t.identity1 = {d.unit()};
  t.identity2 = c.table().identity;
  t.vertical = c.table().compose;
  const auto md = d.table();
  t.horizontal1 = md.tensor_objects;
  t.horizontal2 = md.tensor_morphisms;
  t.cell0_names = {"*"};
  t.cell1_names = c.table().object_names;
  t.cell2_names = c.table().morphism_names;
  return StrictBicategory(std::move(t));
}

EndCategory end_category(const StrictBicategory& b, Id a) {
  if (a >= b.cells0_count()) throw ShapeError(fmt::format("end_category: unknown 0-cell {}", a));
  std::vector<Id> cells1;
  for (Id x = 0; x < b.cells1_count(); ++x)
    if (b.dom0(x) == a && b.cod0(x) == a) cells1.push_back(x);
  std::vector<Id> cells2;
  Category base = vertical_restriction(b, cells1, cells2);

  std::vector<Id> local1(b.cells1_count(), kNoId), local2(b.cells2_count(), kNoId);
  for (Id k = 0; k < cells1.size(); ++k) local1[cells1[k]] = k;
  for (Id k = 0; k < cells2.size(); ++k) local2[cells2[k]] = k;

  MonoidalTable t;
  t.base = base.table();
  t.unit = local1[b.id1(a)];
  for (Id x : cells1)
    for (Id y : cells1) t.tensor_objects.push_back(local1[b.hcomp1(x, y)]);
  for (Id p : cells2)
    for (Id q : cells2) t.tensor_morphisms.push_back(local2[b.hcomp2(p, q)]);
  return EndCategory{StrictMonoidalCategory(std::move(t)), std::move(cells1), std::move(cells2)};
}

StrictBicategory locally_discrete(const Category& x) {
  BicategoryTable t;
  const std::size_t n = x.morphism_count();
  t.cells0 = x.object_count();
  for (Id f = 0; f < n; ++f) {
    t.cells1.push_back(Cell1{x.dom(f), x.cod(f)});
    t.cells2.push_back(Cell2{f, f});
  }
  t.identity1 = x.table().identity;
  t.identity2 = identity_map(n);
  t.vertical.assign(n * n, kNoId);
  t.horizontal1.assign(n * n, kNoId);
  for (Id f = 0; f < n; ++f) {
    t.vertical[pair_index(f, f, n)] = f;
    for (Id g = 0; g < n; ++g)
      if (x.cod(f) == x.dom(g)) t.horizontal1[pair_index(f, g, n)] = x.compose(g, f);
  }
  t.horizontal2 = t.horizontal1;
  t.cell0_names = x.table().object_names;
  t.cell1_names = x.table().morphism_names;
  t.cell2_names = x.table().morphism_names;
  return StrictBicategory(std::move(t));
}

}  // namespace dlift
