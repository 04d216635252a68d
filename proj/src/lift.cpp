#include "doublelift/lift.hpp"

#include <fmt/format.h>

namespace dlift {

Id Lift::find(Id f, Id top, Id cell) const {
  auto it = index.find({f, top, cell});
  return it == index.end() ? kNoId : it->second;
}

Lift lift(const DecoratedBicategory& dec, const Precosheaf& phi) {
  ExtendedTotal ext = extended_total(dec, phi);
  const Category& c = dec.decoration();
  const StrictBicategory& b = dec.bicat();
  const auto& sq = ext.squares;
  const std::size_t ns = sq.size();

  std::map<std::tuple<Id, Id, Id>, Id> index;
  for (Id k = 0; k < ns; ++k) index[{sq[k].src, sq[k].top, sq[k].cell}] = k;

  DoubleCategoryTable t;
  t.objects = c.table();
  t.morphisms = ext.category.table();
  for (Id x = 0; x < b.cells1_count(); ++x) {
    t.source.objects.push_back(b.dom0(x));
    t.target.objects.push_back(b.cod0(x));
  }
  for (const auto& s : sq) {
    t.source.morphisms.push_back(s.src);
    t.target.morphisms.push_back(s.tgt);
  }
  for (Id a = 0; a < c.object_count(); ++a) t.identity.objects.push_back(b.id1(a));
  for (Id f = 0; f < c.morphism_count(); ++f) {
    const Id ia = b.id1(c.dom(f)), ib = b.id1(c.cod(f));
    t.identity.morphisms.push_back(c.is_identity(f) ? b.id2(ia) : index.at({f, ia, b.id2(ib)}));
  }
  t.horizontal_cells = b.table().horizontal1;
  t.horizontal_squares.assign(ns * ns, kNoId);
  for (Id p = 0; p < ns; ++p)
    for (Id q = 0; q < ns; ++q) {
      if (sq[p].tgt != sq[q].src) continue;
      const Id cell = b.hcomp2(sq[p].cell, sq[q].cell);
      Id r = kNoId;
      if (c.is_identity(sq[p].src) && c.is_identity(sq[q].tgt))
        r = cell;
      else
        r = index.at({sq[p].src, b.hcomp1(sq[p].top, sq[q].top), cell});
      t.horizontal_squares[pair_index(p, q, ns)] = r;
    }
  return Lift{DoubleCategory(std::move(t)), std::move(ext.squares), std::move(index), phi};
}

Precosheaf constant_precosheaf(const DecoratedBicategory& dec) {
  const Category& c = dec.decoration();
  std::vector<StrictMonoidalCategory> fibers;
  for (Id a = 0; a < c.object_count(); ++a) fibers.push_back(end_category(dec.bicat(), a).category);
  std::vector<Functor> action;
  for (Id f = 0; f < c.morphism_count(); ++f) {
    const auto& src = fibers[c.dom(f)];
    const auto& dst = fibers[c.cod(f)];
    if (c.is_identity(f)) {
      action.push_back(identity_functor(src.base()));
      continue;
    }
    const Id unit = dst.unit();
    action.push_back(Functor{std::vector<Id>(src.base().object_count(), unit),
                             std::vector<Id>(src.base().morphism_count(), dst.base().identity(unit))});
  }
  return Precosheaf(c, std::move(fibers), std::move(action));
}

LawReport check_natural_transformation(const Precosheaf& from, const Precosheaf& to,
                                       const NaturalTransformation& eta) {
  LawReport report;
  const Category& c = from.base();
  auto wf = report.law("component-well-formed");
  wf.require(to.base() == c && eta.components.size() == c.object_count(),
             [] { return std::string("components do not match the base"); });
  for (Id a = 0; wf.passed() && a < c.object_count(); ++a)
    wf.require(from.fiber(a) == to.fiber(a), [&] { return fmt::format("fibers over {} differ", a); });
  if (!wf.passed()) return report;
  auto mono = report.law("component-strict-monoidal");
  for (Id a = 0; a < c.object_count(); ++a) {
    auto r = check_strict_monoidal_functor(from.fiber(a), to.fiber(a), eta.components[a]);
    mono.require(r.ok(), [&] { return fmt::format("component at {}: {}", a, r.first_failure()->law); });
  }
  if (!mono.passed()) return report;
  auto nat = report.law("naturality");
  for (Id f = 0; f < c.morphism_count(); ++f)
    nat.require(compose_functors(eta.components[c.cod(f)], from.action(f)) ==
                    compose_functors(to.action(f), eta.components[c.dom(f)]),
                [&] { return fmt::format("morphism {}", f); });
  return report;
}

NaturalTransformation identity_transformation(const Precosheaf& phi) {
  NaturalTransformation eta;
  for (const auto& fiber : phi.fibers()) eta.components.push_back(identity_functor(fiber.base()));
  return eta;
}

NaturalTransformation compose_transformations(const NaturalTransformation& after,
                                              const NaturalTransformation& before) {
  if (after.components.size() != before.components.size())
    throw ShapeError("compose_transformations: component counts differ");
  NaturalTransformation eta;
  for (std::size_t k = 0; k < after.components.size(); ++k)
    eta.components.push_back(compose_functors(after.components[k], before.components[k]));
  return eta;
}

DoubleFunctor lift_functor(const Lift& source, const Lift& target, const NaturalTransformation& eta) {
  check_natural_transformation(source.phi, target.phi, eta).throw_if_failed();
  const DoubleCategory& cs = source.category;
  const DoubleCategory& ct = target.category;
  const DecoratedBicategory dec = decorated_horizontalization(cs);
  if (!(dec == decorated_horizontalization(ct)))
    throw ShapeError("lift_functor: the lifts are over different decorated bicategories");
  const Category& c = dec.decoration();
  const StrictBicategory& b = dec.bicat();
  if (eta.components.size() != c.object_count())
    throw ShapeError("lift_functor: one component per object is required");

  std::vector<EndCategory> ends;
  std::vector<Id> local1(b.cells1_count(), kNoId), local2(b.cells2_count(), kNoId);
  for (Id a = 0; a < c.object_count(); ++a) {
    ends.push_back(end_category(b, a));
    for (Id k = 0; k < ends[a].cells1.size(); ++k) local1[ends[a].cells1[k]] = k;
    for (Id k = 0; k < ends[a].cells2.size(); ++k) local2[ends[a].cells2[k]] = k;
  }
  auto cell1 = [&](Id x) {
    if (!b.is_endo(x)) return x;
    const Id a = b.dom0(x);
    return ends[a].cells1[eta.components[a].objects[local1[x]]];
  };
  auto cell2 = [&](Id p) {
    if (!b.is_endo(b.dom1(p))) return p;
    const Id a = b.dom0(b.dom1(p));
    return ends[a].cells2[eta.components[a].morphisms[local2[p]]];
  };

  DoubleFunctor f{identity_functor(c), Functor{}};
  for (Id x = 0; x < b.cells1_count(); ++x) f.f1.objects.push_back(cell1(x));
  for (const auto& s : source.squares) {
    if (c.is_identity(s.src)) {
      f.f1.morphisms.push_back(cell2(s.cell));
      continue;
    }
    const Id image = target.find(s.src, cell1(s.top), cell2(s.cell));
    if (image == kNoId)
      throw LawViolation("naturality", fmt::format("square over {} has no image", s.src));
    f.f1.morphisms.push_back(image);
  }
  check_double_functor(cs, ct, f).throw_if_failed();
  return f;
}

bool fixes_horizontalization(const DoubleCategory& source, const DoubleCategory& target,
                             const DoubleFunctor& f) {
  if (!(source.c0() == target.c0()) || source.cell_count() != target.cell_count()) return false;
  if (f.f0 != identity_functor(source.c0())) return false;
  if (f.f1.objects != identity_map(source.cell_count())) return false;
  const auto from = globular_squares(source);
  const auto to = globular_squares(target);
  if (from.size() != to.size()) return false;
  for (std::size_t k = 0; k < from.size(); ++k)
    if (f.f1.morphisms[from[k]] != to[k]) return false;
  return true;
}

}  // namespace dlift
