#include "doublelift/grothendieck.hpp"

#include <fmt/format.h>

#include <map>
#include <tuple>

namespace dlift {

LawReport check_precosheaf(const Category& base, const std::vector<StrictMonoidalCategory>& fibers,
                           const std::vector<Functor>& action) {
  LawReport report;
  auto wf = report.law("well-formed");
  wf.require(fibers.size() == base.object_count(),
             [&] { return fmt::format("{} fibers for {} objects", fibers.size(), base.object_count()); });
  wf.require(action.size() == base.morphism_count(),
             [&] { return fmt::format("{} actions for {} morphisms", action.size(), base.morphism_count()); });
  if (!wf.passed()) return report;

  auto mono = report.law("strict-monoidal-action");
  for (Id f = 0; f < base.morphism_count(); ++f) {
    auto r = check_strict_monoidal_functor(fibers[base.dom(f)], fibers[base.cod(f)], action[f]);
    mono.require(r.ok(), [&] {
      return fmt::format("action of morphism {}: {} ({})", f, r.first_failure()->law,
                         r.first_failure()->counterexample);
    });
  }
  if (!mono.passed()) return report;

  auto id = report.law("action-identity");
  for (Id x = 0; x < base.object_count(); ++x)
    id.require(action[base.identity(x)] == identity_functor(fibers[x].base()),
               [&] { return fmt::format("object {}", x); });
  auto comp = report.law("action-functoriality");
  for (Id g = 0; g < base.morphism_count(); ++g)
    for (Id f = 0; f < base.morphism_count(); ++f) {
      const Id gf = base.compose(g, f);
      if (gf == kNoId) continue;
      comp.require(action[gf] == compose_functors(action[g], action[f]),
                   [&] { return fmt::format("Φ({} o {}) != Φ({}) Φ({})", g, f, g, f); });
    }
  return report;
}

Precosheaf::Precosheaf(Category base, std::vector<StrictMonoidalCategory> fibers,
                       std::vector<Functor> action)
    : base_(std::move(base)), fibers_(std::move(fibers)), action_(std::move(action)) {
  check_precosheaf(base_, fibers_, action_).throw_if_failed();
}

Precosheaf action_precosheaf(const MonoidAction& phi) {
  std::vector<Functor> action;
  for (const auto& map : phi.maps()) action.push_back(Functor{{0}, map});
  return Precosheaf(delooping(phi.acting()), {monoidal_delooping(phi.target())}, std::move(action));
}

LawReport check_attached(const DecoratedBicategory& dec, const Precosheaf& phi) {
  LawReport report;
  auto base = report.law("decoration-base");
  base.require(phi.base() == dec.decoration(),
               [] { return std::string("pre-cosheaf base differs from the decoration"); });
  if (!base.passed()) return report;
  auto fiber = report.law("fiber-constraint");
  for (Id a = 0; a < dec.bicat().cells0_count(); ++a)
    fiber.require(phi.fiber(a) == end_category(dec.bicat(), a).category,
                  [&] { return fmt::format("fiber over {} is not End_B({})", a, a); });
  return report;
}

TotalCategory total_category(const Precosheaf& phi) {
  const Category& c = phi.base();
  std::vector<TotalObject> objects;
  std::map<std::pair<Id, Id>, Id> object_id;
  for (Id x = 0; x < c.object_count(); ++x)
    for (Id a = 0; a < phi.fiber(x).base().object_count(); ++a) {
      object_id[{x, a}] = static_cast<Id>(objects.size());
      objects.push_back(TotalObject{x, a});
    }

  std::vector<TotalMorphism> morphisms;
  std::map<std::tuple<Id, Id, Id>, Id> morphism_id;
  std::vector<Arrow> arrows;
  for (Id alpha = 0; alpha < c.morphism_count(); ++alpha) {
    const Category& src = phi.fiber(c.dom(alpha)).base();
    const Category& dst = phi.fiber(c.cod(alpha)).base();
    const Functor& act = phi.action(alpha);
    for (Id a = 0; a < src.object_count(); ++a)
      for (Id beta = 0; beta < dst.morphism_count(); ++beta) {
        if (dst.dom(beta) != act.objects[a]) continue;
        morphism_id[{alpha, a, beta}] = static_cast<Id>(morphisms.size());
        morphisms.push_back(TotalMorphism{alpha, a, beta});
        arrows.push_back(Arrow{object_id.at({c.dom(alpha), a}), object_id.at({c.cod(alpha), dst.cod(beta)})});
      }
  }

  std::vector<Id> identity;
  for (const auto& o : objects)
    identity.push_back(morphism_id.at({c.identity(o.base), o.fiber, phi.fiber(o.base).base().identity(o.fiber)}));

  auto t = make_category_table(objects.size(), std::move(arrows), std::move(identity), [&](Id g, Id f) {
    const auto& second = morphisms[g];
    const auto& first = morphisms[f];
    const Category& fiber = phi.fiber(c.cod(second.base)).base();
    const Id moved = phi.action(second.base).morphisms[first.fiber];
    return morphism_id.at({c.compose(second.base, first.base), first.source, fiber.compose(second.fiber, moved)});
  });
  return TotalCategory{Category(std::move(t)), std::move(objects), std::move(morphisms)};
}

BicellAction::BicellAction(const DecoratedBicategory& dec, const Precosheaf& phi)
    : phi_(&phi),
      local1_(dec.bicat().cells1_count(), kNoId),
      local2_(dec.bicat().cells2_count(), kNoId) {
  for (Id a = 0; a < dec.bicat().cells0_count(); ++a) {
    ends_.push_back(end_category(dec.bicat(), a));
    const auto& e = ends_.back();
    for (Id k = 0; k < e.cells1.size(); ++k) local1_[e.cells1[k]] = k;
    for (Id k = 0; k < e.cells2.size(); ++k) local2_[e.cells2[k]] = k;
  }
}

Id BicellAction::cell1(Id f, Id x) const {
  const Id b = phi_->base().cod(f);
  return ends_[b].cells1[phi_->action(f).objects[local1_[x]]];
}

Id BicellAction::cell2(Id f, Id p) const {
  const Id b = phi_->base().cod(f);
  return ends_[b].cells2[phi_->action(f).morphisms[local2_[p]]];
}

ExtendedTotal extended_total(const DecoratedBicategory& dec, const Precosheaf& phi) {
  check_attached(dec, phi).throw_if_failed();
  const Category& c = dec.decoration();
  const StrictBicategory& b = dec.bicat();
  const BicellAction act(dec, phi);

  std::vector<LiftSquare> squares;
  std::vector<Id> base;  // decoration morphism underlying each square
  for (Id p = 0; p < b.cells2_count(); ++p) {
    const Id top = b.dom1(p);
    squares.push_back(LiftSquare{c.identity(b.dom0(top)), c.identity(b.cod0(top)), top, b.cod1(p), p});
    base.push_back(b.is_endo(top) ? c.identity(b.dom0(top)) : kNoId);
  }
  std::map<std::tuple<Id, Id, Id>, Id> pair_id;
  for (Id f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    for (Id alpha = 0; alpha < b.cells1_count(); ++alpha) {
      if (b.dom0(alpha) != c.dom(f) || b.cod0(alpha) != c.dom(f)) continue;
      const Id moved = act.cell1(f, alpha);
      for (Id p = 0; p < b.cells2_count(); ++p) {
        if (b.dom1(p) != moved) continue;
        pair_id[{f, alpha, p}] = static_cast<Id>(squares.size());
        squares.push_back(LiftSquare{f, f, alpha, b.cod1(p), p});
        base.push_back(f);
      }
    }
  }

  std::vector<Arrow> arrows;
  for (const auto& s : squares) arrows.push_back(Arrow{s.top, s.bottom});
  std::vector<Id> identity;
  for (Id x = 0; x < b.cells1_count(); ++x) identity.push_back(b.id2(x));

  auto t = make_category_table(b.cells1_count(), std::move(arrows), std::move(identity), [&](Id g, Id f) {
    // Non-endomorphism 2-cells compose only among themselves.
    if (base[g] == kNoId) return b.vcomp(squares[g].cell, squares[f].cell);
    const Id composite = c.compose(base[g], base[f]);
    const Id cell = b.vcomp(squares[g].cell, act.cell2(base[g], squares[f].cell));
    if (c.is_identity(composite)) return cell;
    return pair_id.at({composite, squares[f].top, cell});
  });
  const auto& bt = b.table();
  if (!bt.cell1_names.empty()) t.object_names = bt.cell1_names;
  return ExtendedTotal{Category(std::move(t)), std::move(squares)};
}

}  // namespace dlift
