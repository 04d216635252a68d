#include "doublelift/adjoint.hpp"

#include <fmt/format.h>

#include <optional>

namespace dlift {

Precosheaf extract_phi(const DoubleCategory& c) {
  const Category& c0 = c.c0();
  if (c0.object_count() != 1) throw ShapeError("extract_phi: C0 must have exactly one object");
  const Monoid g = endomorphism_monoid(c0, 0).monoid;
  if (!g.is_group()) throw ShapeError("extract_phi: C0 is not the delooping of a group");
  if (c.cell_count() != 1) throw ShapeError("extract_phi: there must be exactly one horizontal 1-cell");
  if (!is_gg(c)) throw ShapeError("extract_phi: C is not globularily generated");
  if (vertical_length(c) != 1) throw ShapeError("extract_phi: C does not have vertical length 1");

  const Horizontalization h = horizontalization(c);
  std::vector<Id> local(c.square_count(), kNoId);
  for (Id k = 0; k < h.squares.size(); ++k) local[h.squares[k]] = k;
  EndCategory fiber = end_category(h.bicat, 0);

  std::vector<Functor> action;
  for (Id x = 0; x < c0.morphism_count(); ++x) {
    const Id ig = c.hid_square(x), inv = c.hid_square(g.inverse(x));
    Functor f{{0}, {}};
    for (Id a : h.squares) f.morphisms.push_back(local[c.vcomp(ig, c.vcomp(a, inv))]);
    action.push_back(std::move(f));
  }
  return Precosheaf(c0, {std::move(fiber.category)}, std::move(action));
}

PiFunctor pi_functor(const DoubleCategory& c) {
  const Precosheaf phi = extract_phi(c);
  Lift lifted = lift(decorated_horizontalization(c), phi);
  const Horizontalization h = horizontalization(c);
  const Category& c0 = c.c0();

  DoubleFunctor f{identity_functor(c0), Functor{identity_map(c.cell_count()), {}}};
  for (const auto& s : lifted.squares) {
    const Id a = h.squares[s.cell];
    f.f1.morphisms.push_back(c0.is_identity(s.src) ? a : c.vcomp(a, c.hid_square(s.src)));
  }
  check_double_functor(lifted.category, c, f).throw_if_failed();

  PiFunctor out{std::move(lifted), std::move(f)};
  out.full = is_full(out.lifted.category.c1(), c.c1(), out.functor.f1);
  std::vector<char> hit(c.square_count(), 0);
  out.injective = true;
  for (Id p : out.functor.f1.morphisms) {
    if (hit[p]) out.injective = false;
    hit[p] = 1;
  }
  out.fixes_horizontalization = fixes_horizontalization(out.lifted.category, c, out.functor);
  return out;
}

NaturalTransformation phi_of_double_functor(const DoubleCategory& c, const DoubleCategory& d,
                                            const DoubleFunctor& f) {
  if (!(c.c0() == d.c0()) || f.f0 != identity_functor(c.c0()))
    throw ShapeError("phi_of_double_functor: F0 must be the identity");
  const Precosheaf from = extract_phi(c);
  const Precosheaf to = extract_phi(d);
  const auto gc = globular_squares(c);
  const auto gd = globular_squares(d);
  std::vector<Id> local(d.square_count(), kNoId);
  for (Id k = 0; k < gd.size(); ++k) local[gd[k]] = k;

  Functor component{{0}, {}};
  for (Id p : gc) {
    const Id image = local[f.f1.morphisms[p]];
    if (image == kNoId)
      throw LawViolation("globular-preservation", fmt::format("globular square {} leaves the globulars", p));
    component.morphisms.push_back(image);
  }
  NaturalTransformation eta{{std::move(component)}};
  check_natural_transformation(from, to, eta).throw_if_failed();
  return eta;
}

std::vector<NaturalTransformation> enumerate_transformations(const Precosheaf& from, const Precosheaf& to) {
  if (from.base().object_count() != 1 || from.fiber(0).base().object_count() != 1)
    throw ShapeError("enumerate_transformations: one-object base and fiber required");
  const Monoid a = endomorphism_monoid(from.fiber(0).base(), 0).monoid;
  std::vector<NaturalTransformation> out;
  for (auto& e : endomorphisms(a)) {
    NaturalTransformation eta{{Functor{{0}, std::move(e)}}};
    if (check_natural_transformation(from, to, eta).ok()) out.push_back(std::move(eta));
  }
  return out;
}

Relabeling relabel_squares(const DoubleCategory& c, const std::vector<Id>& perm) {
  const std::size_t ns = c.square_count();
  if (perm.size() != ns || !is_bijective(perm, ns)) throw ShapeError("relabel_squares: not a permutation");
  for (Id p : globular_squares(c))
    if (perm[p] != p) throw ShapeError("relabel_squares: globular squares must stay fixed");
  const auto& ct = c.table();
  std::vector<Id> inverse(ns);
  for (Id p = 0; p < ns; ++p) inverse[perm[p]] = p;
  auto map = [&](Id p) { return p == kNoId ? kNoId : perm[p]; };

  DoubleCategoryTable t = ct;
  for (Id n = 0; n < ns; ++n) {
    const Id p = inverse[n];
    t.morphisms.morphisms[n] = ct.morphisms.morphisms[p];
    t.source.morphisms[n] = ct.source.morphisms[p];
    t.target.morphisms[n] = ct.target.morphisms[p];
    if (!ct.morphisms.morphism_names.empty()) t.morphisms.morphism_names[n] = ct.morphisms.morphism_names[p];
    for (Id m = 0; m < ns; ++m) {
      const Id q = inverse[m];
      t.morphisms.compose[pair_index(n, m, ns)] = map(ct.morphisms.compose[pair_index(p, q, ns)]);
      t.horizontal_squares[pair_index(n, m, ns)] = map(ct.horizontal_squares[pair_index(p, q, ns)]);
    }
  }
  for (auto& id : t.morphisms.identity) id = map(id);
  for (auto& id : t.identity.morphisms) id = map(id);
  DoubleCategory relabeled(std::move(t));
  DoubleFunctor f{identity_functor(c.c0()), Functor{identity_map(c.cell_count()), perm}};
  check_double_functor(c, relabeled, f).throw_if_failed();
  return Relabeling{std::move(relabeled), std::move(f)};
}

LawReport check_triangle_identities(const Monoid& g, const Monoid& a, const std::vector<Precosheaf>& phis,
                                    const std::vector<ExtraInternalization>& extra) {
  LawReport report;
  const DecoratedBicategory dec(delooping(g), suspend(monoidal_delooping(a)));

  auto construct = report.law("construction");
  std::vector<std::optional<Lift>> lifts;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    try {
      lifts.emplace_back(lift(dec, phis[i]));
    } catch (const std::exception& e) {
      lifts.emplace_back(std::nullopt);
      construct.require(false, [&] { return fmt::format("pre-cosheaf {}: {}", i, e.what()); });
    }
  }

  auto unit = report.law("unit-round-trip");
  auto counit = report.law("counit-at-lift");
  auto phi_counit = report.law("phi-of-counit");
  auto full = report.law("pi-full");
  auto fixes = report.law("pi-fixes-horizontalization");
  auto natural = report.law("counit-naturality");

  auto check_internalization = [&](const DoubleCategory& c, const std::string& label) -> std::optional<PiFunctor> {
    try {
      PiFunctor pi = pi_functor(c);
      full.require(pi.full, [&] { return label; });
      fixes.require(pi.fixes_horizontalization, [&] { return label; });
      const auto eta = phi_of_double_functor(pi.lifted.category, c, pi.functor);
      phi_counit.require(eta == identity_transformation(extract_phi(c)), [&] { return label; });
      return pi;
    } catch (const std::exception& e) {
      construct.require(false, [&] { return fmt::format("{}: {}", label, e.what()); });
      return std::nullopt;
    }
  };

  std::vector<std::optional<PiFunctor>> pis;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (!lifts[i]) {
      pis.emplace_back(std::nullopt);
      continue;
    }
    const DoubleCategory& c = lifts[i]->category;
    const std::string label = fmt::format("lift of pre-cosheaf {}", i);
    try {
      unit.require(extract_phi(c) == phis[i], [&] { return label; });
    } catch (const std::exception& e) {
      unit.require(false, [&] { return fmt::format("{}: {}", label, e.what()); });
    }
    auto pi = check_internalization(c, label);
    if (pi)
      counit.require(pi->lifted.category == c && pi->functor == identity_double_functor(c),
                     [&] { return label; });
    pis.push_back(std::move(pi));
  }
  std::vector<std::optional<PiFunctor>> extra_pis;
  for (std::size_t e = 0; e < extra.size(); ++e)
    extra_pis.push_back(check_internalization(extra[e].category, fmt::format("extra internalization {}", e)));

  // eps_D o C^{Φ^F} = F o eps_C for F : C -> D.
  auto naturality = [&](const DoubleCategory& c, const PiFunctor& pc, const DoubleCategory& d,
                        const PiFunctor& pd, const DoubleFunctor& f, const std::string& label) {
    try {
      const auto eta = phi_of_double_functor(c, d, f);
      const auto lifted = lift_functor(pc.lifted, pd.lifted, eta);
      natural.require(compose_double_functors(pd.functor, lifted) == compose_double_functors(f, pc.functor),
                      [&] { return label; });
    } catch (const std::exception& e) {
      natural.require(false, [&] { return fmt::format("{}: {}", label, e.what()); });
    }
  };

  for (std::size_t i = 0; i < phis.size(); ++i)
    for (std::size_t j = 0; j < phis.size(); ++j) {
      if (!pis[i] || !pis[j]) continue;
      const auto etas = enumerate_transformations(phis[i], phis[j]);
      for (std::size_t k = 0; k < etas.size(); ++k) {
        const DoubleFunctor f = lift_functor(*lifts[i], *lifts[j], etas[k]);
        naturality(lifts[i]->category, *pis[i], lifts[j]->category, *pis[j], f,
                   fmt::format("transformation {} from {} to {}", k, i, j));
        for (std::size_t e = 0; e < extra.size(); ++e) {
          if (extra[e].of != j || !extra_pis[e]) continue;
          naturality(lifts[i]->category, *pis[i], extra[e].category, *extra_pis[e],
                     compose_double_functors(extra[e].from_lift, f),
                     fmt::format("transformation {} from {} into extra {}", k, i, e));
        }
      }
    }
  return report;
}

}  // namespace dlift
