#include "doublelift/examples.hpp"

#include <fmt/format.h>

#include <charconv>

namespace dlift {

// ---------------------------------------------------------------------------
// Semidirect products

SemidirectFixture build_semidirect_fixture(const MonoidAction& phi) {
  const Monoid& n = phi.target();
  const Monoid& m = phi.acting();
  DecoratedBicategory dec(delooping(m), suspend(monoidal_delooping(n)));
  Precosheaf pc = action_precosheaf(phi);
  Lift l = lift(dec, pc);
  Monoid endo = endomorphism_monoid(l.category.c1(), 0).monoid;
  Monoid semidirect = semidirect_product(phi);

  std::vector<Id> bijection;
  for (const auto& s : l.squares) bijection.push_back(static_cast<Id>(s.src * n.size() + s.cell));
  LawReport report;
  auto same = report.law("semidirect-endomorphisms");
  same.require(is_bijective(bijection, semidirect.size()), [] { return std::string("not a bijection"); });
  same.require(bijection[endo.unit()] == semidirect.unit(), [] { return std::string("units differ"); });
  for (Id x = 0; same.passed() && x < endo.size(); ++x)
    for (Id y = 0; y < endo.size(); ++y)
      same.require(bijection[endo.mul(x, y)] == semidirect.mul(bijection[x], bijection[y]),
                   [&] { return fmt::format("squares ({}, {})", x, y); });
  report.throw_if_failed();
  return SemidirectFixture{std::move(dec), std::move(pc), std::move(l), std::move(endo),
                           std::move(semidirect), std::move(bijection)};
}

// ---------------------------------------------------------------------------
// Graded categories

StrictMonoidalCategory graded_category(const Monoid& g, const Monoid& h) {
  if (!h.is_commutative()) throw ShapeError("graded_category: H must be commutative");
  const std::size_t ng = g.size(), nh = h.size(), nm = ng * nh;
  std::vector<Arrow> arrows;
  for (Id k = 0; k < ng; ++k)
    for (Id x = 0; x < nh; ++x) arrows.push_back(Arrow{k, k});
  std::vector<Id> identity;
  for (Id k = 0; k < ng; ++k) identity.push_back(static_cast<Id>(k * nh + h.unit()));
  MonoidalTable t;
  t.base = make_category_table(ng, std::move(arrows), std::move(identity), [&](Id a, Id b) {
    return static_cast<Id>((a / nh) * nh + h.mul(a % nh, b % nh));
  });
  for (Id k = 0; k < ng; ++k) t.base.object_names.push_back(fmt::format("d{}", g.element_name(k)));
  t.unit = g.unit();
  for (Id x = 0; x < ng; ++x)
    for (Id y = 0; y < ng; ++y) t.tensor_objects.push_back(g.mul(x, y));
  for (Id a = 0; a < nm; ++a)
    for (Id b = 0; b < nm; ++b)
      t.tensor_morphisms.push_back(static_cast<Id>(g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh)));
  return StrictMonoidalCategory(std::move(t));
}

StrictMonoidalCategory twisted_graded_category(const MonoidAction& phi) {
  const Monoid& g = phi.acting();
  const Monoid& h = phi.target();
  const std::size_t ng = g.size(), nh = h.size(), nm = ng * nh;
  std::vector<Arrow> arrows;
  for (Id k = 0; k < ng; ++k)
    for (Id x = 0; x < nh; ++x) arrows.push_back(Arrow{k, k});
  std::vector<Id> identity;
  for (Id k = 0; k < ng; ++k) identity.push_back(static_cast<Id>(k * nh + h.unit()));
  MonoidalTable t;
  t.base = make_category_table(ng, std::move(arrows), std::move(identity), [&](Id a, Id b) {
    return static_cast<Id>((a / nh) * nh + h.mul(a % nh, b % nh));
  });
  t.unit = g.unit();
  for (Id x = 0; x < ng; ++x)
    for (Id y = 0; y < ng; ++y) t.tensor_objects.push_back(g.mul(x, y));
  for (Id a = 0; a < nm; ++a)
    for (Id b = 0; b < nm; ++b) {
      const Id g1 = a / nh, h1 = a % nh, g0 = b / nh, h0 = b % nh;
      t.tensor_morphisms.push_back(static_cast<Id>(g.mul(g1, g0) * nh + h.mul(h1, phi.apply(g1, h0))));
    }
  return StrictMonoidalCategory(std::move(t));
}

GradedFixture build_graded_fixture(const MonoidAction& phi) {
  const Monoid& g = phi.acting();
  const Monoid& h = phi.target();
  if (!g.is_group() || !h.is_group()) throw ShapeError("build_graded_fixture: G and H must be groups");
  for (const auto& map : phi.maps())
    if (!is_bijective(map, h.size())) throw ShapeError("build_graded_fixture: Φ must act by automorphisms");

  const std::size_t nh = h.size();
  DecoratedBicategory dec(delooping(g), suspend(graded_category(g, h)));
  EndCategory fiber = end_category(dec.bicat(), 0);
  const std::size_t ncells = fiber.category.base().morphism_count();
  std::vector<Functor> action;
  for (Id x = 0; x < g.size(); ++x) {
    Functor f{identity_map(g.size()), {}};
    for (Id cell = 0; cell < ncells; ++cell)
      f.morphisms.push_back(static_cast<Id>((cell / nh) * nh + phi.apply(x, cell % nh)));
    action.push_back(std::move(f));
  }
  Precosheaf pc(dec.decoration(), {fiber.category}, std::move(action));
  Lift l = lift(dec, pc);
  const DoubleCategory& c = l.category;
  const Id unit_cell = dec.bicat().id1(0);

  std::vector<Id> squares;
  for (Id x = 0; x < g.size(); ++x)
    for (Id p = 0; p < c.square_count(); ++p)
      if (c.source(p) == x && c.top(p) == unit_cell && c.bottom(p) == unit_cell) squares.push_back(p);
  std::vector<Id> local(c.square_count(), kNoId);
  for (Id k = 0; k < squares.size(); ++k) local[squares[k]] = k;
  auto lookup = [&](Id p) { return p == kNoId ? kNoId : local[p]; };

  std::vector<Arrow> arrows;
  for (Id p : squares) arrows.push_back(Arrow{c.source(p), c.source(p)});
  std::vector<Id> identity;
  for (Id x = 0; x < g.size(); ++x) identity.push_back(lookup(c.hid_square(x)));
  MonoidalTable t;
  t.base = make_category_table(g.size(), std::move(arrows), std::move(identity),
                               [&](Id b, Id a) { return lookup(c.hcomp(squares[a], squares[b])); });
  t.unit = c.c0().identity(0);
  for (Id x = 0; x < g.size(); ++x)
    for (Id y = 0; y < g.size(); ++y) t.tensor_objects.push_back(c.c0().compose(x, y));
  for (Id a : squares)
    for (Id b : squares) t.tensor_morphisms.push_back(lookup(c.vcomp(a, b)));
  StrictMonoidalCategory vertical(std::move(t));
  StrictMonoidalCategory twisted = twisted_graded_category(phi);
  auto iso = find_monoidal_isomorphism(vertical, twisted);
  if (!iso) throw LawViolation("graded-isomorphism", "no monoidal isomorphism onto C_G(H, Φ)");
  return GradedFixture{std::move(dec), std::move(pc), std::move(l), std::move(vertical),
                       std::move(squares), std::move(twisted), std::move(*iso)};
}

// ---------------------------------------------------------------------------
// Mat

MatDecision mat_v1_membership(const MatSquare& s) {
  const RationalMatrix& p = s.payload;
  std::size_t width = 1;
  for (std::size_t k = 0; k < s.m; ++k) width *= s.top;
  if (p.rows() != s.bottom || p.cols() != width)
    throw ShapeError(fmt::format("mat square: payload is {}x{}, expected {}x{}", p.rows(), p.cols(), s.bottom, width));

  MatDecision d;
  d.rank = rank(p);
  if (s.m == 1) {
    d.member = true;
    d.reason = "globular square";
    return d;
  }
  if (d.rank == 0 || s.m == 0) {
    // psi^{⊗0} is the 1x1 identity, so eta = P; a zero payload factors through zeros.
    d.member = true;
    d.psi = RationalMatrix(1, s.top);
    d.eta = s.m == 0 ? p : RationalMatrix(s.bottom, 1);
    d.reason = s.m == 0 ? "payload leaves the unit object" : "zero payload";
    return d;
  }
  if (d.rank > 1) {
    d.reason = fmt::format("rank {} > 1: no factorization through the unit object", d.rank);
    return d;
  }
  // Rank 1: P = u w^T; w must be proportional to psi^{⊗m}.
  std::size_t row = 0, col = 0;
  while (p.at(row, col) == 0)
    if (++col == p.cols()) col = 0, ++row;
  std::size_t diagonal_step = 0;
  for (std::size_t k = 0, power = 1; k < s.m; ++k, power *= s.top) diagonal_step += power;
  std::size_t j = 0;
  while (j < s.top && p.at(row, j * diagonal_step) == 0) ++j;
  if (j == s.top) {
    d.reason = "row space misses every diagonal entry, so it is not a tensor power";
    return d;
  }
  const Rational pivot = p.at(row, j * diagonal_step);
  RationalMatrix psi(1, s.top), eta(s.bottom, 1);
  const std::size_t base = j * (diagonal_step - 1);  // multi-index (j, ..., j, 0)
  for (std::size_t i = 0; i < s.top; ++i) psi.at(0, i) = p.at(row, base + i) / pivot;
  for (std::size_t i = 0; i < s.bottom; ++i) eta.at(i, 0) = p.at(i, col) / p.at(row, col) * pivot;
  if (multiply(eta, kronecker_power(psi, s.m)) != p) {
    d.reason = "rank 1 but the row space is not spanned by a tensor power";
    return d;
  }
  d.member = true;
  d.psi = std::move(psi);
  d.eta = std::move(eta);
  d.reason = "factorization through the unit object";
  return d;
}

MatReport build_mat_fixture(std::size_t nmax) {
  if (nmax < 4) throw ShapeError("build_mat_fixture: nmax must be at least 4 to hold id_2 ⊗ id_2");
  MatReport r;
  r.nmax = nmax;
  r.identity_square = mat_v1_membership(MatSquare{2, 2, 4, RationalMatrix::identity(4)});
  r.globular_square = mat_v1_membership(MatSquare{1, 2, 2, RationalMatrix::identity(2)});
  const auto psi = RationalMatrix::from_rows({{1, 2}});
  const auto eta = RationalMatrix::from_rows({{1}, {3}});
  r.rank_one_square = mat_v1_membership(MatSquare{2, 2, 2, multiply(eta, kronecker_power(psi, 2))});
  r.rank_one_non_power = mat_v1_membership(MatSquare{2, 2, 1, RationalMatrix::from_rows({{1, 0, 0, 1}})});
  r.gg = r.identity_square.member;
  return r;
}

// ---------------------------------------------------------------------------
// Two-object decoration

DecoratedBicategory arrow_decorated_bicategory(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw ShapeError("arrow fixture: orders must be positive");
  auto decoration = make_category_table(2, {Arrow{0, 0}, Arrow{1, 1}, Arrow{0, 1}}, {0, 1},
                                        [](Id g, Id f) { return g <= 1 ? f : g; });
  decoration.object_names = {"a", "b"};
  decoration.morphism_names = {"id_a", "id_b", "f"};

  // 2-cells: End(i_a) = [0, p), End(i_b) = [p, p+q), Hom(c, c) = [p+q, 2p+q).
  const Id xa = 0, xb = static_cast<Id>(p), xc = static_cast<Id>(p + q);
  const std::size_t n2 = 2 * p + q;
  BicategoryTable t;
  t.cells0 = 2;
  t.cells1 = {Cell1{0, 0}, Cell1{1, 1}, Cell1{0, 1}};
  for (std::size_t k = 0; k < p; ++k) t.cells2.push_back(Cell2{0, 0});
  for (std::size_t k = 0; k < q; ++k) t.cells2.push_back(Cell2{1, 1});
  for (std::size_t k = 0; k < p; ++k) t.cells2.push_back(Cell2{2, 2});
  t.identity1 = {0, 1};
  t.identity2 = {xa, xb, xc};
  auto block = [&](Id cell) -> std::pair<Id, std::size_t> {
    if (cell < xb) return {xa, p};
    if (cell < xc) return {xb, q};
    return {xc, p};
  };
  t.vertical.assign(n2 * n2, kNoId);
  t.horizontal2.assign(n2 * n2, kNoId);
  for (Id u = 0; u < n2; ++u)
    for (Id v = 0; v < n2; ++v) {
      const auto [bu, su] = block(u);
      const auto [bv, sv] = block(v);
      if (bu == bv) t.vertical[pair_index(u, v, n2)] = static_cast<Id>(bu + ((u - bu) + (v - bv)) % su);
      Id h = kNoId;
      if (bu == xa && bv == xa) h = static_cast<Id>(xa + ((u - xa) + (v - xa)) % p);
      if (bu == xb && bv == xb) h = static_cast<Id>(xb + ((u - xb) + (v - xb)) % q);
      if (bu == xa && bv == xc) h = static_cast<Id>(xc + ((u - xa) + (v - xc)) % p);
      if (bu == xc && bv == xb) h = u;
      t.horizontal2[pair_index(u, v, n2)] = h;
    }
  t.horizontal1 = {0, kNoId, 2, kNoId, 1, kNoId, kNoId, 2, kNoId};
  t.cell0_names = {"a", "b"};
  t.cell1_names = {"i_a", "i_b", "c"};
  return DecoratedBicategory(Category(std::move(decoration)), StrictBicategory(std::move(t)));
}

Precosheaf arrow_precosheaf(const DecoratedBicategory& dec, const ElementMap& phi_f) {
  const Category& c = dec.decoration();
  std::vector<StrictMonoidalCategory> fibers;
  for (Id a = 0; a < c.object_count(); ++a) fibers.push_back(end_category(dec.bicat(), a).category);
  std::vector<Functor> action = {identity_functor(fibers[0].base()), identity_functor(fibers[1].base()),
                                 Functor{{0}, phi_f}};
  return Precosheaf(c, std::move(fibers), std::move(action));
}

// ---------------------------------------------------------------------------
// Names

namespace {

std::size_t parse_count(const std::string& text, const std::string& context) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw ShapeError(fmt::format("{}: expected a number, got '{}'", context, text));
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::size_t cyclic_order(const std::string& name) {
  if (name.size() < 2 || name[0] != 'z') throw ShapeError(fmt::format("expected z<n>, got '{}'", name));
  return parse_count(name.substr(1), name);
}

}  // namespace

Monoid monoid_by_name(const std::string& name) {
  if (name == "trivial") return trivial_monoid();
  if (name.size() >= 2 && name[0] == 'z') {
    const std::size_t n = parse_count(name.substr(1), name);
    if (n == 0) throw ShapeError("z0 is not a monoid");
    return cyclic_group(n);
  }
  if (name.size() >= 2 && name[0] == 'n') return truncated_naturals(parse_count(name.substr(1), name));
  throw ShapeError(fmt::format("unknown monoid '{}'", name));
}

MonoidAction action_by_name(const Monoid& m, const Monoid& n, const std::string& name) {
  const std::size_t size = n.size();
  auto require_cyclic = [&] {
    if (!(n == cyclic_group(size))) throw ShapeError(fmt::format("action '{}' needs a cyclic target", name));
  };
  ElementMap generator;
  if (name == "triv") {
    generator = identity_map(size);
  } else if (name == "inv") {
    require_cyclic();
    for (Id x = 0; x < size; ++x) generator.push_back(static_cast<Id>((size - x) % size));
  } else if (name.rfind("mul", 0) == 0) {
    require_cyclic();
    const std::size_t k = parse_count(name.substr(3), name);
    for (Id x = 0; x < size; ++x) generator.push_back(static_cast<Id>((k * x) % size));
  } else if (name != "const") {
    throw ShapeError(fmt::format("unknown action '{}'", name));
  }

  std::vector<ElementMap> maps;
  for (Id x = 0; x < m.size(); ++x) {
    if (x == m.unit()) {
      maps.push_back(identity_map(size));
    } else if (name == "const") {
      maps.push_back(ElementMap(size, n.unit()));
    } else {
      ElementMap power = identity_map(size);
      for (Id k = 0; k < x; ++k) power = compose_maps(generator, power);
      maps.push_back(std::move(power));
    }
  }
  return MonoidAction(m, n, std::move(maps));
}

FixtureName parse_fixture_name(const std::string& name) {
  auto parts = split(name, ':');
  FixtureName out{parts.front(), {parts.begin() + 1, parts.end()}};
  const std::size_t expected = out.family == "mat" ? 1 : 3;
  if (out.family != "semidirect" && out.family != "graded" && out.family != "mat" && out.family != "arrow")
    throw ShapeError(fmt::format("unknown fixture family '{}'", out.family));
  if (out.fields.size() != expected)
    throw ShapeError(fmt::format("fixture '{}' needs {} fields after the family", name, expected));
  return out;
}

Lift fixture_lift(const std::string& name) {
  const FixtureName f = parse_fixture_name(name);
  if (f.family == "semidirect") {
    const Monoid n = monoid_by_name(f.fields[0]);
    const Monoid m = monoid_by_name(f.fields[1]);
    return build_semidirect_fixture(action_by_name(m, n, f.fields[2])).lift;
  }
  if (f.family == "graded") {
    const Monoid g = monoid_by_name(f.fields[0]);
    const Monoid h = monoid_by_name(f.fields[1]);
    return build_graded_fixture(action_by_name(g, h, f.fields[2])).lift;
  }
  if (f.family == "arrow") {
    const std::size_t p = cyclic_order(f.fields[0]), q = cyclic_order(f.fields[1]);
    const DecoratedBicategory dec = arrow_decorated_bicategory(p, q);
    ElementMap phi_f;
    if (f.fields[2] == "id") {
      if (p != q) throw ShapeError("arrow fixture: 'id' needs equal orders");
      phi_f = identity_map(p);
    } else if (f.fields[2] == "const") {
      phi_f.assign(p, 0);
    } else {
      throw ShapeError(fmt::format("arrow fixture: unknown map '{}'", f.fields[2]));
    }
    return lift(dec, arrow_precosheaf(dec, phi_f));
  }
  throw ShapeError("the mat fixture is a bounded slice without a finite lift");
}

const std::vector<std::string>& standard_fixture_names() {
  static const std::vector<std::string> names = {
      "semidirect:z3:z2:inv", "semidirect:z3:z2:triv", "semidirect:z4:z2:inv", "semidirect:z1:z1:triv",
      "semidirect:z3:n2:const", "semidirect:z5:z4:mul2", "graded:z2:z3:inv", "graded:z2:z4:inv",
      "graded:z2:z3:triv", "arrow:z2:z2:id", "arrow:z2:z3:const",
  };
  return names;
}

}  // namespace dlift
