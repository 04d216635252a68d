#include "doublelift/fincat.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace dlift {

namespace {

// Depth-first search for an injective assignment var -> value. `candidates(v)`
// lists admissible values for variable v; `consistent(v, value, assignment)`
// checks every constraint between v and the already assigned variables
// 0..v-1. Returns true when `on_complete` asks to stop.
template <typename Candidates, typename Consistent, typename OnComplete>
bool search_injective(std::size_t vars, std::size_t values, Candidates&& candidates,
                      Consistent&& consistent, OnComplete&& on_complete) {
  std::vector<Id> assignment(vars, kNoId);
  std::vector<char> used(values, 0);
  std::function<bool(std::size_t)> step = [&](std::size_t v) -> bool {
    if (v == vars) return on_complete(assignment);
    for (Id value : candidates(v)) {
      if (used[value]) continue;
      assignment[v] = value;
      if (!consistent(v, value, assignment)) continue;
      used[value] = 1;
      if (step(v + 1)) return true;
      used[value] = 0;
    }
    assignment[v] = kNoId;
    return false;
  };
  return step(0);
}

// (index, period, centralizer size) of the cyclic sub-semigroup of x.
std::tuple<std::size_t, std::size_t, std::size_t> element_profile(const Monoid& m, Id x) {
  std::vector<std::size_t> seen(m.size(), 0);
  Id power = x;
  std::size_t step = 1;
  while (!seen[power]) {
    seen[power] = step++;
    power = m.mul(power, x);
  }
  const std::size_t index = seen[power];
  const std::size_t period = step - seen[power];
  std::size_t central = 0;
  for (Id y = 0; y < m.size(); ++y)
    if (m.mul(x, y) == m.mul(y, x)) ++central;
  return {index, period, central};
}

}  // namespace

// ---------------------------------------------------------------------------
// Monoid

LawReport check_laws(const MonoidTable& t) {
  LawReport report;
  auto wf = report.law("well-formed");
  const std::size_t n = t.size;
  wf.require(n > 0, [] { return std::string("empty carrier"); });
  wf.require(t.unit < n, [&] { return fmt::format("unit {} out of range", t.unit); });
  wf.require(t.product.size() == n * n,
             [&] { return fmt::format("table has {} entries, expected {}", t.product.size(), n * n); });
  wf.require(t.names.empty() || t.names.size() == n, [] { return std::string("names length"); });
  if (!wf.passed()) return report;
  for (std::size_t i = 0; i < t.product.size(); ++i)
    wf.require(t.product[i] < n, [&] {
      return fmt::format("product ({},{}) = {} out of range", i / n, i % n, t.product[i]);
    });
  if (!wf.passed()) return report;

  auto mul = [&](Id x, Id y) { return t.product[pair_index(x, y, n)]; };
  auto unit = report.law("unit");
  auto assoc = report.law("associativity");
  for (Id x = 0; x < n; ++x) {
    unit.require(mul(t.unit, x) == x && mul(x, t.unit) == x,
                 [&] { return fmt::format("element {}", x); });
    for (Id y = 0; y < n; ++y)
      for (Id z = 0; z < n; ++z)
        assoc.require(mul(mul(x, y), z) == mul(x, mul(y, z)),
                      [&] { return fmt::format("({}, {}, {})", x, y, z); });
  }
  return report;
}

Monoid::Monoid(MonoidTable table) : table_(std::move(table)) { check_laws(table_).throw_if_failed(); }

bool Monoid::is_commutative() const {
  for (Id x = 0; x < size(); ++x)
    for (Id y = x + 1; y < size(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

Id Monoid::inverse(Id x) const {
  for (Id y = 0; y < size(); ++y)
    if (mul(x, y) == unit() && mul(y, x) == unit()) return y;
  return kNoId;
}

bool Monoid::is_group() const {
  for (Id x = 0; x < size(); ++x)
    if (inverse(x) == kNoId) return false;
  return true;
}

std::vector<Id> Monoid::center() const {
  std::vector<Id> out;
  for (Id x = 0; x < size(); ++x) {
    bool central = true;
    for (Id y = 0; y < size() && central; ++y) central = mul(x, y) == mul(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

std::string Monoid::element_name(Id x) const {
  return table_.names.empty() ? std::to_string(x) : table_.names[x];
}

Monoid cyclic_group(std::size_t n) {
  if (n == 0) throw ShapeError("cyclic_group: order must be positive");
  MonoidTable t;
  t.size = n;
  t.unit = 0;
  t.product.resize(n * n);
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) t.product[pair_index(x, y, n)] = static_cast<Id>((x + y) % n);
  return Monoid(std::move(t));
}

Monoid truncated_naturals(std::size_t k) {
  MonoidTable t;
  t.size = k + 1;
  t.unit = 0;
  t.product.resize(t.size * t.size);
  for (Id x = 0; x <= k; ++x)
    for (Id y = 0; y <= k; ++y)
      t.product[pair_index(x, y, t.size)] = static_cast<Id>(std::min<std::size_t>(x + y, k));
  return Monoid(std::move(t));
}

Monoid trivial_monoid() { return cyclic_group(1); }

Monoid direct_product(const Monoid& n, const Monoid& m) {
  MonoidTable t;
  const std::size_t sn = n.size(), sz = n.size() * m.size();
  t.size = sz;
  t.unit = static_cast<Id>(m.unit() * sn + n.unit());
  t.product.resize(sz * sz);
  for (Id a = 0; a < sz; ++a)
    for (Id b = 0; b < sz; ++b)
      t.product[pair_index(a, b, sz)] =
          static_cast<Id>(m.mul(a / sn, b / sn) * sn + n.mul(a % sn, b % sn));
  return Monoid(std::move(t));
}

// ---------------------------------------------------------------------------
// Monoid morphisms and actions

LawReport check_morphism(const Monoid& s, const Monoid& t, const ElementMap& map) {
  LawReport report;
  auto wf = report.law("well-formed");
  wf.require(map.size() == s.size(), [&] { return fmt::format("map has {} entries", map.size()); });
  if (!wf.passed()) return report;
  for (Id x = 0; x < s.size(); ++x)
    wf.require(map[x] < t.size(), [&] { return fmt::format("image of {} out of range", x); });
  if (!wf.passed()) return report;
  report.law("preserves-unit").require(map[s.unit()] == t.unit(), [&] {
    return fmt::format("unit maps to {}", map[s.unit()]);
  });
  auto mul = report.law("preserves-product");
  for (Id x = 0; x < s.size(); ++x)
    for (Id y = 0; y < s.size(); ++y)
      mul.require(map[s.mul(x, y)] == t.mul(map[x], map[y]),
                  [&] { return fmt::format("({}, {})", x, y); });
  return report;
}

ElementMap compose_maps(const ElementMap& after, const ElementMap& before) {
  ElementMap out(before.size());
  for (std::size_t i = 0; i < before.size(); ++i) out[i] = after[before[i]];
  return out;
}

ElementMap identity_map(std::size_t size) {
  ElementMap out(size);
  std::iota(out.begin(), out.end(), Id{0});
  return out;
}

bool is_surjective(const ElementMap& map, std::size_t target_size) {
  std::vector<char> hit(target_size, 0);
  for (Id y : map) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_bijective(const ElementMap& map, std::size_t target_size) {
  return map.size() == target_size && is_surjective(map, target_size);
}

MonoidMorphism::MonoidMorphism(Monoid source, Monoid target, ElementMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  check_morphism(source_, target_, map_).throw_if_failed();
}

std::vector<ElementMap> endomorphisms(const Monoid& m) {
  const std::size_t n = m.size();
  std::vector<ElementMap> out;
  ElementMap img(n, kNoId);
  std::function<void(Id)> step = [&](Id x) {
    if (x == n) {
      out.push_back(img);
      return;
    }
    for (Id y = 0; y < n; ++y) {
      if (x == m.unit() && y != m.unit()) continue;
      img[x] = y;
      bool ok = true;
      for (Id a = 0; a <= x && ok; ++a)
        for (Id b = 0; b <= x && ok; ++b) {
          const Id p = m.mul(a, b);
          if (p <= x) ok = img[p] == m.mul(img[a], img[b]);
        }
      if (ok) step(x + 1);
    }
    img[x] = kNoId;
  };
  step(0);
  return out;
}

std::vector<ElementMap> automorphisms(const Monoid& m) {
  std::vector<ElementMap> out;
  for (auto& e : endomorphisms(m))
    if (is_bijective(e, m.size())) out.push_back(std::move(e));
  return out;
}

std::optional<ElementMap> find_isomorphism(const Monoid& a, const Monoid& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pa(n), pb(n);
  for (Id x = 0; x < n; ++x) {
    pa[x] = element_profile(a, x);
    pb[x] = element_profile(b, x);
  }
  std::optional<ElementMap> found;
  search_injective(
      n, n,
      [&](std::size_t v) {
        std::vector<Id> c;
        for (Id y = 0; y < n; ++y)
          if (pa[v] == pb[y] && (v != a.unit() || y == b.unit())) c.push_back(y);
        return c;
      },
      [&](std::size_t v, Id, const std::vector<Id>& asg) {
        for (Id x = 0; x <= v; ++x)
          for (Id y = 0; y <= v; ++y) {
            const Id p = a.mul(x, y);
            if (p <= v && asg[p] != b.mul(asg[x], asg[y])) return false;
          }
        return true;
      },
      [&](const std::vector<Id>& asg) {
        found = asg;
        return true;
      });
  return found;
}

LawReport check_action(const Monoid& acting, const Monoid& target,
                       const std::vector<ElementMap>& maps) {
  LawReport report;
  auto wf = report.law("well-formed");
  wf.require(maps.size() == acting.size(),
             [&] { return fmt::format("{} maps for {} elements", maps.size(), acting.size()); });
  if (!wf.passed()) return report;
  auto endo = report.law("acts-by-endomorphisms");
  for (Id m = 0; m < acting.size(); ++m) {
    auto r = check_morphism(target, target, maps[m]);
    endo.require(r.ok(), [&] { return fmt::format("map of {}: {}", m, r.first_failure()->law); });
  }
  if (!endo.passed()) return report;
  report.law("unit-acts-trivially").require(maps[acting.unit()] == identity_map(target.size()), [] {
    return std::string("unit does not act as the identity");
  });
  auto func = report.law("action-functoriality");
  for (Id m = 0; m < acting.size(); ++m)
    for (Id k = 0; k < acting.size(); ++k)
      func.require(maps[acting.mul(k, m)] == compose_maps(maps[k], maps[m]), [&] {
        return fmt::format("phi[{} * {}] != phi[{}] o phi[{}]", k, m, k, m);
      });
  return report;
}

MonoidAction::MonoidAction(Monoid acting, Monoid target, std::vector<ElementMap> maps)
    : acting_(std::move(acting)), target_(std::move(target)), maps_(std::move(maps)) {
  check_action(acting_, target_, maps_).throw_if_failed();
}

bool MonoidAction::all_surjective() const {
  return std::all_of(maps_.begin(), maps_.end(),
                     [&](const ElementMap& m) { return is_surjective(m, target_.size()); });
}

std::vector<MonoidAction> enumerate_actions(const Monoid& acting, const Monoid& target) {
  const auto endos = endomorphisms(target);
  const std::size_t n = acting.size();
  std::vector<MonoidAction> out;
  std::vector<const ElementMap*> asg(n, nullptr);
  const ElementMap id = identity_map(target.size());
  std::function<void(Id)> step = [&](Id m) {
    if (m == n) {
      std::vector<ElementMap> maps;
      for (auto* p : asg) maps.push_back(*p);
      out.emplace_back(acting, target, std::move(maps));
      return;
    }
    for (const auto& e : endos) {
      if (m == acting.unit() && e != id) continue;
      asg[m] = &e;
      bool ok = true;
      for (Id a = 0; a <= m && ok; ++a)
        for (Id b = 0; b <= m && ok; ++b) {
          const Id p = acting.mul(a, b);
          if (p <= m) ok = *asg[p] == compose_maps(*asg[a], *asg[b]);
        }
      if (ok) step(m + 1);
    }
    asg[m] = nullptr;
  };
  step(0);
  return out;
}

Monoid semidirect_product(const MonoidAction& phi) {
  const Monoid& nn = phi.target();
  const Monoid& mm = phi.acting();
  if (!nn.is_commutative()) throw ShapeError("semidirect_product: N must be commutative");
  const std::size_t sn = nn.size(), sz = nn.size() * mm.size();
  MonoidTable t;
  t.size = sz;
  t.unit = static_cast<Id>(mm.unit() * sn + nn.unit());
  t.product.resize(sz * sz);
  for (Id lhs = 0; lhs < sz; ++lhs)
    for (Id rhs = 0; rhs < sz; ++rhs) {
      const Id n1 = lhs % sn, m1 = lhs / sn, n0 = rhs % sn, m0 = rhs / sn;
      t.product[pair_index(lhs, rhs, sz)] =
          static_cast<Id>(mm.mul(m1, m0) * sn + nn.mul(n1, phi.apply(m1, n0)));
    }
  t.names.reserve(sz);
  for (Id e = 0; e < sz; ++e)
    t.names.push_back(fmt::format("({},{})", nn.element_name(e % sn), mm.element_name(e / sn)));
  return Monoid(std::move(t));
}

Monoid semidirect_product(const Monoid& n, const Monoid& m, const std::vector<ElementMap>& maps) {
  if (!n.is_commutative()) throw ShapeError("semidirect_product: N must be commutative");
  return semidirect_product(MonoidAction(m, n, maps));
}

// ---------------------------------------------------------------------------
// Categories

LawReport check_laws(const CategoryTable& t) {
  LawReport report;
  const std::size_t n = t.morphisms.size();
  auto wf = report.law("well-formed");
  wf.require(t.identity.size() == t.objects,
             [&] { return fmt::format("{} identities for {} objects", t.identity.size(), t.objects); });
  wf.require(t.compose.size() == n * n,
             [&] { return fmt::format("composition table has {} entries", t.compose.size()); });
  wf.require(t.object_names.empty() || t.object_names.size() == t.objects,
             [] { return std::string("object names length"); });
  wf.require(t.morphism_names.empty() || t.morphism_names.size() == n,
             [] { return std::string("morphism names length"); });
  if (!wf.passed()) return report;
  for (Id f = 0; f < n; ++f)
    wf.require(t.morphisms[f].dom < t.objects && t.morphisms[f].cod < t.objects,
               [&] { return fmt::format("morphism {} has out-of-range boundary", f); });
  for (Id x = 0; x < t.objects; ++x)
    wf.require(t.identity[x] < n && t.morphisms[t.identity[x]].dom == x &&
                   t.morphisms[t.identity[x]].cod == x,
               [&] { return fmt::format("identity of object {} is not an endomorphism of it", x); });
  for (Id c : t.compose)
    wf.require(c == kNoId || c < n, [&] { return fmt::format("composite {} out of range", c); });
  if (!wf.passed()) return report;

  auto comp = [&](Id g, Id f) { return t.compose[pair_index(g, f, n)]; };
  auto domain = report.law("composition-domain");
  auto boundary = report.law("composition-boundary");
  for (Id g = 0; g < n; ++g)
    for (Id f = 0; f < n; ++f) {
      const bool composable = t.morphisms[f].cod == t.morphisms[g].dom;
      const Id gf = comp(g, f);
      domain.require(composable == (gf != kNoId), [&] {
        return fmt::format("({} o {}) {}", g, f, composable ? "missing" : "defined on non-composable pair");
      });
      if (composable && gf != kNoId)
        boundary.require(
            t.morphisms[gf].dom == t.morphisms[f].dom && t.morphisms[gf].cod == t.morphisms[g].cod,
            [&] { return fmt::format("({} o {}) = {}", g, f, gf); });
    }
  if (!domain.passed() || !boundary.passed()) return report;

  auto unit = report.law("identity");
  for (Id f = 0; f < n; ++f)
    unit.require(comp(t.identity[t.morphisms[f].cod], f) == f &&
                     comp(f, t.identity[t.morphisms[f].dom]) == f,
                 [&] { return fmt::format("morphism {}", f); });

  std::vector<std::vector<Id>> from(t.objects);
  for (Id f = 0; f < n; ++f) from[t.morphisms[f].dom].push_back(f);
  auto assoc = report.law("associativity");
  for (Id f = 0; f < n; ++f)
    for (Id g : from[t.morphisms[f].cod])
      for (Id h : from[t.morphisms[g].cod])
        assoc.require(comp(comp(h, g), f) == comp(h, comp(g, f)),
                      [&] { return fmt::format("({}, {}, {})", h, g, f); });
  return report;
}

Category::Category(CategoryTable table) : table_(std::move(table)) {
  check_laws(table_).throw_if_failed();
}

std::vector<Id> Category::hom(Id x, Id y) const {
  std::vector<Id> out;
  for (Id f = 0; f < morphism_count(); ++f)
    if (dom(f) == x && cod(f) == y) out.push_back(f);
  return out;
}

std::string Category::object_name(Id x) const {
  return table_.object_names.empty() ? std::to_string(x) : table_.object_names[x];
}

std::string Category::morphism_name(Id f) const {
  return table_.morphism_names.empty() ? std::to_string(f) : table_.morphism_names[f];
}

LawReport check_functor(const Category& s, const Category& t, const Functor& f) {
  LawReport report;
  auto wf = report.law("functor-well-formed");
  wf.require(f.objects.size() == s.object_count() && f.morphisms.size() == s.morphism_count(),
             [] { return std::string("map sizes do not match the source"); });
  if (!wf.passed()) return report;
  for (Id x : f.objects)
    wf.require(x < t.object_count(), [&] { return fmt::format("object image {} out of range", x); });
  for (Id m : f.morphisms)
    wf.require(m < t.morphism_count(), [&] { return fmt::format("morphism image {} out of range", m); });
  if (!wf.passed()) return report;

  auto bd = report.law("functor-boundary");
  auto id = report.law("functor-identity");
  auto comp = report.law("functor-composition");
  for (Id m = 0; m < s.morphism_count(); ++m)
    bd.require(t.dom(f.morphisms[m]) == f.objects[s.dom(m)] &&
                   t.cod(f.morphisms[m]) == f.objects[s.cod(m)],
               [&] { return fmt::format("morphism {}", m); });
  for (Id x = 0; x < s.object_count(); ++x)
    id.require(f.morphisms[s.identity(x)] == t.identity(f.objects[x]),
               [&] { return fmt::format("object {}", x); });
  if (!bd.passed()) return report;
  for (Id g = 0; g < s.morphism_count(); ++g)
    for (Id h = 0; h < s.morphism_count(); ++h) {
      const Id gh = s.compose(g, h);
      if (gh == kNoId) continue;
      comp.require(f.morphisms[gh] == t.compose(f.morphisms[g], f.morphisms[h]),
                   [&] { return fmt::format("({} o {})", g, h); });
    }
  return report;
}

Functor identity_functor(const Category& c) {
  return Functor{identity_map(c.object_count()), identity_map(c.morphism_count())};
}

Functor compose_functors(const Functor& after, const Functor& before) {
  return Functor{compose_maps(after.objects, before.objects),
                 compose_maps(after.morphisms, before.morphisms)};
}

bool is_full(const Category& s, const Category& t, const Functor& f) {
  for (Id x = 0; x < s.object_count(); ++x)
    for (Id y = 0; y < s.object_count(); ++y) {
      std::vector<Id> image;
      for (Id m : s.hom(x, y)) image.push_back(f.morphisms[m]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() != t.hom(f.objects[x], f.objects[y]).size()) return false;
    }
  return true;
}

Category delooping(const Monoid& m) {
  std::vector<Arrow> arrows(m.size(), Arrow{0, 0});
  auto t = make_category_table(1, std::move(arrows), {m.unit()},
                               [&](Id g, Id f) { return m.mul(g, f); });
  t.object_names = {"*"};
  if (!m.table().names.empty()) t.morphism_names = m.table().names;
  return Category(std::move(t));
}

EndomorphismMonoid endomorphism_monoid(const Category& c, Id object) {
  if (object >= c.object_count()) throw ShapeError("endomorphism_monoid: unknown object");
  const auto endos = c.hom(object, object);
  std::vector<Id> index(c.morphism_count(), kNoId);
  for (Id k = 0; k < endos.size(); ++k) index[endos[k]] = k;
  MonoidTable t;
  t.size = endos.size();
  t.unit = index[c.identity(object)];
  t.product.resize(t.size * t.size);
  for (Id a = 0; a < t.size; ++a)
    for (Id b = 0; b < t.size; ++b)
      t.product[pair_index(a, b, t.size)] = index[c.compose(endos[a], endos[b])];
  return EndomorphismMonoid{Monoid(std::move(t)), endos};
}

namespace {

struct ObjectSignature {
  std::size_t out, in, endo;
  friend bool operator==(const ObjectSignature&, const ObjectSignature&) = default;
};

ObjectSignature signature(const Category& c, Id x) {
  ObjectSignature s{0, 0, 0};
  for (Id f = 0; f < c.morphism_count(); ++f) {
    if (c.dom(f) == x) ++s.out;
    if (c.cod(f) == x) ++s.in;
    if (c.dom(f) == x && c.cod(f) == x) ++s.endo;
  }
  return s;
}

// Shared search for category and monoidal isomorphisms. Objects are assigned
// first, then morphisms, each step checking all constraints against the
// already-assigned prefix.
std::optional<Functor> find_iso(const Category& a, const Category& b,
                                const StrictMonoidalCategory* ma,
                                const StrictMonoidalCategory* mb) {
  const std::size_t no = a.object_count(), nm = a.morphism_count();
  if (no != b.object_count() || nm != b.morphism_count()) return std::nullopt;

  std::vector<ObjectSignature> sa(no), sb(no);
  for (Id x = 0; x < no; ++x) {
    sa[x] = signature(a, x);
    sb[x] = signature(b, x);
  }
  std::optional<Functor> found;

  auto search_morphisms = [&](const std::vector<Id>& sigma) {
    std::vector<Id> order;
    for (Id f = 0; f < nm; ++f)
      if (a.is_identity(f)) order.push_back(f);
    for (Id f = 0; f < nm; ++f)
      if (!a.is_identity(f)) order.push_back(f);
    std::vector<Id> position(nm);
    for (Id k = 0; k < nm; ++k) position[order[k]] = k;

    return search_injective(
        nm, nm,
        [&](std::size_t v) {
          const Id f = order[v];
          if (a.is_identity(f)) return std::vector<Id>{b.identity(sigma[a.dom(f)])};
          std::vector<Id> c;
          for (Id g : b.hom(sigma[a.dom(f)], sigma[a.cod(f)]))
            if (!b.is_identity(g)) c.push_back(g);
          return c;
        },
        [&](std::size_t v, Id, const std::vector<Id>& asg) {
          auto img = [&](Id f) { return position[f] <= v ? asg[position[f]] : kNoId; };
          const Id f = order[v];
          for (std::size_t k = 0; k <= v; ++k) {
            const Id g = order[k];
            for (auto [x, y] : {std::pair{g, f}, std::pair{f, g}}) {
              const Id xy = a.compose(x, y);
              if (xy == kNoId) continue;
              const Id target = img(xy);
              if (target != kNoId && b.compose(img(x), img(y)) != target) return false;
            }
            if (ma) {
              for (auto [x, y] : {std::pair{g, f}, std::pair{f, g}}) {
                const Id target = img(ma->tensor_morphisms(x, y));
                if (target != kNoId && mb->tensor_morphisms(img(x), img(y)) != target) return false;
              }
            }
          }
          // f may itself be a composite or tensor of assigned morphisms.
          for (std::size_t i = 0; i <= v; ++i)
            for (std::size_t j = 0; j <= v; ++j) {
              const Id x = order[i], y = order[j];
              if (a.compose(x, y) == f && b.compose(img(x), img(y)) != img(f)) return false;
              if (ma && ma->tensor_morphisms(x, y) == f &&
                  mb->tensor_morphisms(img(x), img(y)) != img(f))
                return false;
            }
          return true;
        },
        [&](const std::vector<Id>& asg) {
          Functor fn{sigma, std::vector<Id>(nm)};
          for (Id k = 0; k < nm; ++k) fn.morphisms[order[k]] = asg[k];
          found = fn;
          return true;
        });
  };

  search_injective(
      no, no,
      [&](std::size_t x) {
        std::vector<Id> c;
        for (Id y = 0; y < no; ++y)
          if (sa[x] == sb[y] && (!ma || (x == ma->unit()) == (y == mb->unit()))) c.push_back(y);
        return c;
      },
      [&](std::size_t v, Id, const std::vector<Id>& asg) {
        if (!ma) return true;
        for (Id x = 0; x <= v; ++x)
          for (Id y = 0; y <= v; ++y) {
            const Id xy = ma->tensor(x, y);
            if (xy <= v && asg[xy] != mb->tensor(asg[x], asg[y])) return false;
          }
        return true;
      },
      [&](const std::vector<Id>& sigma) { return search_morphisms(sigma); });
  return found;
}

}  // namespace

std::optional<Functor> find_category_isomorphism(const Category& a, const Category& b) {
  return find_iso(a, b, nullptr, nullptr);
}

// ---------------------------------------------------------------------------
// Strict monoidal categories

LawReport check_laws(const MonoidalTable& t) {
  LawReport report = check_laws(t.base);
  if (!report.ok()) return report;
  const Category c(t.base);
  const std::size_t no = c.object_count(), nm = c.morphism_count();
  auto wf = report.law("tensor-well-formed");
  wf.require(t.tensor_objects.size() == no * no && t.tensor_morphisms.size() == nm * nm,
             [] { return std::string("tensor table sizes"); });
  wf.require(t.unit < no, [] { return std::string("unit object out of range"); });
  if (!wf.passed()) return report;
  for (Id x : t.tensor_objects) wf.require(x < no, [&] { return fmt::format("object {} out of range", x); });
  for (Id f : t.tensor_morphisms)
    wf.require(f < nm, [&] { return fmt::format("morphism {} out of range", f); });
  if (!wf.passed()) return report;

  auto to = [&](Id x, Id y) { return t.tensor_objects[pair_index(x, y, no)]; };
  auto tm = [&](Id f, Id g) { return t.tensor_morphisms[pair_index(f, g, nm)]; };

  auto bd = report.law("tensor-boundary");
  for (Id f = 0; f < nm; ++f)
    for (Id g = 0; g < nm; ++g)
      bd.require(c.dom(tm(f, g)) == to(c.dom(f), c.dom(g)) && c.cod(tm(f, g)) == to(c.cod(f), c.cod(g)),
                 [&] { return fmt::format("({} (x) {})", f, g); });
  if (!bd.passed()) return report;

  auto assoc = report.law("tensor-associativity");
  auto unit = report.law("tensor-unit");
  for (Id x = 0; x < no; ++x) {
    unit.require(to(t.unit, x) == x && to(x, t.unit) == x, [&] { return fmt::format("object {}", x); });
    for (Id y = 0; y < no; ++y)
      for (Id z = 0; z < no; ++z)
        assoc.require(to(to(x, y), z) == to(x, to(y, z)),
                      [&] { return fmt::format("objects ({}, {}, {})", x, y, z); });
  }
  const Id unit_id = c.identity(t.unit);
  for (Id f = 0; f < nm; ++f) {
    unit.require(tm(unit_id, f) == f && tm(f, unit_id) == f,
                 [&] { return fmt::format("morphism {}", f); });
    for (Id g = 0; g < nm; ++g)
      for (Id h = 0; h < nm; ++h)
        assoc.require(tm(tm(f, g), h) == tm(f, tm(g, h)),
                      [&] { return fmt::format("morphisms ({}, {}, {})", f, g, h); });
  }

  auto ids = report.law("tensor-identities");
  for (Id x = 0; x < no; ++x)
    for (Id y = 0; y < no; ++y)
      ids.require(tm(c.identity(x), c.identity(y)) == c.identity(to(x, y)),
                  [&] { return fmt::format("objects ({}, {})", x, y); });

  std::vector<std::vector<Id>> from(no);
  for (Id f = 0; f < nm; ++f) from[c.dom(f)].push_back(f);
  auto inter = report.law("interchange");
  for (Id f = 0; f < nm; ++f)
    for (Id f2 = 0; f2 < nm; ++f2)
      for (Id g : from[c.cod(f)])
        for (Id g2 : from[c.cod(f2)])
          inter.require(c.compose(tm(g, g2), tm(f, f2)) == tm(c.compose(g, f), c.compose(g2, f2)), [&] {
            return fmt::format("({} (x) {}) o ({} (x) {})", g, g2, f, f2);
          });
  return report;
}

StrictMonoidalCategory::StrictMonoidalCategory(MonoidalTable table)
    : base_([&] {
        check_laws(table).throw_if_failed();
        return Category(table.base);
      }()),
      tensor_objects_(std::move(table.tensor_objects)),
      tensor_morphisms_(std::move(table.tensor_morphisms)),
      unit_(table.unit) {}

MonoidalTable StrictMonoidalCategory::table() const {
  return MonoidalTable{base_.table(), tensor_objects_, tensor_morphisms_, unit_};
}

StrictMonoidalCategory monoidal_delooping(const Monoid& m) {
  if (!m.is_commutative())
    throw ShapeError("monoidal_delooping: a non-commutative monoid has no strict monoidal delooping");
  const Category base = delooping(m);
  MonoidalTable t;
  t.base = base.table();
  t.tensor_objects = {0};
  t.tensor_morphisms = m.table().product;
  t.unit = 0;
  return StrictMonoidalCategory(std::move(t));
}

LawReport check_strict_monoidal_functor(const StrictMonoidalCategory& s,
                                        const StrictMonoidalCategory& t, const Functor& f) {
  LawReport report = check_functor(s.base(), t.base(), f);
  if (!report.ok()) return report;
  report.law("preserves-unit-object").require(f.objects[s.unit()] == t.unit(), [] {
    return std::string("unit object not preserved");
  });
  auto obj = report.law("preserves-tensor");
  const std::size_t no = s.base().object_count(), nm = s.base().morphism_count();
  for (Id x = 0; x < no; ++x)
    for (Id y = 0; y < no; ++y)
      obj.require(f.objects[s.tensor(x, y)] == t.tensor(f.objects[x], f.objects[y]),
                  [&] { return fmt::format("objects ({}, {})", x, y); });
  for (Id a = 0; a < nm; ++a)
    for (Id b = 0; b < nm; ++b)
      obj.require(f.morphisms[s.tensor_morphisms(a, b)] ==
                      t.tensor_morphisms(f.morphisms[a], f.morphisms[b]),
                  [&] { return fmt::format("morphisms ({}, {})", a, b); });
  return report;
}

std::optional<Functor> find_monoidal_isomorphism(const StrictMonoidalCategory& a,
                                                 const StrictMonoidalCategory& b) {
  return find_iso(a.base(), b.base(), &a, &b);
}

}  // namespace dlift
