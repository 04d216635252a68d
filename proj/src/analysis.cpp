#include "doublelift/analysis.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <functional>

namespace dlift {

namespace {

enum Closure : unsigned { kVertical = 1, kHorizontal = 2 };

std::vector<char> close(const DoubleCategory& c, std::vector<char> in, unsigned mode) {
  const std::size_t ns = c.square_count();
  std::vector<Id> members;
  std::deque<Id> queue;
  for (Id p = 0; p < ns; ++p)
    if (in[p]) {
      members.push_back(p);
      queue.push_back(p);
    }
  auto add = [&](Id r) {
    if (r == kNoId || in[r]) return;
    in[r] = 1;
    members.push_back(r);
    queue.push_back(r);
  };
  while (!queue.empty()) {
    const Id p = queue.front();
    queue.pop_front();
    // members may grow while scanning; new entries are also queued.
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Id q = members[k];
      if (mode & kVertical) {
        add(c.vcomp(p, q));
        add(c.vcomp(q, p));
      }
      if (mode & kHorizontal) {
        add(c.hcomp(p, q));
        add(c.hcomp(q, p));
      }
    }
  }
  return in;
}

}  // namespace

std::vector<char> vertical_closure(const DoubleCategory& c, std::vector<char> squares) {
  return close(c, std::move(squares), kVertical);
}

std::vector<char> horizontal_closure(const DoubleCategory& c, std::vector<char> squares) {
  return close(c, std::move(squares), kHorizontal);
}

std::vector<char> gamma_generators(const DoubleCategory& c) {
  std::vector<char> gen(c.square_count(), 0);
  for (Id p : globular_squares(c)) gen[p] = 1;
  for (Id f = 0; f < c.c0().morphism_count(); ++f) gen[c.hid_square(f)] = 1;
  return gen;
}

std::vector<char> gamma_squares(const DoubleCategory& c) {
  return close(c, gamma_generators(c), kVertical | kHorizontal);
}

SubDoubleCategory gamma(const DoubleCategory& c) { return restrict_squares(c, gamma_squares(c)); }

bool is_gg(const DoubleCategory& c) {
  const auto g = gamma_squares(c);
  return std::all_of(g.begin(), g.end(), [](char k) { return k != 0; });
}

std::vector<std::size_t> VerticalChain::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels) out.push_back(static_cast<std::size_t>(std::count(level.begin(), level.end(), 1)));
  return out;
}

VerticalChain vertical_chain(const DoubleCategory& c) {
  VerticalChain chain;
  chain.levels.push_back(vertical_closure(c, gamma_generators(c)));
  for (;;) {
    auto next = vertical_closure(c, horizontal_closure(c, chain.levels.back()));
    if (next == chain.levels.back()) break;
    chain.levels.push_back(std::move(next));
  }
  chain.length = chain.levels.size();
  return chain;
}

std::size_t vertical_length(const DoubleCategory& c) { return vertical_chain(c).length; }

V1Witness v1_membership(const Lift& l, Id square) {
  const DoubleCategory& c = l.category;
  if (square >= l.squares.size()) throw ShapeError(fmt::format("v1_membership: unknown square {}", square));
  const LiftSquare& s = l.squares[square];
  if (c.c0().is_identity(s.src))
    throw ShapeError(fmt::format("v1_membership: square {} is not a pair square", square));
  const DecoratedBicategory dec = decorated_horizontalization(c);
  const StrictBicategory& b = dec.bicat();
  const BicellAction act(dec, l.phi);
  const Id ia = b.id1(c.c0().dom(s.src)), ib = b.id1(c.c0().cod(s.src));
  for (Id psi = 0; psi < b.cells2_count(); ++psi) {
    if (b.dom1(psi) != s.top || b.cod1(psi) != ia) continue;
    const Id moved = act.cell2(s.src, psi);
    for (Id eta = 0; eta < b.cells2_count(); ++eta) {
      if (b.dom1(eta) != ib || b.cod1(eta) != s.bottom) continue;
      if (b.vcomp(eta, moved) == s.cell) return V1Witness{true, psi, eta};
    }
  }
  return V1Witness{};
}

// ---------------------------------------------------------------------------
// Foldings

namespace {

struct FoldingShape {
  std::vector<Id> glob;
  Id unit = 0;
  std::vector<std::vector<Id>> blocks;  // per vertical morphism
};

FoldingShape folding_shape(const DoubleCategory& c) {
  if (c.c0().object_count() != 1 || c.cell_count() != 1)
    throw ShapeError("folding search needs one object and one horizontal 1-cell");
  FoldingShape s;
  s.glob = globular_squares(c);
  s.unit = c.c1().identity(0);
  s.blocks.resize(c.c0().morphism_count());
  for (Id p = 0; p < c.square_count(); ++p) {
    if (c.source(p) != c.target(p))
      throw ShapeError(fmt::format("square {} has different vertical sides", p));
    s.blocks[c.source(p)].push_back(p);
  }
  return s;
}

Id paste(const DoubleCategory& c, Id unit, Id upper, Id lower, FoldingKind kind) {
  if (kind == FoldingKind::folding) return c.vcomp(c.hcomp(unit, upper), c.hcomp(lower, unit));
  return c.vcomp(c.hcomp(upper, unit), c.hcomp(unit, lower));
}

// Monoid of a block under horizontal composition, in local identifiers.
Monoid block_monoid(const DoubleCategory& c, const std::vector<Id>& block, Id unit_square) {
  std::vector<Id> local(c.square_count(), kNoId);
  for (Id k = 0; k < block.size(); ++k) local[block[k]] = k;
  MonoidTable t;
  t.size = block.size();
  t.unit = local[unit_square];
  for (Id x : block)
    for (Id y : block) {
      const Id xy = c.hcomp(x, y);
      t.product.push_back(xy == kNoId ? kNoId : local[xy]);
    }
  return Monoid(std::move(t));
}

// Horizontal-composition isomorphisms of a block onto the globular squares,
// as square -> square maps indexed like the block.
std::vector<std::vector<Id>> block_candidates(const DoubleCategory& c, const FoldingShape& s, Id m) {
  const auto& block = s.blocks[m];
  if (block.size() != s.glob.size()) return {};
  const Monoid from = block_monoid(c, block, c.hid_square(m));
  const Monoid to = block_monoid(c, s.glob, s.unit);
  const auto iota = find_isomorphism(from, to);
  if (!iota) return {};
  std::vector<std::vector<Id>> out;
  for (const auto& sigma : automorphisms(to)) {
    std::vector<Id> images;
    for (Id k = 0; k < block.size(); ++k) images.push_back(s.glob[sigma[(*iota)[k]]]);
    out.push_back(std::move(images));
  }
  return out;
}

}  // namespace

FoldingSearch find_folding(const DoubleCategory& c, std::size_t node_limit, FoldingKind kind) {
  const FoldingShape s = folding_shape(c);
  const Category& c0 = c.c0();
  const std::size_t nm = c0.morphism_count();

  FoldingSearch result;
  std::vector<Id> lambda(c.square_count(), kNoId);
  std::vector<char> assigned(nm, 0);
  const Id one = c0.identity(0);
  for (Id g : s.glob) lambda[g] = g;
  assigned[one] = 1;

  std::vector<Id> order;
  std::vector<std::vector<std::vector<Id>>> candidates(nm);
  for (Id m = 0; m < nm; ++m) {
    if (m == one) continue;
    order.push_back(m);
    candidates[m] = block_candidates(c, s, m);
    if (candidates[m].empty()) {
      result.status = SearchStatus::absent;
      result.certificate = fmt::format("block of vertical morphism {} admits no horizontal isomorphism onto "
                                       "the globular squares",
                                       m);
      return result;
    }
  }

  // Vertical compatibility for every assigned pair whose blocks or composite involve m.
  auto consistent = [&](Id m) {
    for (Id upper = 0; upper < nm; ++upper)
      for (Id lower = 0; lower < nm; ++lower) {
        const Id composite = c0.compose(upper, lower);
        if (!assigned[upper] || !assigned[lower] || !assigned[composite]) continue;
        if (upper != m && lower != m && composite != m) continue;
        for (Id x : s.blocks[lower])
          for (Id y : s.blocks[upper])
            if (lambda[c.vcomp(y, x)] != paste(c, s.unit, lambda[y], lambda[x], kind)) {
              result.certificate = fmt::format(
                  "vertical compatibility fails for vertical morphisms ({}, {}) at squares ({}, {})", upper, lower, y, x);
              return false;
            }
      }
    return true;
  };

  bool exhausted_budget = false;
  std::function<bool(std::size_t)> step = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const Id m = order[k];
    for (const auto& images : candidates[m]) {
      if (++result.nodes > node_limit) {
        exhausted_budget = true;
        return false;
      }
      for (Id i = 0; i < images.size(); ++i) lambda[s.blocks[m][i]] = images[i];
      assigned[m] = 1;
      if (consistent(m) && step(k + 1)) return true;
      assigned[m] = 0;
      if (exhausted_budget) return false;
    }
    for (Id p : s.blocks[m]) lambda[p] = kNoId;
    return false;
  };

  if (consistent(one) && step(0)) {
    result.status = SearchStatus::found;
    result.folding = Folding{lambda};
    result.certificate.clear();
  } else if (exhausted_budget) {
    result.status = SearchStatus::inconclusive;
    result.certificate = fmt::format("node budget of {} exhausted", node_limit);
  } else {
    result.status = SearchStatus::absent;
  }
  return result;
}

FoldingSearch find_cofolding(const DoubleCategory& c, std::size_t node_limit) {
  return find_folding(c, node_limit, FoldingKind::cofolding);
}

LawReport validate_folding(const DoubleCategory& c, const Folding& f, FoldingKind kind) {
  const FoldingShape s = folding_shape(c);
  const Category& c0 = c.c0();
  LawReport report;
  auto wf = report.law("well-formed");
  wf.require(f.lambda.size() == c.square_count(), [] { return std::string("one image per square"); });
  if (!wf.passed()) return report;
  for (Id p = 0; p < c.square_count(); ++p)
    wf.require(f.lambda[p] < c.square_count() && c.is_globular(f.lambda[p]),
               [&] { return fmt::format("image of square {} is not globular", p); });
  if (!wf.passed()) return report;

  auto f1 = report.law("fixes-globular");
  for (Id g : s.glob) f1.require(f.lambda[g] == g, [&] { return fmt::format("globular square {}", g); });
  auto f2 = report.law("identity-to-unit");
  for (Id m = 0; m < c0.morphism_count(); ++m)
    f2.require(f.lambda[c.hid_square(m)] == s.unit, [&] { return fmt::format("vertical morphism {}", m); });
  auto f3 = report.law("horizontal-compatibility");
  for (const auto& block : s.blocks)
    for (Id x : block)
      for (Id y : block)
        f3.require(f.lambda[c.hcomp(x, y)] == c.hcomp(f.lambda[x], f.lambda[y]),
                   [&] { return fmt::format("squares ({}, {})", x, y); });
  auto f4 = report.law("vertical-compatibility");
  for (Id m = 0; m < c0.morphism_count(); ++m)
    for (Id m2 = 0; m2 < c0.morphism_count(); ++m2)
      for (Id x : s.blocks[m])
        for (Id y : s.blocks[m2])
          f4.require(f.lambda[c.vcomp(y, x)] == paste(c, s.unit, f.lambda[y], f.lambda[x], kind),
                     [&] { return fmt::format("squares ({}, {})", y, x); });
  auto f5 = report.law("blockwise-bijection");
  for (Id m = 0; m < c0.morphism_count(); ++m) {
    std::vector<Id> image;
    for (Id p : s.blocks[m]) image.push_back(f.lambda[p]);
    std::sort(image.begin(), image.end());
    f5.require(image == s.glob, [&] { return fmt::format("vertical morphism {}", m); });
  }
  return report;
}

bool gg_criterion_surjective(const Precosheaf& phi) {
  if (phi.base().object_count() != 1) throw ShapeError("gg_criterion_surjective: base must have one object");
  const Category& fiber = phi.fiber(0).base();
  if (fiber.object_count() != 1) throw ShapeError("gg_criterion_surjective: fiber must have one object");
  for (Id x = 0; x < fiber.morphism_count(); ++x)
    for (Id y = 0; y < fiber.morphism_count(); ++y)
      if (fiber.compose(x, y) != fiber.compose(y, x))
        throw ShapeError("gg_criterion_surjective: fiber must be commutative");
  for (const auto& f : phi.actions())
    if (!is_surjective(f.morphisms, fiber.morphism_count())) return false;
  return true;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::absent:
      return "absent";
    case SearchStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

}  // namespace dlift
