#include "doublelift/report.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "doublelift/adjoint.hpp"
#include "doublelift/examples.hpp"

namespace dlift {

namespace {

class Builder {
 public:
  explicit Builder(const char* command) {
    report_["command"] = command;
    report_["passed"] = true;
  }

  template <typename T>
  void set(const char* key, T&& value) {
    report_[key] = std::forward<T>(value);
  }

  void check(const std::string& name, bool passed, const std::string& detail = {}) {
    Report entry;
    entry["name"] = name;
    entry["passed"] = passed;
    if (!detail.empty()) entry["detail"] = detail;
    checks_.push_back(std::move(entry));
    passed_ = passed_ && passed;
  }

  bool laws(const LawReport& r, std::string_view prefix = {}) {
    for (const auto& law : r.results()) check(std::string(prefix) + law.law, law.passed, law.counterexample);
    return r.ok();
  }

  bool passed() const { return passed_; }

  Report finish() {
    report_["checks"] = std::move(checks_);
    report_["passed"] = passed_;
    return std::move(report_);
  }

 private:
  Report report_;
  Report checks_ = Report::array();
  bool passed_ = true;
};

Report sizes(const std::vector<std::size_t>& v) {
  Report out = Report::array();
  for (auto x : v) out.push_back(x);
  return out;
}

void describe(Builder& b, const DoubleCategory& c) {
  b.set("objects", c.c0().object_count());
  b.set("vertical_morphisms", c.c0().morphism_count());
  b.set("horizontal_cells", c.cell_count());
  b.set("squares", c.square_count());
  b.set("globular_squares", globular_squares(c).size());
  const auto gamma = gamma_squares(c);
  b.set("gamma_squares", static_cast<std::size_t>(std::count(gamma.begin(), gamma.end(), 1)));
  b.set("gg", is_gg(c));
  const VerticalChain chain = vertical_chain(c);
  b.set("vertical_length", chain.length);
  b.set("chain_sizes", sizes(chain.sizes()));
}

void lift_checks(Builder& b, const DecoratedBicategory& dec, const Lift& l) {
  b.laws(check_double_axioms(l.category.table()), "lift-");
  b.check("horizontalization", decorated_horizontalization(l.category) == dec,
          "H* of the lift differs from the decorated bicategory");
}

void v1_agreement(Builder& b, const Lift& l) {
  const VerticalChain chain = vertical_chain(l.category);
  std::size_t pairs = 0;
  std::string detail;
  for (Id p = 0; p < l.category.square_count(); ++p) {
    if (l.category.c0().is_identity(l.category.source(p))) continue;
    ++pairs;
    const bool witness = v1_membership(l, p).member;
    if (witness != static_cast<bool>(chain.levels.front()[p]) && detail.empty())
      detail = fmt::format("square {}: witness {} but chain {}", p, witness, !witness);
  }
  b.set("pair_squares", pairs);
  b.check("v1-witness-agreement", detail.empty(), detail);
}

Report search(const FoldingSearch& s) {
  Report out;
  out["status"] = to_string(s.status);
  out["nodes"] = s.nodes;
  if (!s.certificate.empty()) out["certificate"] = s.certificate;
  return out;
}

void folding_checks(Builder& b, const DoubleCategory& c, std::size_t node_limit) {
  const FoldingSearch folding = find_folding(c, node_limit, FoldingKind::folding);
  const FoldingSearch cofolding = find_cofolding(c, node_limit);
  b.set("folding", search(folding));
  b.set("cofolding", search(cofolding));
  b.set("framed", folding.status == SearchStatus::found && cofolding.status == SearchStatus::found);
  if (folding.folding) b.laws(validate_folding(c, *folding.folding, FoldingKind::folding), "folding-");
  if (cofolding.folding) b.laws(validate_folding(c, *cofolding.folding, FoldingKind::cofolding), "cofolding-");
}

bool single_object_group_shape(const DoubleCategory& c) {
  return c.c0().object_count() == 1 && c.cell_count() == 1 && endomorphism_monoid(c.c0(), 0).monoid.is_group();
}

void round_trip_checks(Builder& b, const Lift& l) {
  if (!single_object_group_shape(l.category)) return;
  b.check("unit-round-trip", extract_phi(l.category) == l.phi);
  const PiFunctor pi = pi_functor(l.category);
  b.check("counit-at-lift", pi.lifted.category == l.category && pi.functor == identity_double_functor(l.category));
}

template <typename T>
const T& expect(const StructureTable& s, const char* kind) {
  if (const T* t = std::get_if<T>(&s)) return *t;
  throw ShapeError(fmt::format("expected a {}, got a {}", kind, kind_name(s)));
}

Report mat_decision(const MatDecision& d) {
  Report out;
  out["member"] = d.member;
  out["rank"] = d.rank;
  if (d.psi) out["psi"] = to_string(*d.psi);
  if (d.eta) out["eta"] = to_string(*d.eta);
  out["reason"] = d.reason;
  return out;
}

std::size_t parse_size(const std::string& text) {
  std::size_t pos = 0;
  std::size_t value = 0;
  try {
    value = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw ShapeError(fmt::format("expected a number, got '{}'", text));
  return value;
}

MonoidAction named_action(const FixtureName& f) {
  const Monoid target = monoid_by_name(f.fields[f.family == "semidirect" ? 0 : 1]);
  const Monoid acting = monoid_by_name(f.fields[f.family == "semidirect" ? 1 : 0]);
  return action_by_name(acting, target, f.fields[2]);
}

void text_value(const Report& v, std::size_t indent, std::string& out);

void text_fields(const Report& r, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : r.items()) {
    if (key == "checks") {
      out += pad + "checks:\n";
      for (const auto& c : value) {
        out += fmt::format("{}  {} {}", pad, c["passed"].get<bool>() ? "pass" : "FAIL", c["name"].get<std::string>());
        if (c.contains("detail") && !c["passed"].get<bool>()) out += ": " + c["detail"].get<std::string>();
        out += "\n";
      }
    } else if (value.is_object()) {
      out += pad + key + ":\n";
      text_fields(value, indent + 2, out);
    } else {
      out += pad + key + ": ";
      text_value(value, indent, out);
      out += "\n";
    }
  }
}

void text_value(const Report& v, std::size_t, std::string& out) {
  if (v.is_string()) {
    out += v.get<std::string>();
  } else if (v.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].dump();
    out += "]";
  } else {
    out += v.dump();
  }
}

}  // namespace

Report check_report(const StructureTable& s) {
  Builder b("check");
  b.set("kind", kind_name(s));
  b.laws(check_structure(s));
  return b.finish();
}

LiftOutcome lift_report(const StructureTable& dec_table, const StructureTable& phi_table) {
  expect<DecoratedTable>(dec_table, "decorated-bicategory");
  expect<PrecosheafTable>(phi_table, "precosheaf");
  Builder b("lift");
  const bool inputs = b.laws(check_structure(dec_table)) & b.laws(check_structure(phi_table), "precosheaf-");
  if (!inputs) return {b.finish(), std::nullopt};
  const DecoratedBicategory dec = as_decorated(dec_table);
  const Precosheaf phi = as_precosheaf(phi_table);
  if (!b.laws(check_attached(dec, phi))) return {b.finish(), std::nullopt};
  const Lift l = lift(dec, phi);
  lift_checks(b, dec, l);
  describe(b, l.category);
  return {b.finish(), to_table(l.category)};
}

Report analyze_report(const StructureTable& s) {
  const auto& t = expect<DoubleCategoryTable>(s, "double-category");
  Builder b("analyze");
  if (b.laws(check_double_axioms(t))) describe(b, DoubleCategory(t));
  return b.finish();
}

Report folding_report(const StructureTable& s, std::size_t node_limit) {
  const auto& t = expect<DoubleCategoryTable>(s, "double-category");
  Builder b("folding");
  b.set("node_limit", node_limit);
  if (b.laws(check_double_axioms(t))) folding_checks(b, DoubleCategory(t), node_limit);
  return b.finish();
}

Report adjunction_report(const StructureTable& g_table, const StructureTable& a_table,
                         const std::vector<StructureTable>& phi_tables) {
  expect<MonoidTable>(g_table, "monoid");
  expect<MonoidTable>(a_table, "monoid");
  for (const auto& p : phi_tables) expect<PrecosheafTable>(p, "precosheaf");
  Builder b("adjunction");
  bool inputs = b.laws(check_structure(g_table), "group-") & b.laws(check_structure(a_table), "coefficients-");
  for (std::size_t k = 0; k < phi_tables.size(); ++k)
    inputs = b.laws(check_structure(phi_tables[k]), fmt::format("precosheaf{}-", k)) && inputs;
  if (!inputs) return b.finish();
  const Monoid g = as_monoid(g_table), a = as_monoid(a_table);
  std::vector<Precosheaf> phis;
  for (const auto& p : phi_tables) phis.push_back(as_precosheaf(p));
  b.set("group_order", g.size());
  b.set("coefficient_order", a.size());
  b.set("precosheaves", phis.size());
  b.laws(check_triangle_identities(g, a, phis));
  return b.finish();
}

Report example_report(const std::string& name, std::size_t node_limit) {
  const FixtureName f = parse_fixture_name(name);
  Builder b("example");
  b.set("fixture", name);

  if (f.family == "mat") {
    const MatReport r = build_mat_fixture(parse_size(f.fields[0]));
    b.set("nmax", r.nmax);
    b.set("identity_square", mat_decision(r.identity_square));
    b.set("globular_square", mat_decision(r.globular_square));
    b.set("rank_one_square", mat_decision(r.rank_one_square));
    b.set("rank_one_non_power", mat_decision(r.rank_one_non_power));
    b.set("gg", r.gg);
    b.check("rank-obstruction", !r.identity_square.member && r.identity_square.rank > 1,
            fmt::format("rank {}", r.identity_square.rank));
    b.check("globular-in-v1", r.globular_square.member);
    b.check("rank-one-factorization", r.rank_one_square.member, r.rank_one_square.reason);
    b.check("non-power-outside-v1", !r.rank_one_non_power.member, r.rank_one_non_power.reason);
    return b.finish();
  }

  if (f.family == "semidirect") {
    const MonoidAction phi = named_action(f);
    std::optional<SemidirectFixture> s;
    try {
      s = build_semidirect_fixture(phi);
    } catch (const LawViolation& e) {
      b.check(e.law(), false, e.counterexample());
      return b.finish();
    }
    b.check("semidirect-endomorphisms", true);
    lift_checks(b, s->dec, s->lift);
    describe(b, s->lift.category);
    Report endo;
    endo["order"] = s->endo.size();
    endo["commutative"] = s->endo.is_commutative();
    endo["group"] = s->endo.is_group();
    b.set("endomorphisms", std::move(endo));
    v1_agreement(b, s->lift);
    if (node_limit > 0) folding_checks(b, s->lift.category, node_limit);
    round_trip_checks(b, s->lift);
    return b.finish();
  }

  if (f.family == "graded") {
    std::optional<GradedFixture> g;
    try {
      g = build_graded_fixture(named_action(f));
    } catch (const LawViolation& e) {
      b.check(e.law(), false, e.counterexample());
      return b.finish();
    }
    b.check("graded-isomorphism", true);
    lift_checks(b, g->dec, g->lift);
    describe(b, g->lift.category);
    Report vertical;
    vertical["objects"] = g->vertical.base().object_count();
    vertical["morphisms"] = g->vertical.base().morphism_count();
    b.set("vertical_monoidal_category", std::move(vertical));
    v1_agreement(b, g->lift);
    return b.finish();
  }

  const Lift l = fixture_lift(name);
  const DecoratedBicategory dec =
      arrow_decorated_bicategory(monoid_by_name(f.fields[0]).size(), monoid_by_name(f.fields[1]).size());
  lift_checks(b, dec, l);
  describe(b, l.category);
  v1_agreement(b, l);
  return b.finish();
}

std::vector<std::pair<std::string, StructureTable>> example_structures(const std::string& name) {
  const FixtureName f = parse_fixture_name(name);
  std::vector<std::pair<std::string, StructureTable>> out;
  auto emit = [&](const DecoratedBicategory& dec, const Precosheaf& phi, const DoubleCategory& c) {
    out.emplace_back("decorated-bicategory", to_table(dec));
    out.emplace_back("precosheaf", to_table(phi));
    out.emplace_back("double-category", to_table(c));
  };
  if (f.family == "semidirect") {
    const auto s = build_semidirect_fixture(named_action(f));
    emit(s.dec, s.phi, s.lift.category);
  } else if (f.family == "graded") {
    const auto g = build_graded_fixture(named_action(f));
    emit(g.dec, g.phi, g.lift.category);
  } else if (f.family == "arrow") {
    const Lift l = fixture_lift(name);
    emit(decorated_horizontalization(l.category), l.phi, l.category);
  }
  return out;
}

std::optional<std::string> first_failure(const Report& r) {
  if (!r.contains("checks")) return std::nullopt;
  for (const auto& c : r["checks"]) {
    if (c["passed"].get<bool>()) continue;
    std::string out = c["name"].get<std::string>();
    if (c.contains("detail")) out += ": " + c["detail"].get<std::string>();
    return out;
  }
  return std::nullopt;
}

std::string render_text(const Report& r) {
  std::string out;
  text_fields(r, 0, out);
  return out;
}

std::string render_json(const Report& r) { return r.dump(2) + "\n"; }

}  // namespace dlift
