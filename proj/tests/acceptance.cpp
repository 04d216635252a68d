// Acceptance checks: one line per criterion, "criterion N: PASS|FAIL ...".
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "doublelift/adjoint.hpp"
#include "doublelift/examples.hpp"
#include "doublelift/report.hpp"
#include "doublelift/serialize.hpp"
#include "oracles.hpp"

using namespace dlift;

namespace {

constexpr double kLiftSecondsPerFixture = 1.0;
constexpr double kFoldingSeconds = 5.0;
constexpr double kAdjunctionSeconds = 10.0;
constexpr std::size_t kDefaultNodeBudget = 10'000'000;
constexpr std::size_t kMinActions = 3;
constexpr std::size_t kMinLiftFixtures = 8;
constexpr std::uint32_t kMutationSeed = 0x5eed;
constexpr int kMutations = 10;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string first_law(const LawReport& r) {
  const auto f = r.first_failure();
  return f ? f->law + ": " + f->counterexample : "";
}

std::vector<std::string> lift_fixtures() {
  std::vector<std::string> out;
  for (const auto& name : standard_fixture_names())
    if (parse_fixture_name(name).family != "mat") out.push_back(name);
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::set<std::string> families;
  double slowest = 0;
  const auto names = lift_fixtures();
  for (const auto& name : names) {
    const auto start = Clock::now();
    const Lift l = fixture_lift(name);
    const LawReport axioms = check_double_axioms(l.category.table());
    const StructureTable dec = example_structures(name).front().second;
    const bool same = decorated_horizontalization(l.category) == as_decorated(dec);
    const double t = seconds_since(start);
    slowest = std::max(slowest, t);
    if (!axioms.ok()) o.fail(name + " " + first_law(axioms));
    if (!same) o.fail(name + ": H* differs from the input");
    if (t >= kLiftSecondsPerFixture) o.fail(fmt::format("{} took {:.3f} s", name, t));
    const auto& f = parse_fixture_name(name);
    families.insert(f.family == "arrow" && f.fields[2] == "const" ? "constant" : f.family);
  }
  if (names.size() < kMinLiftFixtures) o.fail(fmt::format("only {} fixtures", names.size()));
  for (const char* shape : {"semidirect", "graded", "constant"})
    if (!families.count(shape)) o.fail(fmt::format("no {} fixture", shape));
  if (o.passed) o.detail = fmt::format("{} fixtures, slowest {:.3f} s", names.size(), slowest);
  return o;
}

/// (φ' ⊛ ψ') Φ_f(φ ⊛ ψ) = [φ' Φ_f(φ)] ⊛ [ψ' Φ_f(ψ)] for every f: a -> b, φ, ψ
/// in End_B(a) and φ', ψ' in End_B(b) composable with their images.
Outcome criterion2() {
  Outcome o;
  std::size_t quadruples = 0;
  for (const auto& name : lift_fixtures()) {
    const Lift l = fixture_lift(name);
    const DecoratedBicategory dec = decorated_horizontalization(l.category);
    const BicellAction act(dec, l.phi);
    const StrictBicategory& b = dec.bicat();
    const Category& c = dec.decoration();
    auto endo_cells = [&](Id a) {
      std::vector<Id> out;
      for (Id p = 0; p < b.cells2_count(); ++p)
        if (b.dom0(b.dom1(p)) == a && b.cod0(b.dom1(p)) == a) out.push_back(p);
      return out;
    };
    for (Id f = 0; f < c.morphism_count(); ++f) {
      const auto from = endo_cells(c.dom(f)), to = endo_cells(c.cod(f));
      for (Id phi : from)
        for (Id psi : from)
          for (Id phi2 : to) {
            if (b.dom1(phi2) != act.cell1(f, b.cod1(phi))) continue;
            for (Id psi2 : to) {
              if (b.dom1(psi2) != act.cell1(f, b.cod1(psi))) continue;
              ++quadruples;
              const Id lhs = b.vcomp(b.hcomp2(phi2, psi2), act.cell2(f, b.hcomp2(phi, psi)));
              const Id rhs = b.hcomp2(b.vcomp(phi2, act.cell2(f, phi)), b.vcomp(psi2, act.cell2(f, psi)));
              if (lhs != rhs || lhs == kNoId)
                o.fail(fmt::format("{}: f={} φ={} ψ={} φ'={} ψ'={}", name, f, phi, psi, phi2, psi2));
            }
          }
    }
    const LawReport axioms = check_double_axioms(l.category.table());
    for (const auto& r : axioms.results())
      if (r.law == "interchange" && !r.passed) o.fail(name + " square interchange: " + r.counterexample);
  }
  if (o.passed) o.detail = fmt::format("{} quadruples", quadruples);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto start = Clock::now();
  const SemidirectFixture inv =
      build_semidirect_fixture(action_by_name(cyclic_group(2), cyclic_group(3), "inv"));
  if (inv.endo.size() != 6) o.fail(fmt::format("endo order {}", inv.endo.size()));
  if (!inv.endo.is_group()) o.fail("endo monoid is not a group");
  if (inv.endo.is_commutative()) o.fail("endo monoid is abelian");
  const FoldingSearch absent = find_folding(inv.lift.category, kDefaultNodeBudget);
  if (absent.status != SearchStatus::absent) o.fail(fmt::format("inversion: folding {}", to_string(absent.status)));

  const Lift triv = fixture_lift("semidirect:z3:z2:triv");
  const FoldingSearch found = find_folding(triv.category, kDefaultNodeBudget);
  if (found.status != SearchStatus::found)
    o.fail(fmt::format("identity action: folding {}", to_string(found.status)));
  else if (const LawReport v = validate_folding(triv.category, *found.folding); !v.ok())
    o.fail("identity action folding invalid: " + first_law(v));
  const double t = seconds_since(start);
  if (t >= kFoldingSeconds) o.fail(fmt::format("took {:.3f} s", t));
  if (o.passed) o.detail = fmt::format("absent after {} nodes, control found; {:.3f} s", absent.nodes, t);
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& name : lift_fixtures())
    if (const std::size_t len = vertical_length(fixture_lift(name).category); len != 1)
      o.fail(fmt::format("{}: length {}", name, len));
  if (o.passed) o.detail = fmt::format("{} fixtures", lift_fixtures().size());
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t surjective = 0;
  for (const auto& name : lift_fixtures()) {
    const Lift l = fixture_lift(name);
    if (l.category.c0().object_count() != 1 || l.category.cell_count() != 1) continue;
    if (!gg_criterion_surjective(l.phi)) continue;
    ++surjective;
    if (!is_gg(l.category)) o.fail(name + ": surjective but not GG");
  }
  const MatReport mat = build_mat_fixture(4);
  if (mat.identity_square.member) o.fail("mat: (2, id) reported in V1");
  if (mat.identity_square.rank != 4) o.fail(fmt::format("mat: rank {}", mat.identity_square.rank));
  if (o.passed) o.detail = fmt::format("{} surjective fixtures GG; mat (2, id) rank 4 > 1", surjective);
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t pairs = 0, agree = 0;
  for (const auto& name : lift_fixtures()) {
    const Lift l = fixture_lift(name);
    const auto v1 = vertical_chain(l.category).levels.front();
    for (Id p = 0; p < l.category.square_count(); ++p) {
      if (l.category.is_globular(p)) continue;
      ++pairs;
      if (v1_membership(l, p).member == static_cast<bool>(v1[p]))
        ++agree;
      else
        o.fail(fmt::format("{}: square {}", name, p));
    }
  }
  o.detail = fmt::format("{}/{} pair squares agree", agree, pairs) + (o.passed ? "" : "; first: " + o.detail);
  return o;
}

/// The action count is checked separately from the laws so that a shortfall
/// in available actions does not hide the law results.
Outcome criterion7() {
  Outcome count, laws;
  const auto start = Clock::now();
  std::vector<std::string> counts;
  std::size_t total = 0;
  for (std::size_t gn : {2, 3})
    for (std::size_t an : {3, 4}) {
      const Monoid g = cyclic_group(gn), a = cyclic_group(an);
      const std::string tag = fmt::format("Z{} on Z{}", gn, an);
      std::vector<Precosheaf> phis;
      for (const auto& act : enumerate_actions(g, a)) phis.push_back(action_precosheaf(act));
      counts.push_back(fmt::format("{}: {}", tag, phis.size()));
      total += phis.size();
      if (phis.size() < kMinActions)
        count.fail(fmt::format("{} has {} actions, need {}", tag, phis.size(), kMinActions));
      const DecoratedBicategory dec(delooping(g), suspend(monoidal_delooping(a)));
      for (std::size_t k = 0; k < phis.size(); ++k) {
        const Lift l = lift(dec, phis[k]);
        if (!(extract_phi(l.category) == phis[k])) laws.fail(fmt::format("{} action {}: extract_phi", tag, k));
        const PiFunctor pi = pi_functor(l.category);
        if (!(pi.functor == identity_double_functor(l.category)))
          laws.fail(fmt::format("{} action {}: π is not the identity", tag, k));
        if (!(phi_of_double_functor(pi.lifted.category, l.category, pi.functor) == identity_transformation(phis[k])))
          laws.fail(fmt::format("{} action {}: Φ of π is not the identity", tag, k));
      }
      if (const LawReport r = check_triangle_identities(g, a, phis); !r.ok()) laws.fail(tag + " " + first_law(r));
    }
  const double t = seconds_since(start);
  if (t >= kAdjunctionSeconds) laws.fail(fmt::format("took {:.3f} s", t));
  std::string joined;
  for (const auto& c : counts) joined += (joined.empty() ? "" : ", ") + c;
  Outcome o;
  if (!count.passed) o.fail(count.detail);
  if (!laws.passed) o.fail(laws.detail);
  const std::string law_summary =
      laws.passed ? fmt::format("laws hold for all {} actions", total) : "laws: " + laws.detail;
  o.detail = fmt::format("{}{}; actions {}; {:.3f} s", o.passed ? "" : count.passed ? "" : count.detail + "; ",
                         law_summary, joined, t);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto inv = build_semidirect_fixture(action_by_name(cyclic_group(2), cyclic_group(3), "inv"));
  const auto triv = build_semidirect_fixture(action_by_name(cyclic_group(2), cyclic_group(3), "triv"));
  std::size_t tried = 0;
  if (oracle::isomorphic(inv.endo.table(), triv.endo.table(), &tried)) o.fail("isomorphic");
  if (tried != 720) o.fail(fmt::format("searched {} bijections", tried));
  if (o.passed) o.detail = "no isomorphism among 720 bijections";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    ++files;
    if (write_structure(parse_structure(text.str())) != text.str()) o.fail(entry.path().filename().string());
  }
  if (files == 0) o.fail("no fixture files");
  if (o.passed) o.detail = fmt::format("{} files byte-identical", files);
  return o;
}

/// Replaces one defined entry of a table with a different in-range value.
template <typename Rng>
std::string corrupt(std::vector<Id>& table, std::size_t range, Rng& rng) {
  std::vector<std::size_t> defined;
  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[k] != kNoId) defined.push_back(k);
  const std::size_t k = defined[std::uniform_int_distribution<std::size_t>(0, defined.size() - 1)(rng)];
  const Id old = table[k];
  const Id shift = static_cast<Id>(std::uniform_int_distribution<std::size_t>(1, range - 1)(rng));
  table[k] = static_cast<Id>((old + shift) % range);
  return fmt::format("entry {}: {} -> {}", k, old, table[k]);
}

Outcome criterion10() {
  Outcome o;
  std::mt19937 rng(kMutationSeed);
  const Monoid semidirect = semidirect_product(action_by_name(cyclic_group(2), cyclic_group(3), "inv"));
  const Category total = total_category(action_precosheaf(action_by_name(cyclic_group(2), cyclic_group(5), "inv"))).category;
  const StrictBicategory bicat = arrow_decorated_bicategory(2, 3).bicat();
  const DoubleCategory dc = fixture_lift("semidirect:z4:z2:inv").category;

  std::vector<std::function<std::pair<std::string, LawReport>()>> mutations = {
      [&] {
        MonoidTable t = semidirect.table();
        auto what = corrupt(t.product, t.size, rng);
        return std::pair{"monoid product " + what, check_laws(t)};
      },
      [&] {
        CategoryTable t = total.table();
        auto what = corrupt(t.compose, t.morphisms.size(), rng);
        return std::pair{"category composition " + what, check_laws(t)};
      },
      [&] {
        BicategoryTable t = bicat.table();
        auto what = corrupt(t.vertical, t.cells2.size(), rng);
        return std::pair{"bicategory vertical " + what, check_laws(t)};
      },
      [&] {
        BicategoryTable t = bicat.table();
        auto what = corrupt(t.horizontal2, t.cells2.size(), rng);
        return std::pair{"bicategory horizontal " + what, check_laws(t)};
      },
      [&] {
        DoubleCategoryTable t = dc.table();
        auto what = corrupt(t.horizontal_squares, t.morphisms.morphisms.size(), rng);
        return std::pair{"double horizontal " + what, check_double_axioms(t)};
      },
  };
  std::vector<std::string> laws;
  for (int i = 0; i < kMutations; ++i) {
    auto [what, report] = mutations[static_cast<std::size_t>(i) % mutations.size()]();
    const auto failure = report.first_failure();
    if (!failure || failure->law.empty())
      o.fail(fmt::format("mutation {} ({}) not caught", i, what));
    else
      laws.push_back(failure->law);
  }
  if (o.passed) {
    o.detail = fmt::format("{}/{} caught:", laws.size(), kMutations);
    for (const auto& l : laws) o.detail += " " + l;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"doublelift acceptance checks"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "criteria to run (default: all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty())
    for (int n = 1; n <= 10; ++n) selected.push_back(n);

  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                               criterion6, criterion7, criterion8, criterion9, criterion10};
  bool all = true;
  for (int n : selected) {
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.passed;
    std::cout << fmt::format("criterion {}: {} {}", n, o.passed ? "PASS" : "FAIL", o.detail) << std::endl;
  }
  return all ? 0 : 1;
}
