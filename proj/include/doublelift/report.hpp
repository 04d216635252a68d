#pragma once

// Reports behind the command line: one JSON object per command, with the
// named checks it ran and their conjunction.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doublelift/serialize.hpp"
#include "json.hpp"

namespace dlift {

using Report = nlohmann::ordered_json;

Report check_report(const StructureTable& s);

struct LiftOutcome {
  Report report;
  std::optional<StructureTable> lifted;  // absent when an input fails its laws
};
LiftOutcome lift_report(const StructureTable& dec, const StructureTable& phi);

Report analyze_report(const StructureTable& c);
Report folding_report(const StructureTable& c, std::size_t node_limit);
Report adjunction_report(const StructureTable& g, const StructureTable& a, const std::vector<StructureTable>& phis);
Report example_report(const std::string& name, std::size_t node_limit);

/// The decorated bicategory, pre-cosheaf and lift of a named fixture, keyed by
/// kind. Empty for mat.
std::vector<std::pair<std::string, StructureTable>> example_structures(const std::string& name);

/// "law: counterexample" of the first failed check.
std::optional<std::string> first_failure(const Report& r);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace dlift
