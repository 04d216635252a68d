#include "doublelift/core.hpp"

#include <algorithm>

namespace dlift {

LawReport::Handle LawReport::law(std::string_view name) {
  auto it = std::find_if(results_.begin(), results_.end(),
                         [&](const LawResult& r) { return r.law == name; });
  if (it != results_.end()) return Handle(&*it);
  results_.push_back(LawResult{std::string(name), true, {}});
  return Handle(&results_.back());
}

void LawReport::merge(const LawReport& other, std::string_view prefix) {
  for (const auto& r : other.results_) {
    auto h = law(std::string(prefix) + r.law);
    h.require(r.passed, [&] { return r.counterexample; });
  }
}

bool LawReport::ok() const {
  return std::all_of(results_.begin(), results_.end(), [](const LawResult& r) { return r.passed; });
}

std::optional<LawResult> LawReport::first_failure() const {
  for (const auto& r : results_)
    if (!r.passed) return r;
  return std::nullopt;
}

void LawReport::throw_if_failed() const {
  if (auto f = first_failure()) throw LawViolation(f->law, f->counterexample);
}

LawViolation::LawViolation(std::string law, std::string counterexample)
    : std::runtime_error("law '" + law + "' violated: " + counterexample),
      law_(std::move(law)),
      counterexample_(std::move(counterexample)) {}

}  // namespace dlift
