#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dlift {

/// Dense identifier of an element, object, cell or square. Identifiers of
/// each kind run from 0 to count-1.
using Id = std::uint32_t;

inline constexpr Id kNoId = std::numeric_limits<Id>::max();

/// Outcome of one named law over an exhaustive sweep.
struct LawResult {
  std::string law;
  bool passed = true;
  std::string counterexample;
};

/// Ordered collection of law outcomes. Each law keeps only the first
/// counterexample encountered.
class LawReport {
 public:
  class Handle {
   public:
    template <typename Describe>
    void require(bool condition, Describe&& describe) {
      if (!condition && result_->passed) {
        result_->passed = false;
        result_->counterexample = std::forward<Describe>(describe)();
      }
    }
    bool passed() const { return result_->passed; }

   private:
    friend class LawReport;
    explicit Handle(LawResult* r) : result_(r) {}
    LawResult* result_;
  };

  Handle law(std::string_view name);

  /// Appends other's laws, optionally renamed to prefix + name.
  void merge(const LawReport& other, std::string_view prefix = {});

  bool ok() const;
  std::optional<LawResult> first_failure() const;
  const std::deque<LawResult>& results() const { return results_; }

  /// Throws LawViolation for the first failed law.
  void throw_if_failed() const;

 private:
  std::deque<LawResult> results_;
};

/// A structure failed one of its axioms at construction.
class LawViolation : public std::runtime_error {
 public:
  LawViolation(std::string law, std::string counterexample);
  const std::string& law() const { return law_; }
  const std::string& counterexample() const { return counterexample_; }

 private:
  std::string law_;
  std::string counterexample_;
};

/// An operation was called on input outside its supported shape, or a
/// documented precondition was violated.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool in_range(Id id, std::size_t count) { return id < count; }

inline std::size_t pair_index(Id lhs, Id rhs, std::size_t n) {
  return static_cast<std::size_t>(lhs) * n + rhs;
}

}  // namespace dlift
