#pragma once

// GG piece, vertical chain and length, V1 membership by factorization, and
// the folding / cofolding searches on single-object lifts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "doublelift/doublecat.hpp"
#include "doublelift/lift.hpp"

namespace dlift {

/// Closure of a square set under vertical composition.
std::vector<char> vertical_closure(const DoubleCategory& c, std::vector<char> squares);
/// Closure of a square set under horizontal composition.
std::vector<char> horizontal_closure(const DoubleCategory& c, std::vector<char> squares);

/// Globular squares together with the horizontal identities of all vertical
/// morphisms.
std::vector<char> gamma_generators(const DoubleCategory& c);

/// Squares of the sub-double category generated by gamma_generators.
std::vector<char> gamma_squares(const DoubleCategory& c);
SubDoubleCategory gamma(const DoubleCategory& c);
bool is_gg(const DoubleCategory& c);

/// levels[k] is V^{k+1}: V^1 is generated vertically by gamma_generators,
/// V^{k+1} vertically by the horizontal closure of V^k. The chain is listed
/// up to the first repetition, whose level equals the squares of gamma C.
struct VerticalChain {
  std::vector<std::vector<char>> levels;
  std::size_t length = 0;
  std::vector<std::size_t> sizes() const;
};

VerticalChain vertical_chain(const DoubleCategory& c);
std::size_t vertical_length(const DoubleCategory& c);

/// A square (f, phi) of a lift with f not an identity lies in V^1 iff
/// phi = eta o Φ_f(psi) for 2-cells psi: top -> i_a and eta: i_b -> bottom.
struct V1Witness {
  bool member = false;
  Id psi = kNoId;
  Id eta = kNoId;
};

/// Throws ShapeError for squares that are not pair squares.
V1Witness v1_membership(const Lift& l, Id square);

// ---------------------------------------------------------------------------
// Foldings

/// lambda[square] is the globular square assigned to it. Squares with both
/// vertical sides m form the block of m.
struct Folding {
  std::vector<Id> lambda;
};

enum class SearchStatus { found, absent, inconclusive };

struct FoldingSearch {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<Folding> folding;
  std::size_t nodes = 0;
  /// For absence, the constraint that closed the last open branch.
  std::string certificate;
};

/// Which pasting the vertical compatibility uses.
enum class FoldingKind { folding, cofolding };

/// Requires one object and one horizontal 1-cell, and every square to have
/// equal vertical sides; throws ShapeError otherwise.
FoldingSearch find_folding(const DoubleCategory& c, std::size_t node_limit,
                           FoldingKind kind = FoldingKind::folding);
FoldingSearch find_cofolding(const DoubleCategory& c, std::size_t node_limit);

/// Exhaustive check of the folding laws for a candidate family.
LawReport validate_folding(const DoubleCategory& c, const Folding& f,
                           FoldingKind kind = FoldingKind::folding);

/// Every Φ_m is surjective on the single fiber's morphisms. Throws
/// ShapeError unless the base has one object and the fiber is commutative.
bool gg_criterion_surjective(const Precosheaf& phi);

const char* to_string(SearchStatus s);

}  // namespace dlift
