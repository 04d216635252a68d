#pragma once

// Named fixtures: semidirect products, the twisted graded category, the
// bounded slice of Mat, and a two-object decoration.

#include <optional>
#include <string>
#include <vector>

#include "doublelift/analysis.hpp"
#include "doublelift/lift.hpp"
#include "doublelift/rational.hpp"

namespace dlift {

// ---------------------------------------------------------------------------
// Semidirect products

struct SemidirectFixture {
  DecoratedBicategory dec;  // (ΩM, 2ΩN)
  Precosheaf phi;
  Lift lift;
  Monoid endo;        // End(i_*) in C1; element k is square k
  Monoid semidirect;  // N ⋊ M
  /// Square k of the lift is element bijection[k] of the semidirect product.
  std::vector<Id> bijection;
};

/// Throws LawViolation ("semidirect-endomorphisms") if End(i_*) differs from
/// N ⋊ M under the provenance bijection.
SemidirectFixture build_semidirect_fixture(const MonoidAction& phi);

// ---------------------------------------------------------------------------
// Graded categories

/// C_G(H): objects δ_g, Hom(δ_g, δ_g) = H and no other morphisms, tensor by
/// the products of G and H. Morphism (g, h) has index g * |H| + h.
StrictMonoidalCategory graded_category(const Monoid& g, const Monoid& h);

/// C_G(H, Φ): objects g, Hom(g, g) = H composed by the product of H, tensor
/// (g', h') ⊗ (g, h) = (g'g, h' Φ_{g'}(h)).
StrictMonoidalCategory twisted_graded_category(const MonoidAction& phi);

struct GradedFixture {
  DecoratedBicategory dec;  // (ΩG, 2C_G(H))
  Precosheaf phi;
  Lift lift;
  /// Squares on the unit 1-cell: objects are vertical morphisms, composition
  /// is ⊟ and the tensor is ⊡.
  StrictMonoidalCategory vertical;
  std::vector<Id> vertical_squares;  // morphism k of vertical is this square
  StrictMonoidalCategory twisted;
  Functor isomorphism;  // vertical -> twisted
};

/// Requires G and H groups, H commutative and Φ acting by automorphisms.
GradedFixture build_graded_fixture(const MonoidAction& phi);

// ---------------------------------------------------------------------------
// The bounded slice of Mat

/// A square (m, P) of the lift of Mat over (ℕ, ×): P is a bottom x top^m
/// matrix, i.e. a morphism Φ_m(top) -> bottom.
struct MatSquare {
  std::size_t m = 1;
  std::size_t top = 1;
  std::size_t bottom = 1;
  RationalMatrix payload;
};

struct MatDecision {
  bool member = false;
  std::size_t rank = 0;
  /// On membership with m != 1: payload = eta * psi^{⊗m}.
  std::optional<RationalMatrix> psi, eta;
  std::string reason;
};

/// Decides V1 membership: m = 1 squares are globular, otherwise the payload
/// must factor through the unit object 1.
MatDecision mat_v1_membership(const MatSquare& s);

struct MatReport {
  std::size_t nmax = 0;
  MatDecision identity_square;       // (2, id_4)
  MatDecision globular_square;       // (1, id_2)
  MatDecision rank_one_square;       // (2, eta psi⊗psi)
  MatDecision rank_one_non_power;    // rank 1, row not a tensor square
  bool gg = true;
};

/// Throws ShapeError for nmax < 4.
MatReport build_mat_fixture(std::size_t nmax);

// ---------------------------------------------------------------------------
// Two-object decoration a -> b

/// Decoration {a, b, f: a -> b}; 1-cells i_a, i_b and c: a -> b with
/// End(i_a) = Hom(c, c) = Z_p and End(i_b) = Z_q. Horizontal composition
/// adds End(i_a) into Hom(c, c) and ignores End(i_b).
DecoratedBicategory arrow_decorated_bicategory(std::size_t p, std::size_t q);

/// Φ_f: Z_p -> Z_q, as an element map.
Precosheaf arrow_precosheaf(const DecoratedBicategory& dec, const ElementMap& phi_f);

// ---------------------------------------------------------------------------
// Names

/// z<n> (cyclic group), n<k> (truncated naturals), trivial.
Monoid monoid_by_name(const std::string& name);

/// The action m -> e^m for the generator 1 of M, where e is: triv (identity),
/// inv (negation), mul<k> (multiplication by k), or const (every non-unit
/// element acts by the zero map). N must be cyclic for inv and mul<k>.
MonoidAction action_by_name(const Monoid& m, const Monoid& n, const std::string& name);

/// A fixture name with its parsed fields.
struct FixtureName {
  std::string family;  // semidirect, graded, mat, arrow
  std::vector<std::string> fields;
};

FixtureName parse_fixture_name(const std::string& name);

/// Lift of a named fixture; mat has none and throws ShapeError.
Lift fixture_lift(const std::string& name);

/// The names exercised by the acceptance suite.
const std::vector<std::string>& standard_fixture_names();

}  // namespace dlift
