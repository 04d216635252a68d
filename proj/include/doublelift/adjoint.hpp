#pragma once

// Internalizations of (ΩG, 2ΩA) for a group G: the pre-cosheaf Φ^C, the
// projection π^C, Φ^• on double functors, and the adjunction triangles.

#include <string>
#include <vector>

#include "doublelift/analysis.hpp"
#include "doublelift/lift.hpp"

namespace dlift {

/// Φ^C_g(a) = i_g ⊡ a ⊡ i_{g^-1}, with i_{g^-1} composed first. Throws
/// ShapeError naming the first violated precondition: one object, C0 a
/// group, one horizontal 1-cell, GG, vertical length 1.
Precosheaf extract_phi(const DoubleCategory& c);

struct PiFunctor {
  Lift lifted;  // C^{Φ^C}
  DoubleFunctor functor;
  bool full = false;
  bool injective = false;
  bool fixes_horizontalization = false;
};

/// F1 sends (g, a) to a ⊡ i_g. Throws LawViolation if the result is not a
/// double functor.
PiFunctor pi_functor(const DoubleCategory& c);

/// F1 on globular squares as a transformation Φ^C -> Φ^D. Throws ShapeError
/// when F0 is not the identity and LawViolation when it is not natural.
NaturalTransformation phi_of_double_functor(const DoubleCategory& c, const DoubleCategory& d,
                                            const DoubleFunctor& f);

/// Natural transformations between two pre-cosheaves over a one-object base
/// with one-object fibers, by exhaustive search over fiber endomorphisms.
std::vector<NaturalTransformation> enumerate_transformations(const Precosheaf& from, const Precosheaf& to);

/// The same double category with its non-globular squares renumbered by the
/// permutation perm (old identifier -> new identifier, fixing globulars),
/// together with the double functor old -> new.
struct Relabeling {
  DoubleCategory category;
  DoubleFunctor functor;
};
Relabeling relabel_squares(const DoubleCategory& c, const std::vector<Id>& perm);

/// An internalization isomorphic to the lift of phis[of] through from_lift.
struct ExtraInternalization {
  DoubleCategory category;
  std::size_t of = 0;
  DoubleFunctor from_lift;
};

/// Triangles of Φ^• ⊣ C^• over (ΩG, 2ΩA): for each pre-cosheaf Φ the unit
/// round trip and π^{C^Φ} = id; for each internalization C, Φ^{π^C} = id;
/// and naturality of the counit along every C^η between lifts, also
/// followed by the isomorphisms onto the extra internalizations.
LawReport check_triangle_identities(const Monoid& g, const Monoid& a, const std::vector<Precosheaf>& phis,
                                    const std::vector<ExtraInternalization>& extra = {});

}  // namespace dlift
