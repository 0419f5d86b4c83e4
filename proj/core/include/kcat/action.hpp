#pragma once

#include <tuple>

#include "kcat/functor.hpp"
#include "kcat/grading.hpp"
#include "kcat/group.hpp"
#include "kcat/lincat.hpp"

namespace kcat {

/// Group acting on a linear category by autofunctors: a permutation of the
/// objects and an invertible matrix Hom(x,y) -> Hom(sx,sy) per element.
struct GAction {
  Group group;
  LinCatPtr category;
  std::vector<std::vector<ObjectIndex>> object_perm;  // [s][x] = s·x
  /// Keyed by (s, x, y); present exactly when dim Hom(x,y) > 0.
  std::map<std::tuple<unsigned, ObjectIndex, ObjectIndex>, Matrix> hom_maps;

  ObjectIndex act_object(unsigned s, ObjectIndex x) const { return object_perm[s][x]; }
  const Matrix& hom_map(unsigned s, ObjectIndex x, ObjectIndex y) const;
  /// Image of a morphism under the autofunctor of s.
  Morphism act(unsigned s, const Morphism& m) const;
  /// Image of a basis morphism, as a morphism of Hom(s·x, s·y).
  Morphism act_basis(unsigned s, BasisIndex b) const;
};

/// Identity element acts as the identity, (ts)f = t(sf), and every s is a
/// functor (preserves identities and composition on basis data).
std::vector<Diagnostic> check_action(const GAction& a);

/// Orbit bookkeeping for an action. translate_to_rep[x] is a group element
/// s with s·x = representative(orbit(x)); it is unique exactly when the
/// action is free (the least such s is stored otherwise).
struct OrbitData {
  bool free = false;
  std::vector<unsigned> orbit_of;                 // object -> orbit index
  std::vector<std::vector<ObjectIndex>> orbits;   // orbit -> sorted objects
  std::vector<ObjectIndex> representative;        // orbit -> object
  std::vector<unsigned> translate_to_rep;         // object -> group element
};

struct FreenessCheck {
  bool free = false;
  std::string witness;  // "(s,x)" with s·x = x when not free
  OrbitData orbits;
};

/// True iff no nonidentity element fixes an object. Representatives default
/// to the lexicographically least object id per orbit.
FreenessCheck is_free(const GAction& a);

/// Orbit data with explicit representatives (one object id per orbit, any
/// order). Throws BadRepresentatives on duplicates within an orbit.
OrbitData orbit_data_with_reps(const GAction& a, const std::vector<std::string>& reps);

/// Skew category C[G]: same objects, Hom(x,y) = direct sum over s of
/// Hom(s·x, y); basis elements are component-labelled pairs (s, b), and
/// (t,g)∘(s,f) = (ts, g∘(t·f)). Identities are (1, id). Freeness is not
/// required.
struct SkewCategory {
  LinCatPtr category;
  /// Per skew basis index: the component label s and underlying basis b.
  std::vector<std::pair<unsigned, BasisIndex>> labels;
  /// (s, b) -> skew basis index. The source object is s⁻¹·source(b).
  std::map<std::pair<unsigned, BasisIndex>, BasisIndex> index;
};
SkewCategory skew_category(const GAction& a);

/// Quotient category C/G of a free action: objects are orbits, and
/// Hom(α,β) has basis (s, b) with b a basis morphism s·x_α -> x_β. The
/// projection sends a basis morphism to its normalized class. Throws
/// NotFree.
struct QuotientCategory {
  LinCatPtr category;
  LinFunctor projection;  // C -> C/G
  std::vector<std::pair<unsigned, BasisIndex>> labels;  // per quotient basis
  /// base basis (with representative target) -> quotient basis index
  std::map<BasisIndex, BasisIndex> index_of_base;
};
QuotientCategory quotient_category(const GAction& a, const OrbitData& od);

/// Mutually inverse isomorphisms between objects of one orbit in C[G]:
/// u = (s, id_y): x -> y and v = (s⁻¹, id_x): y -> x where s·x = y.
/// Throws NotSameOrbit.
std::pair<Morphism, Morphism> orbit_iso_witness(const SkewCategory& sk, const GAction& a,
                                                ObjectIndex x, ObjectIndex y);

/// The skeleton equivalence: F: C[G] -> underline C[G] transporting
/// morphisms along the canonical orbit witnesses, the inclusion going back,
/// and (for free actions) the basis-by-basis identification of the
/// skeleton with C/G.
struct SkeletonEquivalence {
  SkewCategory skew;
  FullSubcategory skeleton;        // full subcategory on the representatives
  LinFunctor to_skeleton;          // C[G] -> underline C[G]
  std::vector<WitnessPair> to_skeleton_witnesses;   // per skeleton object
  std::vector<WitnessPair> inclusion_witnesses;     // per C[G] object
  /// For free actions: identity-on-coordinates functor C/G -> underline C[G].
  std::optional<QuotientCategory> quotient;
  std::optional<LinFunctor> quotient_identification;
};
SkeletonEquivalence skeleton_equivalence(const GAction& a, const OrbitData& od);

/// Degree map on the quotient of a free action: the basis element (s, b)
/// has degree s. Throws NotFree.
Grading induced_grading(const GAction& a, const OrbitData& od, const QuotientCategory& q);

/// Explicit isomorphism between the quotients built from two choices of
/// representatives (conjugation by the translations).
LinFunctor quotient_change_of_reps(const GAction& a, const OrbitData& od1,
                                   const QuotientCategory& q1, const OrbitData& od2,
                                   const QuotientCategory& q2);

}  // namespace kcat
