#pragma once

#include "kcat/action.hpp"
#include "kcat/grading.hpp"

namespace kcat {

/// Smash product B#G of a graded category: objects (x,s), and
/// Hom((x,s),(y,t)) is the degree t⁻¹s component of Hom(x,y). Each smash
/// basis element records (base, source label, target label). The free
/// translation action u·(x,s) = (x,us) leaves morphisms unchanged.
struct SmashProduct {
  LinCatPtr category;
  GAction translation;

  struct ObjectLabel {
    ObjectIndex base;
    unsigned label;
  };
  struct BasisLabel {
    BasisIndex base;
    unsigned source_label;
    unsigned target_label;
  };
  std::vector<ObjectLabel> object_labels;
  std::vector<BasisLabel> basis_labels;
  std::map<std::pair<ObjectIndex, unsigned>, ObjectIndex> object_index;  // (base,s)
  std::map<std::pair<BasisIndex, unsigned>, BasisIndex> basis_index;     // (base,s)

  /// Arrow decomposition lifted from the base category, when provided.
  std::optional<PathMeta> path_meta;
};

/// Throws InvalidGrading when check_grading(g) fails.
SmashProduct smash_product(const Grading& g, const PathMeta* base_meta = nullptr);

struct IsoCheck {
  LinFunctor iso;
  bool ok = false;
  std::vector<Diagnostic> diagnostics;
};

/// The isomorphism (B#G)/G -> B (retain the underlying basis element of
/// each class); ok iff it is a functor isomorphism.
IsoCheck verify_smash_quotient(const Grading& g);

/// The isomorphism (C/G)#G -> C for a free action: (α,s) -> s·x_α on
/// objects and (class with label u, source s, target t) -> t·base on
/// morphisms. Throws NotFree.
IsoCheck reconstruct_cover(const GAction& a, const OrbitData& od);

/// Certifies (B#G)[G] ≃ B by chaining the skew category of the translation
/// action, the skeleton equivalence, the skeleton/quotient identification,
/// and the smash-quotient isomorphism.
struct DualityCheck {
  bool ok = false;
  bool action_valid = false;
  bool translation_free = false;
  bool skeleton_functor_valid = false;
  bool skeleton_equivalence_ok = false;
  bool inclusion_equivalence_ok = false;
  bool quotient_identification_ok = false;
  bool smash_quotient_ok = false;
};
DualityCheck verify_smash_skew_duality(const Grading& g);

}  // namespace kcat
