#pragma once

#include "kcat/action.hpp"
#include "kcat/functor.hpp"
#include "kcat/grading.hpp"
#include "kcat/smash.hpp"

namespace kcat {

/// Representation of a linear category: a dimension per object and a
/// matrix per basis morphism (dim target × dim source).
struct Module {
  LinCatPtr category;
  std::vector<std::size_t> dims;  // per object
  std::vector<Matrix> action;     // per global basis index

  friend bool operator==(const Module&, const Module&) = default;
};

/// Identities act as identity matrices and the action respects every comp
/// entry (absent entry = zero product).
std::vector<Diagnostic> check_module(const Module& m);

/// Module over a graded category with a per-object partition of the
/// coordinates into degree blocks (explicit index lists, one per group
/// element).
struct GradedModule {
  Module module;
  /// blocks[object][group element] = sorted coordinate indices.
  std::vector<std::vector<std::vector<std::uint32_t>>> blocks;

  friend bool operator==(const GradedModule&, const GradedModule&) = default;
};

/// check_module plus: blocks partition the coordinates, and a basis
/// morphism of degree t maps the degree-s block into the degree-ts block.
std::vector<Diagnostic> check_graded_module(const GradedModule& n, const Grading& g);

/// Restriction F*N = N∘F along a functor.
Module restrict_module(const LinFunctor& f, const Module& n);

/// Twisted module ^sM: dims(x) = dims(s⁻¹x), action of c = action of s⁻¹c.
Module twist_module(const GAction& a, unsigned s, const Module& m);

/// Strict data equality of ^sM and M for every s.
bool is_fixed(const GAction& a, const Module& m);

/// Graded module over B to module over B#G: dims(x,s) = size of the
/// degree-s⁻¹ block at x, action by the corresponding submatrices.
Module graded_to_cover(const GradedModule& n, const Grading& g, const SmashProduct& sm);

/// Module over B#G to graded module over B: degree-s block at x is the
/// fiber at (x, s⁻¹), laid out contiguously in group-element order.
GradedModule cover_to_graded(const Module& m, const Grading& g, const SmashProduct& sm);

/// The quotient covering of a free action packaged for module transport:
/// projection C -> C/G, induced grading, smash of the quotient, and the
/// reconstruction isomorphism (C/G)#G -> C.
struct CoveringSetup {
  QuotientCategory quotient;
  Grading grading;       // on the quotient
  SmashProduct smash;    // of the quotient
  LinFunctor reconstruction;  // (C/G)#G -> C
  bool reconstruction_ok = false;
};
CoveringSetup covering_setup(const GAction& a, const OrbitData& od);

/// Checks that cover_to_graded(restrict(projection∘reconstruction, N)) has
/// a block of size dims_N(x) at every object and degree, and that the
/// action of every basis morphism of degree t is the copy of N's action
/// from block s to block ts (all other blocks zero) — the |G|-fold direct
/// sum of N, graded by translation.
bool induced_sum_check(const CoveringSetup& cs, const Module& n);

/// Regular module: fiber at z is spanned by all basis morphisms into z;
/// morphisms act by composition.
Module regular_module(const LinCatPtr& c);
/// Its graded refinement for a graded category (blocks by degree).
GradedModule regular_graded_module(const Grading& g);

}  // namespace kcat
