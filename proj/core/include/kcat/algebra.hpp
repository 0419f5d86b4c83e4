#pragma once

#include "kcat/action.hpp"
#include "kcat/grading.hpp"
#include "kcat/group.hpp"
#include "kcat/lincat.hpp"

namespace kcat {

/// Finite-dimensional associative unital algebra: basis ids, sparse
/// structure constants (absent pair = zero product), and the unit as a
/// sparse coefficient vector.
struct Algebra {
  FieldSpec field;
  std::vector<std::string> basis;
  /// (i, j) -> expansion of e_i·e_j (left factor first).
  std::map<std::pair<unsigned, unsigned>, std::vector<std::pair<unsigned, Scalar>>> mul;
  std::vector<std::pair<unsigned, Scalar>> unit;

  std::size_t dim() const { return basis.size(); }
  unsigned index(const std::string& id) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Associativity on all basis triples and two-sided unit law.
std::vector<Diagnostic> validate_algebra(const Algebra& a);

Vec algebra_unit_vec(const Field& k, const Algebra& a);
Vec algebra_basis_vec(const Field& k, const Algebra& a, unsigned i);
Vec algebra_mul(const Field& k, const Algebra& a, const Vec& x, const Vec& y);

/// Linear map between algebras as a (codomain-dim × domain-dim) matrix.
struct AlgebraMap {
  AlgebraPtr domain;
  AlgebraPtr codomain;
  Matrix matrix;
};

/// Multiplicative on all basis pairs; maps the unit to the unit when
/// require_unital is set.
std::vector<Diagnostic> check_algebra_map(const AlgebraMap& m, bool require_unital = true);
/// check_algebra_map passes and the matrix is invertible.
bool is_algebra_isomorphism(const AlgebraMap& m, bool require_unital = true);

/// a(C): all basis morphisms with the matrix product induced by
/// composition (non-composable products are zero); unit = Σ_x id_x.
Algebra algebra_of_category(const LinCat& c);

/// G acting on an algebra by automorphisms, one matrix per element.
struct AlgebraAction {
  Group group;
  std::vector<Matrix> automorphism;
};
/// Each matrix is a unital algebra automorphism and s -> M_s is a group
/// homomorphism.
std::vector<Diagnostic> check_algebra_action(const Algebra& a, const AlgebraAction& act);

/// The action of G on a(C) induced by an action on C.
AlgebraAction induced_algebra_action(const GAction& a, const Algebra& ac);

/// Skew group algebra A[G]: basis (a_i, s), product
/// (b,t)·(a,s) = (b·t(a), ts). Throws NotAutomorphism.
struct SkewGroupAlgebra {
  Algebra algebra;
  std::vector<std::pair<unsigned, unsigned>> labels;  // (basis of A, s)
  std::map<std::pair<unsigned, unsigned>, unsigned> index;
};
SkewGroupAlgebra skew_group_algebra(const Algebra& a, const AlgebraAction& act);

/// Grading of an algebra: one group element per basis element; the unit is
/// concentrated in degree 1 and products are degree-multiplicative.
struct AlgebraGrading {
  Group group;
  std::vector<unsigned> degree;
};
std::vector<Diagnostic> check_algebra_grading(const Algebra& a, const AlgebraGrading& g);

/// Smash product A#k^G: basis (a_i, δ_u) with the twisted product
/// δ_t·f_s = f_s·δ_{s⁻¹t}, so (a δ_u)(b δ_v) = [deg(b)⁻¹u = v] (a·b) δ_v.
/// Throws InhomogeneousBasis (via the grading check).
struct SmashAlgebra {
  Algebra algebra;
  std::vector<std::pair<unsigned, unsigned>> labels;  // (basis of A, u)
  std::map<std::pair<unsigned, unsigned>, unsigned> index;
};
SmashAlgebra smash_algebra(const Algebra& a, const AlgebraGrading& g);

/// Re-checks the three twist identities of the smash product on all basis
/// data: (δ_u δ_t)f = δ_u(δ_t f) with its explicit value, δ_u(gf) =
/// (gf)δ_{(deg g·deg f)⁻¹u} = (δ_u g)f, and 1_{k^G}·f = f = f·1_{k^G}.
std::vector<Diagnostic> verify_twist_identities(const Algebra& a, const AlgebraGrading& g,
                                                const SmashAlgebra& sm);

struct CoherenceResult {
  AlgebraMap map;
  bool ok = false;
  std::vector<Diagnostic> diagnostics;
};

/// ψ: a(C[G]) -> a(C)[G], sending the component-s basis element over f to
/// f⊗s; ok iff bijective, multiplicative and unital.
CoherenceResult coherence_skew(const GAction& a);

/// φ: a(C_A#G) -> A#k^G, sending the elementary matrix over f with source
/// label s to f·δ_{s⁻¹}; ok iff bijective, multiplicative and unital.
/// Works directly on the graded algebra data.
CoherenceResult coherence_smash(const Algebra& a, const AlgebraGrading& g);

/// M_n(A) with basis (i, j, a-basis) under matrix-unit calculus.
struct MatrixAlgebra {
  Algebra algebra;
  std::vector<std::tuple<unsigned, unsigned, unsigned>> labels;  // (row, col, basis of A)
  std::map<std::tuple<unsigned, unsigned, unsigned>, unsigned> index;
};
MatrixAlgebra matrix_algebra(const Algebra& a, std::size_t n);

/// Single-object linear category with endomorphism algebra A. Requires the
/// unit of A to be a designated basis element; throws NonBasisUnit.
LinCatPtr single_object_category(const Algebra& a, const std::string& object_id = "o");
/// The grading of that category given by an algebra grading.
Grading single_object_grading(const LinCatPtr& c, const Algebra& a, const AlgebraGrading& g);

/// Builds (C_A#G)[G], takes its category algebra, and verifies the explicit
/// isomorphism onto M_|G|(A) assembled from the orbit-witness translations
/// (rows and columns indexed by G), plus the identification of the skeleton
/// endomorphism algebra with A itself.
struct MatrixDualityCheck {
  bool ok = false;
  bool matrix_iso_ok = false;
  bool skeleton_end_is_a = false;
  std::size_t skew_algebra_dim = 0;  // should be |G|²·dim A
};
MatrixDualityCheck duality_matrix_check(const Algebra& a, const AlgebraGrading& g);

}  // namespace kcat
