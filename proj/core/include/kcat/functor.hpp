#pragma once

#include <map>
#include <string>
#include <vector>

#include "kcat/lincat.hpp"

namespace kcat {

/// k-linear functor as data: an object map and, per domain hom space, the
/// matrix of the induced linear map Hom(x,y) -> Hom(Fx,Fy).
struct LinFunctor {
  LinCatPtr domain;
  LinCatPtr codomain;
  std::vector<ObjectIndex> object_map;
  /// Keyed by domain pair (x,y); present exactly when dim Hom(x,y) > 0.
  std::map<std::pair<ObjectIndex, ObjectIndex>, Matrix> hom_maps;

  ObjectIndex map_object(ObjectIndex x) const { return object_map[x]; }
  const Matrix& hom_map(ObjectIndex x, ObjectIndex y) const;
};

LinFunctor identity_functor(const LinCatPtr& c);

/// Image of a morphism under the functor.
Morphism apply_functor(const LinFunctor& f, const Morphism& m);
/// Image of a single basis morphism.
Morphism apply_functor_basis(const LinFunctor& f, BasisIndex b);

LinFunctor compose_functors(const LinFunctor& g, const LinFunctor& f);

/// Empty iff both functor laws hold on all basis data: F(id_x) = id_{Fx}
/// and F(g∘f) = F(g)∘F(f) for every composable basis pair.
std::vector<Diagnostic> check_functor(const LinFunctor& f);

/// True iff the object map is a bijection and every hom matrix is
/// invertible. Precondition: check_functor(f) passes.
bool is_isomorphism(const LinFunctor& f);

/// Explicit essential-surjectivity witness for a codomain object z: a
/// domain object x and mutually inverse u: F(x) -> z, v: z -> F(x).
struct WitnessPair {
  ObjectIndex domain_object = 0;
  Morphism u;
  Morphism v;
};

struct EquivalenceVerdict {
  bool ok = false;
  std::string failure;  // "BadWitness: <object>" or the failed law
  explicit operator bool() const { return ok; }
};

/// True iff F is full and faithful (every hom matrix bijective) and the
/// witnesses exhibit essential surjectivity (v∘u = id, u∘v = id). One
/// witness per codomain object, in object order.
EquivalenceVerdict check_equivalence_with_witness(const LinFunctor& f,
                                                  const std::vector<WitnessPair>& witnesses);

struct FullSubcategory {
  LinCatPtr category;
  LinFunctor inclusion;
};

/// Full subcategory on a nonempty subset of objects; homs, identities and
/// composition are restricted. Throws UnknownObject.
FullSubcategory full_subcategory(const LinCatPtr& c, const std::vector<std::string>& objects);

}  // namespace kcat
