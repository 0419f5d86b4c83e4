#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcat/linalg.hpp"
#include "kcat/scalar.hpp"

namespace kcat {

using ObjectIndex = std::uint32_t;
using BasisIndex = std::uint32_t;

/// Sparse linear combination of basis morphisms, sorted by basis index,
/// zero coefficients dropped.
using SparseVec = std::vector<std::pair<BasisIndex, Scalar>>;

/// Finite k-linear category: objects, a chosen basis for every hom space,
/// designated identity basis elements, and sparse composition structure
/// constants. An absent comp entry for a composable pair means the
/// composite is zero.
struct LinCat {
  FieldSpec field;

  std::vector<std::string> objects;
  std::vector<std::string> basis_ids;
  std::vector<ObjectIndex> basis_source;
  std::vector<ObjectIndex> basis_target;

  /// (x, y) -> ordered global basis indices of Hom(x, y); pairs with empty
  /// hom spaces are absent.
  std::map<std::pair<ObjectIndex, ObjectIndex>, std::vector<BasisIndex>> homs;
  /// Position of each basis morphism within its hom list.
  std::vector<std::uint32_t> basis_pos;
  /// Designated identity basis element of End(x); may be unset in raw
  /// loaded data (validate_category then reports NoIdentity).
  std::vector<std::optional<BasisIndex>> identity_of;

  /// (g, f) -> expansion of g∘f; keys exist only for composable pairs with
  /// nonzero composite.
  std::map<std::pair<BasisIndex, BasisIndex>, SparseVec> comp;

  std::size_t object_count() const { return objects.size(); }
  std::size_t basis_count() const { return basis_ids.size(); }

  ObjectIndex object_index(const std::string& id) const;
  BasisIndex basis_index(const std::string& id) const;

  const std::vector<BasisIndex>& hom(ObjectIndex x, ObjectIndex y) const;
  std::size_t dim_hom(ObjectIndex x, ObjectIndex y) const { return hom(x, y).size(); }
  bool is_identity_basis(BasisIndex b) const;
  BasisIndex identity_basis(ObjectIndex x) const;  // throws NoIdentity if unset

  /// Total dimension of the algebra of the category (sum of hom dims).
  std::size_t total_dim() const { return basis_ids.size(); }
};

using LinCatPtr = std::shared_ptr<const LinCat>;

/// Assembles a LinCat, enforcing id uniqueness and comp well-formedness.
class LinCatBuilder {
 public:
  explicit LinCatBuilder(FieldSpec field);

  void add_object(const std::string& id);
  void add_basis(const std::string& id, const std::string& source, const std::string& target);
  void set_identity(const std::string& object, const std::string& basis);
  /// Terms may be unsorted and contain zero coefficients; they are
  /// normalized. Setting an empty expansion is allowed (drops the entry).
  void set_comp(const std::string& g, const std::string& f,
                const std::vector<std::pair<std::string, Scalar>>& terms);

  LinCat build() &&;
  LinCatPtr build_shared() &&;

 private:
  LinCat cat_;
  std::map<std::string, ObjectIndex> object_index_;
  std::map<std::string, BasisIndex> basis_index_;
};

/// Element of a hom space: dense coefficients over hom(source, target).
struct Morphism {
  ObjectIndex source = 0;
  ObjectIndex target = 0;
  Vec coeffs;
};

Morphism zero_morphism(const LinCat& c, ObjectIndex x, ObjectIndex y);
Morphism basis_morphism(const LinCat& c, BasisIndex b);
Morphism identity_morphism(const LinCat& c, ObjectIndex x);
Morphism morphism_add(const Field& k, const LinCat& c, const Morphism& a, const Morphism& b);
Morphism morphism_scale(const Field& k, const Scalar& s, const Morphism& a);
bool morphism_eq(const Field& k, const Morphism& a, const Morphism& b);
SparseVec morphism_to_sparse(const Field& k, const LinCat& c, const Morphism& m);

/// Bilinear composition g∘f; throws NotComposable when source(g) != target(f).
Morphism compose(const LinCat& c, const Morphism& g, const Morphism& f);

/// Empty diagnostics iff the data is a k-linear category: well-formed comp
/// entries, designated identities, identity laws, associativity on all
/// composable basis triples. Witnesses name the offending ids.
std::vector<Diagnostic> validate_category(const LinCat& c);

/// Finite acyclic directed multigraph.
struct Quiver {
  struct Arrow {
    std::string name;
    std::string source;
    std::string target;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
};

/// Arrow decomposition of every basis morphism of a free category (empty
/// list for identities), in application order. Carried by constructions
/// that preserve freeness so random modules can be generated from arrow
/// data alone.
struct PathMeta {
  std::vector<std::vector<std::uint32_t>> arrows_of_basis;  // quiver arrow positions
  std::uint32_t arrow_count = 0;
  /// Basis index of each quiver arrow in the built category.
  std::vector<BasisIndex> basis_of_arrow;
};

struct PathCategory {
  LinCatPtr category;
  PathMeta meta;
};

/// Free k-linear category on the paths of an acyclic quiver. Hom(x, y) has
/// the directed paths x⇝y as basis (the empty path at x is the identity);
/// composition is concatenation. Throws CyclicQuiver.
PathCategory path_category(const Quiver& q, const FieldSpec& field);

}  // namespace kcat
