#pragma once

#include <random>

#include "kcat/action.hpp"
#include "kcat/algebra.hpp"
#include "kcat/grading.hpp"
#include "kcat/lincat.hpp"
#include "kcat/module.hpp"
#include "kcat/smash.hpp"

namespace kcat {

/// Deterministic seeded randomness. Modulo reduction keeps the draw
/// sequence identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : engine_() % n; }
  std::size_t in(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Kronecker category: objects x, y; two arrows a, b: x -> y.
PathCategory kronecker_category(const FieldSpec& field);
/// deg a = 1, deg b = t (the generator) for a cyclic group of order n.
Grading kronecker_grading(const PathCategory& kron, std::size_t n);

/// Crown over the Kronecker category: 2n vertices (x i / y i) with arrows
/// a<i>: x<i> -> y<i> and b<i>: x<i> -> y<i-1 mod n>, plus the rotation
/// action of Z/n.
struct CrownCover {
  PathCategory cover;
  GAction rotation;
};
CrownCover crown_cover(std::size_t n, const FieldSpec& field);

/// Scalar helpers for random data.
Scalar random_scalar(Rng& rng, const Field& k);          // may be zero
Scalar random_nonzero_scalar(Rng& rng, const Field& k);

Quiver random_acyclic_quiver(Rng& rng, std::size_t max_vertices, std::size_t max_arrows);

/// Uniform random arrow degrees, extended multiplicatively to all paths.
Grading random_path_grading(Rng& rng, const PathCategory& pc, const Group& group);

/// Groups of order <= 6: cyclics, the Klein four-group, S3.
Group klein_group();
Group symmetric_group_3();
Group random_small_group(Rng& rng);

/// Random module over a free category: random fiber dimensions and random
/// arrow matrices, extended along paths by multiplication.
Module random_path_module(Rng& rng, const LinCatPtr& category, const PathMeta& meta,
                          std::size_t max_dim);
/// Graded version: block sizes per degree, arrow matrices supported on the
/// blocks allowed by the arrow degree.
GradedModule random_graded_path_module(Rng& rng, const LinCatPtr& category, const PathMeta& meta,
                                       const Grading& g, std::size_t max_dim);

/// Random module over a category with no nontrivial compositions (every
/// comp entry involves an identity): any matrices work. Throws BadShape
/// otherwise.
Module random_sparse_module(Rng& rng, const LinCatPtr& category, std::size_t max_dim);

/// Dual numbers k[e]/(e^2) with basis {1, e}.
Algebra dual_numbers_algebra(const FieldSpec& field);
/// deg e = t in Z/n (any n >= 2 keeps e^2 = 0 homogeneous).
AlgebraGrading dual_numbers_grading(std::size_t n);

/// Group algebra kG with its natural G-grading.
Algebra group_algebra(const Group& g, const FieldSpec& field);
AlgebraGrading group_algebra_grading(const Group& g);

/// The one-dimensional algebra k.
Algebra field_algebra(const FieldSpec& field);

}  // namespace kcat
