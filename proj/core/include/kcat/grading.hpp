#pragma once

#include "kcat/group.hpp"
#include "kcat/lincat.hpp"

namespace kcat {

/// G-grading of a linear category: a group element per basis morphism.
/// Identities have degree 1 and composition is degree-multiplicative.
struct Grading {
  LinCatPtr category;
  Group group;
  std::vector<unsigned> degree;  // per global basis index

  unsigned degree_of(BasisIndex b) const { return degree[b]; }
};

/// Empty iff every identity has degree 1 and every comp entry satisfies
/// deg(h) = deg(g)·deg(f) on its nonzero terms.
std::vector<Diagnostic> check_grading(const Grading& g);

/// All degrees 1.
Grading trivial_grading(const LinCatPtr& c, Group group);

}  // namespace kcat
