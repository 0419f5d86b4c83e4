#include "kcat/grading.hpp"

namespace kcat {

std::vector<Diagnostic> check_grading(const Grading& g) {
  std::vector<Diagnostic> diags;
  const LinCat& c = *g.category;
  if (g.degree.size() != c.basis_count()) {
    diags.push_back({"GradingShape", "degree map does not cover the basis"});
    return diags;
  }
  for (unsigned d : g.degree)
    if (d >= g.group.order()) {
      diags.push_back({"GradingShape", "degree out of range"});
      return diags;
    }
  for (ObjectIndex x = 0; x < c.object_count(); ++x)
    if (c.identity_of[x] && !g.group.is_identity(g.degree[*c.identity_of[x]]))
      diags.push_back({"IdentityDegree", c.objects[x]});
  for (const auto& [key, terms] : c.comp) {
    auto [gg, ff] = key;
    unsigned want = g.group.times(g.degree[gg], g.degree[ff]);
    for (const auto& [h, ch] : terms) {
      (void)ch;
      if (g.degree[h] != want) {
        diags.push_back({"DegreeLaw", "(" + c.basis_ids[gg] + "," + c.basis_ids[ff] + ")"});
        break;
      }
    }
  }
  return diags;
}

Grading trivial_grading(const LinCatPtr& c, Group group) {
  Grading g;
  g.category = c;
  g.degree.assign(c->basis_count(), group.identity);
  g.group = std::move(group);
  return g;
}

}  // namespace kcat
