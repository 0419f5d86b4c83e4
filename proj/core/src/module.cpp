#include "kcat/module.hpp"

#include <algorithm>

namespace kcat {

std::vector<Diagnostic> check_module(const Module& m) {
  std::vector<Diagnostic> diags;
  constexpr std::size_t kMaxDiags = 64;
  auto report = [&](const std::string& check, const std::string& witness) {
    if (diags.size() < kMaxDiags) diags.push_back({check, witness});
  };
  const LinCat& c = *m.category;
  Field k(c.field);
  if (m.dims.size() != c.object_count() || m.action.size() != c.basis_count()) {
    report("ModuleShape", "dims or action tables have wrong size");
    return diags;
  }
  for (BasisIndex b = 0; b < c.basis_count(); ++b) {
    if (m.action[b].rows() != m.dims[c.basis_target[b]] ||
        m.action[b].cols() != m.dims[c.basis_source[b]]) {
      report("ModuleShape", c.basis_ids[b]);
      return diags;
    }
  }
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    if (!c.identity_of[x]) {
      report("NoIdentity", c.objects[x]);
      continue;
    }
    if (!mat_is_identity(k, m.action[*c.identity_of[x]])) report("IdentityAction", c.objects[x]);
  }
  // action respects all composable pairs (absent comp entry = zero)
  std::vector<std::vector<BasisIndex>> by_source(c.object_count());
  for (BasisIndex b = 0; b < c.basis_count(); ++b) by_source[c.basis_source[b]].push_back(b);
  for (BasisIndex f = 0; f < c.basis_count(); ++f)
    for (BasisIndex g : by_source[c.basis_target[f]]) {
      Matrix prod = mat_mul(k, m.action[g], m.action[f]);
      Matrix want = Matrix::zero(k, m.dims[c.basis_target[g]], m.dims[c.basis_source[f]]);
      if (auto it = c.comp.find({g, f}); it != c.comp.end())
        for (const auto& [h, ch] : it->second)
          want = mat_add(k, want, mat_scale(k, ch, m.action[h]));
      if (prod != want) {
        report("ActionLaw", "(" + c.basis_ids[g] + "," + c.basis_ids[f] + ")");
        if (diags.size() >= kMaxDiags) return diags;
      }
    }
  return diags;
}

std::vector<Diagnostic> check_graded_module(const GradedModule& n, const Grading& g) {
  std::vector<Diagnostic> diags = check_module(n.module);
  const LinCat& c = *n.module.category;
  const Group& gr = g.group;
  Field k(c.field);
  if (g.category.get() != &c) {
    diags.push_back({"BlockShape", "grading and module live on different categories"});
    return diags;
  }
  if (n.blocks.size() != c.object_count()) {
    diags.push_back({"BlockShape", "one block table per object expected"});
    return diags;
  }
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    if (n.blocks[x].size() != gr.order()) {
      diags.push_back({"BlockShape", c.objects[x]});
      return diags;
    }
    std::vector<bool> seen(n.module.dims[x], false);
    bool bad = false;
    for (const auto& block : n.blocks[x])
      for (std::uint32_t i : block) {
        if (i >= n.module.dims[x] || seen[i]) bad = true;
        if (i < n.module.dims[x]) seen[i] = true;
      }
    if (bad || !std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      diags.push_back({"BlockPartition", c.objects[x]});
  }
  if (!diags.empty()) return diags;

  // degree-t morphisms map the degree-s block into the degree-ts block
  for (BasisIndex b = 0; b < c.basis_count(); ++b) {
    unsigned t = g.degree[b];
    ObjectIndex x = c.basis_source[b], y = c.basis_target[b];
    const Matrix& mat = n.module.action[b];
    for (unsigned s = 0; s < gr.order(); ++s) {
      unsigned ts = gr.times(t, s);
      std::vector<bool> allowed_row(n.module.dims[y], false);
      for (std::uint32_t r : n.blocks[y][ts]) allowed_row[r] = true;
      for (std::uint32_t col : n.blocks[x][s])
        for (std::size_t row = 0; row < mat.rows(); ++row)
          if (!allowed_row[row] && !k.is_zero(mat.at(row, col))) {
            diags.push_back({"BlockLaw", c.basis_ids[b] + " at degree " + gr.name(s)});
            row = mat.rows();
            break;
          }
    }
  }
  return diags;
}

Module restrict_module(const LinFunctor& f, const Module& n) {
  const LinCat& dom = *f.domain;
  Field k(dom.field);
  Module out;
  out.category = f.domain;
  out.dims.resize(dom.object_count());
  for (ObjectIndex x = 0; x < dom.object_count(); ++x) out.dims[x] = n.dims[f.object_map[x]];
  out.action.resize(dom.basis_count());
  for (BasisIndex b = 0; b < dom.basis_count(); ++b) {
    Morphism img = apply_functor_basis(f, b);
    Matrix mat = Matrix::zero(k, out.dims[dom.basis_target[b]], out.dims[dom.basis_source[b]]);
    for (const auto& [h, ch] : morphism_to_sparse(k, *f.codomain, img))
      mat = mat_add(k, mat, mat_scale(k, ch, n.action[h]));
    out.action[b] = std::move(mat);
  }
  return out;
}

Module twist_module(const GAction& a, unsigned s, const Module& m) {
  const LinCat& c = *a.category;
  Field k(c.field);
  unsigned sinv = a.group.inverse(s);
  Module out;
  out.category = m.category;
  out.dims.resize(c.object_count());
  for (ObjectIndex x = 0; x < c.object_count(); ++x)
    out.dims[x] = m.dims[a.object_perm[sinv][x]];
  out.action.resize(c.basis_count());
  for (BasisIndex b = 0; b < c.basis_count(); ++b) {
    ObjectIndex x = c.basis_source[b], y = c.basis_target[b];
    Morphism moved = a.act_basis(sinv, b);
    Matrix mat = Matrix::zero(k, out.dims[y], out.dims[x]);
    for (const auto& [h, ch] : morphism_to_sparse(k, c, moved))
      mat = mat_add(k, mat, mat_scale(k, ch, m.action[h]));
    out.action[b] = std::move(mat);
  }
  return out;
}

bool is_fixed(const GAction& a, const Module& m) {
  for (unsigned s = 0; s < a.group.order(); ++s)
    if (!(twist_module(a, s, m) == m)) return false;
  return true;
}

Module graded_to_cover(const GradedModule& n, const Grading& g, const SmashProduct& sm) {
  const LinCat& bcat = *g.category;
  const LinCat& sc = *sm.category;
  const Group& gr = g.group;
  Field k(bcat.field);
  Module out;
  out.category = sm.category;
  out.dims.resize(sc.object_count());
  for (ObjectIndex o = 0; o < sc.object_count(); ++o) {
    auto [x, s] = sm.object_labels[o];
    out.dims[o] = n.blocks[x][gr.inverse(s)].size();
  }
  out.action.resize(sc.basis_count());
  for (BasisIndex b = 0; b < sc.basis_count(); ++b) {
    const auto& lab = sm.basis_labels[b];
    ObjectIndex x = bcat.basis_source[lab.base], y = bcat.basis_target[lab.base];
    const auto& cols = n.blocks[x][gr.inverse(lab.source_label)];
    const auto& rows = n.blocks[y][gr.inverse(lab.target_label)];
    const Matrix& big = n.module.action[lab.base];
    Matrix mat = Matrix::zero(k, rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
        mat.at(r, cidx) = big.at(rows[r], cols[cidx]);
    out.action[b] = std::move(mat);
  }
  return out;
}

GradedModule cover_to_graded(const Module& m, const Grading& g, const SmashProduct& sm) {
  const LinCat& bcat = *g.category;
  const Group& gr = g.group;
  Field k(bcat.field);

  GradedModule out;
  out.module.category = g.category;
  out.module.dims.resize(bcat.object_count());
  out.blocks.resize(bcat.object_count());
  // degree-s block at x = fiber at (x, s⁻¹), contiguous in group order
  std::vector<std::vector<std::uint32_t>> offset(bcat.object_count(),
                                                 std::vector<std::uint32_t>(gr.order(), 0));
  for (ObjectIndex x = 0; x < bcat.object_count(); ++x) {
    std::uint32_t total = 0;
    out.blocks[x].resize(gr.order());
    for (unsigned s = 0; s < gr.order(); ++s) {
      ObjectIndex fiber = sm.object_index.at({x, gr.inverse(s)});
      offset[x][s] = total;
      for (std::size_t i = 0; i < m.dims[fiber]; ++i)
        out.blocks[x][s].push_back(total + static_cast<std::uint32_t>(i));
      total += static_cast<std::uint32_t>(m.dims[fiber]);
    }
    out.module.dims[x] = total;
  }
  out.module.action.resize(bcat.basis_count());
  for (BasisIndex b = 0; b < bcat.basis_count(); ++b) {
    unsigned t = g.degree[b];
    ObjectIndex x = bcat.basis_source[b], y = bcat.basis_target[b];
    Matrix mat = Matrix::zero(k, out.module.dims[y], out.module.dims[x]);
    for (unsigned s = 0; s < gr.order(); ++s) {
      unsigned ts = gr.times(t, s);
      // block (ts at y) x (s at x) is the action of the smash morphism over
      // b from (x, s⁻¹) to (y, (ts)⁻¹)
      BasisIndex cover_b = sm.basis_index.at({b, gr.inverse(s)});
      const Matrix& small = m.action[cover_b];
      for (std::size_t r = 0; r < small.rows(); ++r)
        for (std::size_t cc = 0; cc < small.cols(); ++cc)
          mat.at(offset[y][ts] + r, offset[x][s] + cc) = small.at(r, cc);
    }
    out.module.action[b] = std::move(mat);
  }
  return out;
}

CoveringSetup covering_setup(const GAction& a, const OrbitData& od) {
  CoveringSetup cs;
  cs.quotient = quotient_category(a, od);
  cs.grading = induced_grading(a, od, cs.quotient);
  cs.smash = smash_product(cs.grading);
  IsoCheck rec = reconstruct_cover(a, od);
  cs.reconstruction = std::move(rec.iso);
  cs.reconstruction_ok = rec.ok;
  return cs;
}

bool induced_sum_check(const CoveringSetup& cs, const Module& n) {
  const LinCat& q = *cs.quotient.category;
  const Group& gr = cs.grading.group;
  Field k(q.field);
  if (n.category.get() != cs.quotient.category.get()) return false;

  // transport N along C <- (C/G)#G and down the covering, then regrade
  Module over_cover = restrict_module(cs.reconstruction, restrict_module(cs.quotient.projection, n));
  GradedModule gn = cover_to_graded(over_cover, cs.grading, cs.smash);

  for (ObjectIndex x = 0; x < q.object_count(); ++x)
    for (unsigned s = 0; s < gr.order(); ++s)
      if (gn.blocks[x][s].size() != n.dims[x]) return false;

  // every degree-t morphism acts as N(b) from block s to block ts, zero
  // elsewhere: the |G|-fold direct sum of N up to the translation pairing
  for (BasisIndex b = 0; b < q.basis_count(); ++b) {
    unsigned t = cs.grading.degree[b];
    ObjectIndex x = q.basis_source[b], y = q.basis_target[b];
    const Matrix& big = gn.module.action[b];
    for (unsigned s = 0; s < gr.order(); ++s) {
      unsigned ts = gr.times(t, s);
      for (unsigned u = 0; u < gr.order(); ++u) {
        const auto& rows = gn.blocks[y][u];
        const auto& cols = gn.blocks[x][s];
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t cc = 0; cc < cols.size(); ++cc) {
            const Scalar& got = big.at(rows[r], cols[cc]);
            const Scalar& want = u == ts ? n.action[b].at(r, cc) : k.zero();
            if (got != want) return false;
          }
      }
    }
  }
  return true;
}

Module regular_module(const LinCatPtr& c) {
  const LinCat& cat = *c;
  Field k(cat.field);
  Module out;
  out.category = c;
  // fiber at z: all basis morphisms with target z, in global order
  std::vector<std::vector<BasisIndex>> fiber(cat.object_count());
  std::vector<std::uint32_t> pos(cat.basis_count(), 0);
  for (BasisIndex b = 0; b < cat.basis_count(); ++b) {
    pos[b] = static_cast<std::uint32_t>(fiber[cat.basis_target[b]].size());
    fiber[cat.basis_target[b]].push_back(b);
  }
  out.dims.resize(cat.object_count());
  for (ObjectIndex z = 0; z < cat.object_count(); ++z) out.dims[z] = fiber[z].size();
  out.action.resize(cat.basis_count());
  for (BasisIndex f = 0; f < cat.basis_count(); ++f) {
    ObjectIndex z = cat.basis_source[f], z2 = cat.basis_target[f];
    Matrix mat = Matrix::zero(k, out.dims[z2], out.dims[z]);
    for (std::size_t col = 0; col < fiber[z].size(); ++col) {
      BasisIndex g = fiber[z][col];
      if (auto it = cat.comp.find({f, g}); it != cat.comp.end())
        for (const auto& [h, ch] : it->second) mat.at(pos[h], col) = ch;
    }
    out.action[f] = std::move(mat);
  }
  return out;
}

GradedModule regular_graded_module(const Grading& g) {
  const LinCat& cat = *g.category;
  GradedModule out;
  out.module = regular_module(g.category);
  out.blocks.assign(cat.object_count(),
                    std::vector<std::vector<std::uint32_t>>(g.group.order()));
  std::vector<std::uint32_t> counter(cat.object_count(), 0);
  for (BasisIndex b = 0; b < cat.basis_count(); ++b) {
    ObjectIndex z = cat.basis_target[b];
    out.blocks[z][g.degree[b]].push_back(counter[z]++);
  }
  return out;
}

}  // namespace kcat
