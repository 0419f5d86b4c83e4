#include "kcat/functor.hpp"

#include <algorithm>

namespace kcat {

const Matrix& LinFunctor::hom_map(ObjectIndex x, ObjectIndex y) const {
  auto it = hom_maps.find({x, y});
  if (it == hom_maps.end())
    throw Error("BadShape", "functor has no hom map for (" + domain->objects[x] + "," +
                                domain->objects[y] + ")");
  return it->second;
}

LinFunctor identity_functor(const LinCatPtr& c) {
  Field k(c->field);
  LinFunctor f;
  f.domain = c;
  f.codomain = c;
  f.object_map.resize(c->object_count());
  for (ObjectIndex x = 0; x < c->object_count(); ++x) f.object_map[x] = x;
  for (const auto& [pair, lst] : c->homs)
    f.hom_maps[pair] = Matrix::identity(k, lst.size());
  return f;
}

Morphism apply_functor(const LinFunctor& f, const Morphism& m) {
  Field k(f.domain->field);
  ObjectIndex fx = f.object_map[m.source], fy = f.object_map[m.target];
  if (f.domain->dim_hom(m.source, m.target) == 0)
    return zero_morphism(*f.codomain, fx, fy);
  const Matrix& mat = f.hom_map(m.source, m.target);
  return Morphism{fx, fy, mat_apply(k, mat, m.coeffs)};
}

Morphism apply_functor_basis(const LinFunctor& f, BasisIndex b) {
  return apply_functor(f, basis_morphism(*f.domain, b));
}

LinFunctor compose_functors(const LinFunctor& g, const LinFunctor& f) {
  if (g.domain.get() != f.codomain.get())
    throw Error("BadShape", "functor composition domain/codomain mismatch");
  Field k(f.domain->field);
  LinFunctor out;
  out.domain = f.domain;
  out.codomain = g.codomain;
  out.object_map.resize(f.object_map.size());
  for (ObjectIndex x = 0; x < f.object_map.size(); ++x)
    out.object_map[x] = g.object_map[f.object_map[x]];
  for (const auto& [pair, mat] : f.hom_maps) {
    ObjectIndex fx = f.object_map[pair.first], fy = f.object_map[pair.second];
    if (f.codomain->dim_hom(fx, fy) == 0) {
      out.hom_maps[pair] =
          Matrix::zero(k, g.codomain->dim_hom(g.object_map[fx], g.object_map[fy]), mat.cols());
    } else {
      out.hom_maps[pair] = mat_mul(k, g.hom_map(fx, fy), mat);
    }
  }
  return out;
}

std::vector<Diagnostic> check_functor(const LinFunctor& f) {
  std::vector<Diagnostic> diags;
  constexpr std::size_t kMaxDiags = 64;
  auto report = [&](const std::string& check, const std::string& witness) {
    if (diags.size() < kMaxDiags) diags.push_back({check, witness});
  };
  const LinCat& dom = *f.domain;
  const LinCat& cod = *f.codomain;
  Field k(dom.field);
  if (dom.field != cod.field) {
    report("FunctorShape", "domain and codomain fields differ");
    return diags;
  }
  if (f.object_map.size() != dom.object_count()) {
    report("FunctorShape", "object map has wrong size");
    return diags;
  }
  for (ObjectIndex x : f.object_map)
    if (x >= cod.object_count()) {
      report("FunctorShape", "object map out of range");
      return diags;
    }

  // shape of hom matrices
  for (const auto& [pair, lst] : dom.homs) {
    auto it = f.hom_maps.find(pair);
    if (it == f.hom_maps.end()) {
      report("FunctorShape", "missing hom map for (" + dom.objects[pair.first] + "," +
                                 dom.objects[pair.second] + ")");
      continue;
    }
    std::size_t want_rows =
        cod.dim_hom(f.object_map[pair.first], f.object_map[pair.second]);
    if (it->second.rows() != want_rows || it->second.cols() != lst.size())
      report("FunctorShape", "hom map for (" + dom.objects[pair.first] + "," +
                                 dom.objects[pair.second] + ") has wrong shape");
  }
  if (!diags.empty()) return diags;

  // F(id_x) = id_{F(x)}
  for (ObjectIndex x = 0; x < dom.object_count(); ++x) {
    if (!dom.identity_of[x]) {
      report("NoIdentity", dom.objects[x]);
      continue;
    }
    Morphism img = apply_functor_basis(f, *dom.identity_of[x]);
    Morphism want = identity_morphism(cod, f.object_map[x]);
    if (!morphism_eq(k, img, want)) report("FunctorIdentity", dom.objects[x]);
  }

  // F(g∘f) = F(g)∘F(f) on composable basis pairs
  std::vector<std::vector<BasisIndex>> by_source(dom.object_count());
  for (BasisIndex b = 0; b < dom.basis_count(); ++b) by_source[dom.basis_source[b]].push_back(b);
  for (BasisIndex ff = 0; ff < dom.basis_count(); ++ff) {
    for (BasisIndex g : by_source[dom.basis_target[ff]]) {
      Morphism lhs = apply_functor(f, compose(dom, basis_morphism(dom, g), basis_morphism(dom, ff)));
      Morphism rhs = compose(cod, apply_functor_basis(f, g), apply_functor_basis(f, ff));
      if (!morphism_eq(k, lhs, rhs)) {
        report("FunctorComposition", "(" + dom.basis_ids[g] + "," + dom.basis_ids[ff] + ")");
        if (diags.size() >= kMaxDiags) return diags;
      }
    }
  }
  return diags;
}

bool is_isomorphism(const LinFunctor& f) {
  Field k(f.domain->field);
  // object bijection
  if (f.domain->object_count() != f.codomain->object_count()) return false;
  std::vector<bool> hit(f.codomain->object_count(), false);
  for (ObjectIndex x : f.object_map) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  // every hom matrix invertible
  for (const auto& [pair, lst] : f.domain->homs) {
    (void)lst;
    if (!mat_inverse(k, f.hom_map(pair.first, pair.second))) return false;
  }
  // hom dimensions must agree along the object bijection
  std::vector<ObjectIndex> preimage(f.codomain->object_count());
  for (ObjectIndex x = 0; x < f.object_map.size(); ++x) preimage[f.object_map[x]] = x;
  for (const auto& [pair, lst] : f.codomain->homs)
    if (f.domain->dim_hom(preimage[pair.first], preimage[pair.second]) != lst.size())
      return false;
  return true;
}

EquivalenceVerdict check_equivalence_with_witness(const LinFunctor& f,
                                                  const std::vector<WitnessPair>& witnesses) {
  Field k(f.domain->field);
  const LinCat& cod = *f.codomain;
  // full and faithful: every hom matrix bijective, and no codomain hom
  // space between image objects exceeds its preimage
  for (const auto& [pair, mat] : f.hom_maps) {
    if (!mat_inverse(k, mat))
      return {false, "hom map (" + f.domain->objects[pair.first] + "," +
                         f.domain->objects[pair.second] + ") is not bijective"};
  }
  for (ObjectIndex x = 0; x < f.domain->object_count(); ++x)
    for (ObjectIndex y = 0; y < f.domain->object_count(); ++y)
      if (f.domain->dim_hom(x, y) != cod.dim_hom(f.object_map[x], f.object_map[y]))
        return {false, "hom dimensions differ at (" + f.domain->objects[x] + "," +
                           f.domain->objects[y] + ")"};
  if (witnesses.size() != cod.object_count())
    return {false, "BadWitness: expected one witness per codomain object"};
  for (ObjectIndex z = 0; z < cod.object_count(); ++z) {
    const WitnessPair& w = witnesses[z];
    if (w.domain_object >= f.domain->object_count())
      return {false, "BadWitness: " + cod.objects[z]};
    ObjectIndex fx = f.object_map[w.domain_object];
    if (w.u.source != fx || w.u.target != z || w.v.source != z || w.v.target != fx)
      return {false, "BadWitness: " + cod.objects[z]};
    Morphism vu = compose(cod, w.v, w.u);
    Morphism uv = compose(cod, w.u, w.v);
    if (!morphism_eq(k, vu, identity_morphism(cod, fx)) ||
        !morphism_eq(k, uv, identity_morphism(cod, z)))
      return {false, "BadWitness: " + cod.objects[z]};
  }
  return {true, ""};
}

FullSubcategory full_subcategory(const LinCatPtr& c, const std::vector<std::string>& objects) {
  if (objects.empty()) throw Error("UnknownObject", "empty object subset");
  Field k(c->field);
  std::vector<ObjectIndex> keep;
  for (const auto& id : objects) keep.push_back(c->object_index(id));

  LinCatBuilder b(c->field);
  std::vector<bool> kept(c->object_count(), false);
  for (ObjectIndex x : keep) {
    if (kept[x]) throw Error("DuplicateObject", "object '" + c->objects[x] + "' listed twice");
    kept[x] = true;
    b.add_object(c->objects[x]);
  }
  std::vector<BasisIndex> kept_basis;
  for (BasisIndex bi = 0; bi < c->basis_count(); ++bi)
    if (kept[c->basis_source[bi]] && kept[c->basis_target[bi]]) {
      kept_basis.push_back(bi);
      b.add_basis(c->basis_ids[bi], c->objects[c->basis_source[bi]],
                  c->objects[c->basis_target[bi]]);
    }
  for (ObjectIndex x : keep)
    if (c->identity_of[x]) b.set_identity(c->objects[x], c->basis_ids[*c->identity_of[x]]);
  for (BasisIndex g : kept_basis)
    for (BasisIndex ff : kept_basis) {
      if (c->basis_source[g] != c->basis_target[ff]) continue;
      auto it = c->comp.find({g, ff});
      if (it == c->comp.end()) continue;
      std::vector<std::pair<std::string, Scalar>> terms;
      for (const auto& [h, ch] : it->second) terms.emplace_back(c->basis_ids[h], ch);
      b.set_comp(c->basis_ids[g], c->basis_ids[ff], terms);
    }

  FullSubcategory out;
  out.category = std::move(b).build_shared();
  out.inclusion.domain = out.category;
  out.inclusion.codomain = c;
  out.inclusion.object_map.resize(out.category->object_count());
  for (ObjectIndex x = 0; x < out.category->object_count(); ++x)
    out.inclusion.object_map[x] = c->object_index(out.category->objects[x]);
  for (const auto& [pair, lst] : out.category->homs) {
    ObjectIndex ax = out.inclusion.object_map[pair.first];
    ObjectIndex ay = out.inclusion.object_map[pair.second];
    Matrix m = Matrix::zero(k, c->dim_hom(ax, ay), lst.size());
    for (std::size_t j = 0; j < lst.size(); ++j) {
      BasisIndex ambient = c->basis_index(out.category->basis_ids[lst[j]]);
      m.at(c->basis_pos[ambient], j) = k.one();
    }
    out.inclusion.hom_maps[pair] = m;
  }
  return out;
}

}  // namespace kcat
