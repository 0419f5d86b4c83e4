#include "kcat/smash.hpp"

namespace kcat {

namespace {

std::string smash_object_id(const LinCat& base, const Group& g, ObjectIndex x, unsigned s) {
  return "(" + base.objects[x] + "," + g.name(s) + ")";
}

std::string smash_basis_id(const LinCat& base, const Group& g, BasisIndex b, unsigned s,
                           unsigned t) {
  return "(" + base.basis_ids[b] + "," + g.name(s) + "," + g.name(t) + ")";
}

}  // namespace

SmashProduct smash_product(const Grading& gr, const PathMeta* base_meta) {
  if (auto diags = check_grading(gr); !diags.empty())
    throw Error("InvalidGrading", diags.front().check + " at " + diags.front().witness);
  const LinCat& bcat = *gr.category;
  const Group& g = gr.group;
  Field k(bcat.field);

  SmashProduct out;
  LinCatBuilder b(bcat.field);
  for (ObjectIndex x = 0; x < bcat.object_count(); ++x)
    for (unsigned s = 0; s < g.order(); ++s)
      b.add_object(smash_object_id(bcat, g, x, s));

  // basis: each base element of degree d, placed from (x,s) to (y, s·d⁻¹)
  struct Placed {
    BasisIndex base;
    unsigned s, t;
  };
  std::vector<Placed> placed;
  for (BasisIndex base = 0; base < bcat.basis_count(); ++base) {
    unsigned d = gr.degree[base];
    for (unsigned s = 0; s < g.order(); ++s) {
      unsigned t = g.times(s, g.inverse(d));
      b.add_basis(smash_basis_id(bcat, g, base, s, t),
                  smash_object_id(bcat, g, bcat.basis_source[base], s),
                  smash_object_id(bcat, g, bcat.basis_target[base], t));
      placed.push_back({base, s, t});
    }
  }
  for (ObjectIndex x = 0; x < bcat.object_count(); ++x)
    for (unsigned s = 0; s < g.order(); ++s)
      b.set_identity(smash_object_id(bcat, g, x, s),
                     smash_basis_id(bcat, g, bcat.identity_basis(x), s, s));

  // composition inherited from the base category
  for (const Placed& p1 : placed) {
    for (const Placed& p2 : placed) {
      if (bcat.basis_source[p2.base] != bcat.basis_target[p1.base] || p2.s != p1.t) continue;
      auto it = bcat.comp.find({p2.base, p1.base});
      if (it == bcat.comp.end()) continue;
      std::vector<std::pair<std::string, Scalar>> terms;
      for (const auto& [h, ch] : it->second)
        terms.emplace_back(smash_basis_id(bcat, g, h, p1.s, p2.t), ch);
      b.set_comp(smash_basis_id(bcat, g, p2.base, p2.s, p2.t),
                 smash_basis_id(bcat, g, p1.base, p1.s, p1.t), terms);
    }
  }

  out.category = std::move(b).build_shared();
  const LinCat& sc = *out.category;

  out.object_labels.resize(sc.object_count());
  for (ObjectIndex x = 0; x < bcat.object_count(); ++x)
    for (unsigned s = 0; s < g.order(); ++s) {
      ObjectIndex idx = sc.object_index(smash_object_id(bcat, g, x, s));
      out.object_labels[idx] = {x, s};
      out.object_index[{x, s}] = idx;
    }
  out.basis_labels.resize(sc.basis_count());
  for (const Placed& p : placed) {
    BasisIndex idx = sc.basis_index(smash_basis_id(bcat, g, p.base, p.s, p.t));
    out.basis_labels[idx] = {p.base, p.s, p.t};
    out.basis_index[{p.base, p.s}] = idx;
  }

  // translation action u·(x,s) = (x,us); morphisms are unchanged, and the
  // hom maps are identities because translated hom spaces share the same
  // base enumeration.
  GAction act;
  act.group = g;
  act.category = out.category;
  act.object_perm.assign(g.order(), std::vector<ObjectIndex>(sc.object_count()));
  for (unsigned u = 0; u < g.order(); ++u)
    for (ObjectIndex o = 0; o < sc.object_count(); ++o) {
      auto [x, s] = out.object_labels[o];
      act.object_perm[u][o] = out.object_index.at({x, g.times(u, s)});
    }
  for (unsigned u = 0; u < g.order(); ++u)
    for (const auto& [pair, lst] : sc.homs)
      act.hom_maps[{u, pair.first, pair.second}] = Matrix::identity(k, lst.size());
  out.translation = std::move(act);

  if (base_meta) {
    PathMeta meta;
    // smash arrows: lifted base arrows, numbered in smash basis order
    std::map<std::pair<std::uint32_t, unsigned>, std::uint32_t> arrow_pos;  // (base arrow, s)
    for (BasisIndex i = 0; i < sc.basis_count(); ++i) {
      const auto& lab = out.basis_labels[i];
      const auto& dec = base_meta->arrows_of_basis[lab.base];
      if (dec.size() != 1) continue;
      arrow_pos[{dec[0], lab.source_label}] = meta.arrow_count;
      meta.basis_of_arrow.push_back(i);
      ++meta.arrow_count;
    }
    meta.arrows_of_basis.resize(sc.basis_count());
    for (BasisIndex i = 0; i < sc.basis_count(); ++i) {
      const auto& lab = out.basis_labels[i];
      unsigned s = lab.source_label;
      for (std::uint32_t a : base_meta->arrows_of_basis[lab.base]) {
        meta.arrows_of_basis[i].push_back(arrow_pos.at({a, s}));
        BasisIndex arrow_basis = base_meta->basis_of_arrow[a];
        s = g.times(s, g.inverse(gr.degree[arrow_basis]));
      }
    }
    out.path_meta = std::move(meta);
  }
  return out;
}

IsoCheck verify_smash_quotient(const Grading& gr) {
  const LinCat& bcat = *gr.category;
  Field k(bcat.field);
  SmashProduct sm = smash_product(gr);
  FreenessCheck fc = is_free(sm.translation);

  IsoCheck out;
  if (!fc.free) {
    out.diagnostics.push_back({"NotFree", fc.witness});
    return out;
  }
  QuotientCategory q = quotient_category(sm.translation, fc.orbits);
  const LinCat& qc = *q.category;

  LinFunctor iso;
  iso.domain = q.category;
  iso.codomain = gr.category;
  iso.object_map.resize(qc.object_count());
  for (ObjectIndex o = 0; o < qc.object_count(); ++o)
    iso.object_map[o] = sm.object_labels[fc.orbits.representative[o]].base;
  for (const auto& [pair, lst] : qc.homs) {
    ObjectIndex bx = iso.object_map[pair.first], by = iso.object_map[pair.second];
    Matrix m = Matrix::zero(k, bcat.dim_hom(bx, by), lst.size());
    for (std::size_t col = 0; col < lst.size(); ++col) {
      BasisIndex smash_base = q.labels[lst[col]].second;
      BasisIndex base = sm.basis_labels[smash_base].base;
      m.at(bcat.basis_pos[base], col) = k.one();
    }
    iso.hom_maps[pair] = std::move(m);
  }

  out.diagnostics = check_functor(iso);
  out.ok = out.diagnostics.empty() && is_isomorphism(iso);
  out.iso = std::move(iso);
  return out;
}

IsoCheck reconstruct_cover(const GAction& a, const OrbitData& od) {
  if (!od.free) throw Error("NotFree", "reconstruction requires a free action");
  const LinCat& c = *a.category;
  Field k(c.field);

  QuotientCategory q = quotient_category(a, od);
  Grading gr = induced_grading(a, od, q);
  SmashProduct sm = smash_product(gr);
  const LinCat& sc = *sm.category;

  LinFunctor iso;
  iso.domain = sm.category;
  iso.codomain = a.category;
  iso.object_map.resize(sc.object_count());
  for (ObjectIndex o = 0; o < sc.object_count(); ++o) {
    auto [alpha, s] = sm.object_labels[o];
    iso.object_map[o] = a.object_perm[s][od.representative[alpha]];
  }
  for (const auto& [pair, lst] : sc.homs) {
    ObjectIndex cx = iso.object_map[pair.first], cy = iso.object_map[pair.second];
    Matrix m = Matrix::zero(k, c.dim_hom(cx, cy), lst.size());
    for (std::size_t col = 0; col < lst.size(); ++col) {
      const auto& lab = sm.basis_labels[lst[col]];
      BasisIndex base = q.labels[lab.base].second;  // base morphism in C
      Morphism moved = a.act_basis(lab.target_label, base);
      for (const auto& [h, ch] : morphism_to_sparse(k, c, moved))
        m.at(c.basis_pos[h], col) = k.add(m.at(c.basis_pos[h], col), ch);
    }
    iso.hom_maps[pair] = std::move(m);
  }

  IsoCheck out;
  out.diagnostics = check_functor(iso);
  out.ok = out.diagnostics.empty() && is_isomorphism(iso);
  out.iso = std::move(iso);
  return out;
}

DualityCheck verify_smash_skew_duality(const Grading& gr) {
  DualityCheck out;
  SmashProduct sm = smash_product(gr);
  out.action_valid = check_action(sm.translation).empty();
  FreenessCheck fc = is_free(sm.translation);
  out.translation_free = fc.free;
  if (!out.action_valid || !out.translation_free) return out;

  SkeletonEquivalence sk = skeleton_equivalence(sm.translation, fc.orbits);
  out.skeleton_functor_valid = check_functor(sk.to_skeleton).empty();
  out.skeleton_equivalence_ok =
      static_cast<bool>(check_equivalence_with_witness(sk.to_skeleton, sk.to_skeleton_witnesses));
  out.inclusion_equivalence_ok = static_cast<bool>(
      check_equivalence_with_witness(sk.skeleton.inclusion, sk.inclusion_witnesses));
  out.quotient_identification_ok = sk.quotient_identification &&
                                   check_functor(*sk.quotient_identification).empty() &&
                                   is_isomorphism(*sk.quotient_identification);
  out.smash_quotient_ok = verify_smash_quotient(gr).ok;
  out.ok = out.skeleton_functor_valid && out.skeleton_equivalence_ok &&
           out.inclusion_equivalence_ok && out.quotient_identification_ok &&
           out.smash_quotient_ok;
  return out;
}

}  // namespace kcat
