#include "kcat/action.hpp"

#include <algorithm>

namespace kcat {

const Matrix& GAction::hom_map(unsigned s, ObjectIndex x, ObjectIndex y) const {
  auto it = hom_maps.find({s, x, y});
  if (it == hom_maps.end())
    throw Error("BadShape", "action has no hom map for (" + group.name(s) + "," +
                                category->objects[x] + "," + category->objects[y] + ")");
  return it->second;
}

Morphism GAction::act(unsigned s, const Morphism& m) const {
  Field k(category->field);
  ObjectIndex sx = object_perm[s][m.source], sy = object_perm[s][m.target];
  if (category->dim_hom(m.source, m.target) == 0) return zero_morphism(*category, sx, sy);
  return Morphism{sx, sy, mat_apply(k, hom_map(s, m.source, m.target), m.coeffs)};
}

Morphism GAction::act_basis(unsigned s, BasisIndex b) const {
  return act(s, basis_morphism(*category, b));
}

std::vector<Diagnostic> check_action(const GAction& a) {
  std::vector<Diagnostic> diags;
  constexpr std::size_t kMaxDiags = 64;
  auto report = [&](const std::string& check, const std::string& witness) {
    if (diags.size() < kMaxDiags) diags.push_back({check, witness});
  };
  const LinCat& c = *a.category;
  const Group& g = a.group;
  Field k(c.field);

  if (a.object_perm.size() != g.order()) {
    report("ActionShape", "object permutation per group element expected");
    return diags;
  }
  for (unsigned s = 0; s < g.order(); ++s) {
    if (a.object_perm[s].size() != c.object_count()) {
      report("ActionShape", "object map of " + g.name(s) + " has wrong size");
      return diags;
    }
    std::vector<bool> hit(c.object_count(), false);
    for (ObjectIndex x : a.object_perm[s]) {
      if (x >= c.object_count() || hit[x]) {
        report("ActionShape", "object map of " + g.name(s) + " is not a permutation");
        return diags;
      }
      hit[x] = true;
    }
  }
  for (unsigned s = 0; s < g.order(); ++s)
    for (const auto& [pair, lst] : c.homs) {
      auto [x, y] = pair;
      ObjectIndex sx = a.object_perm[s][x], sy = a.object_perm[s][y];
      auto it = a.hom_maps.find({s, x, y});
      if (it == a.hom_maps.end()) {
        report("ActionShape", "missing hom map (" + g.name(s) + "," + c.objects[x] + "," +
                                  c.objects[y] + ")");
        continue;
      }
      if (it->second.rows() != c.dim_hom(sx, sy) || it->second.cols() != lst.size())
        report("ActionShape", "hom map (" + g.name(s) + "," + c.objects[x] + "," +
                                  c.objects[y] + ") has wrong shape");
    }
  if (!diags.empty()) return diags;

  // 1f = f
  for (ObjectIndex x = 0; x < c.object_count(); ++x)
    if (a.object_perm[g.identity][x] != x) {
      report("IdentityAction", c.objects[x]);
      return diags;
    }
  for (const auto& [pair, lst] : c.homs) {
    (void)lst;
    if (!mat_is_identity(k, a.hom_map(g.identity, pair.first, pair.second)))
      report("IdentityAction",
             "(" + c.objects[pair.first] + "," + c.objects[pair.second] + ")");
  }

  // (ts)f = t(sf)
  for (unsigned t = 0; t < g.order(); ++t)
    for (unsigned s = 0; s < g.order(); ++s) {
      unsigned ts = g.times(t, s);
      for (ObjectIndex x = 0; x < c.object_count(); ++x)
        if (a.object_perm[ts][x] != a.object_perm[t][a.object_perm[s][x]]) {
          report("Compatibility",
                 "(" + g.name(t) + "," + g.name(s) + ") on object " + c.objects[x]);
          return diags;
        }
      for (const auto& [pair, lst] : c.homs) {
        (void)lst;
        auto [x, y] = pair;
        Matrix lhs = a.hom_map(ts, x, y);
        Matrix rhs = mat_mul(k, a.hom_map(t, a.object_perm[s][x], a.object_perm[s][y]),
                             a.hom_map(s, x, y));
        if (lhs != rhs)
          report("Compatibility", "(" + g.name(t) + "," + g.name(s) + ") on (" +
                                      c.objects[x] + "," + c.objects[y] + ")");
      }
    }

  // each s is a functor
  std::vector<std::vector<BasisIndex>> by_source(c.object_count());
  for (BasisIndex b = 0; b < c.basis_count(); ++b) by_source[c.basis_source[b]].push_back(b);
  for (unsigned s = 0; s < g.order(); ++s) {
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      if (!c.identity_of[x]) continue;
      Morphism img = a.act_basis(s, *c.identity_of[x]);
      if (!morphism_eq(k, img, identity_morphism(c, a.object_perm[s][x])))
        report("ActionFunctor", g.name(s) + " does not preserve id of " + c.objects[x]);
    }
    for (BasisIndex f = 0; f < c.basis_count(); ++f)
      for (BasisIndex gg : by_source[c.basis_target[f]]) {
        Morphism lhs = a.act(s, compose(c, basis_morphism(c, gg), basis_morphism(c, f)));
        Morphism rhs = compose(c, a.act_basis(s, gg), a.act_basis(s, f));
        if (!morphism_eq(k, lhs, rhs)) {
          report("ActionFunctor", g.name(s) + " on (" + c.basis_ids[gg] + "," +
                                      c.basis_ids[f] + ")");
          if (diags.size() >= kMaxDiags) return diags;
        }
      }
  }
  return diags;
}

namespace {

OrbitData orbits_of(const GAction& a) {
  const LinCat& c = *a.category;
  OrbitData od;
  od.orbit_of.assign(c.object_count(), 0);
  std::vector<bool> seen(c.object_count(), false);
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    if (seen[x]) continue;
    std::vector<ObjectIndex> orbit;
    for (unsigned s = 0; s < a.group.order(); ++s) {
      ObjectIndex sx = a.object_perm[s][x];
      if (!seen[sx]) {
        seen[sx] = true;
        orbit.push_back(sx);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    unsigned idx = static_cast<unsigned>(od.orbits.size());
    for (ObjectIndex o : orbit) od.orbit_of[o] = idx;
    od.orbits.push_back(std::move(orbit));
  }
  return od;
}

void fill_reps_and_translations(const GAction& a, OrbitData& od,
                                const std::vector<ObjectIndex>& reps) {
  const LinCat& c = *a.category;
  od.representative = reps;
  od.translate_to_rep.assign(c.object_count(), a.group.identity);
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    ObjectIndex rep = reps[od.orbit_of[x]];
    bool found = false;
    for (unsigned s = 0; s < a.group.order(); ++s)
      if (a.object_perm[s][x] == rep) {
        od.translate_to_rep[x] = s;
        found = true;
        break;
      }
    if (!found)
      throw Error("BadRepresentatives",
                  "object '" + c.objects[x] + "' cannot be translated to its representative");
  }
}

}  // namespace

FreenessCheck is_free(const GAction& a) {
  FreenessCheck out;
  const LinCat& c = *a.category;
  out.free = true;
  for (unsigned s = 0; s < a.group.order() && out.free; ++s) {
    if (a.group.is_identity(s)) continue;
    for (ObjectIndex x = 0; x < c.object_count(); ++x)
      if (a.object_perm[s][x] == x) {
        out.free = false;
        out.witness = "(" + a.group.name(s) + "," + c.objects[x] + ")";
        break;
      }
  }
  out.orbits = orbits_of(a);
  out.orbits.free = out.free;
  // lexicographically least object id per orbit
  std::vector<ObjectIndex> reps;
  for (const auto& orbit : out.orbits.orbits) {
    ObjectIndex best = orbit[0];
    for (ObjectIndex x : orbit)
      if (c.objects[x] < c.objects[best]) best = x;
    reps.push_back(best);
  }
  fill_reps_and_translations(a, out.orbits, reps);
  return out;
}

OrbitData orbit_data_with_reps(const GAction& a, const std::vector<std::string>& reps) {
  FreenessCheck fc = is_free(a);
  OrbitData od = fc.orbits;
  std::vector<ObjectIndex> chosen = od.representative;
  std::vector<bool> overridden(od.orbits.size(), false);
  for (const auto& id : reps) {
    ObjectIndex x = a.category->object_index(id);
    unsigned orbit = od.orbit_of[x];
    if (overridden[orbit])
      throw Error("BadRepresentatives", "two representatives chosen in the orbit of '" + id + "'");
    overridden[orbit] = true;
    chosen[orbit] = x;
  }
  fill_reps_and_translations(a, od, chosen);
  return od;
}

namespace {

std::string skew_basis_id(const GAction& a, unsigned s, BasisIndex b) {
  return "(" + a.group.name(s) + "," + a.category->basis_ids[b] + ")";
}

}  // namespace

SkewCategory skew_category(const GAction& a) {
  const LinCat& c = *a.category;
  const Group& g = a.group;
  Field k(c.field);
  SkewCategory out;

  LinCatBuilder b(c.field);
  for (const auto& id : c.objects) b.add_object(id);
  // Hom(x,y) = ⊕_s Hom(s·x, y); basis enumerated s-major, then base order.
  std::vector<std::pair<unsigned, BasisIndex>> labels;
  for (ObjectIndex x = 0; x < c.object_count(); ++x)
    for (unsigned s = 0; s < g.order(); ++s) {
      ObjectIndex sx = a.object_perm[s][x];
      for (const auto& [pair, lst] : c.homs) {
        if (pair.first != sx) continue;
        for (BasisIndex base : lst) {
          b.add_basis(skew_basis_id(a, s, base), c.objects[x],
                      c.objects[c.basis_target[base]]);
          labels.emplace_back(s, base);
        }
      }
    }
  for (ObjectIndex x = 0; x < c.object_count(); ++x)
    b.set_identity(c.objects[x], skew_basis_id(a, g.identity, c.identity_basis(x)));

  // (t,g)∘(s,f) = (ts, g∘(t·f))
  for (std::size_t j = 0; j < labels.size(); ++j) {
    auto [s, f] = labels[j];
    ObjectIndex y = c.basis_target[f];
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [t, gg] = labels[i];
      if (a.object_perm[g.inverse(t)][c.basis_source[gg]] != y) continue;  // source of (t,g) is t⁻¹·src
      unsigned ts = g.times(t, s);
      Morphism tf = a.act_basis(t, f);
      Morphism comp_in_c = compose(c, basis_morphism(c, gg), tf);
      std::vector<std::pair<std::string, Scalar>> terms;
      for (const auto& [h, ch] : morphism_to_sparse(k, c, comp_in_c))
        terms.emplace_back(skew_basis_id(a, ts, h), ch);
      if (!terms.empty())
        b.set_comp(skew_basis_id(a, t, gg), skew_basis_id(a, s, f), terms);
    }
  }

  out.category = std::move(b).build_shared();
  out.labels.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    BasisIndex bi = out.category->basis_index(skew_basis_id(a, labels[i].first, labels[i].second));
    out.labels[bi] = labels[i];
    out.index[labels[i]] = bi;
  }
  return out;
}

QuotientCategory quotient_category(const GAction& a, const OrbitData& od) {
  if (!od.free)
    throw Error("NotFree", "quotient requires a free action");
  const LinCat& c = *a.category;
  const Group& g = a.group;
  Field k(c.field);

  auto q_object_id = [&](unsigned orbit) {
    return "[" + c.objects[od.representative[orbit]] + "]";
  };
  auto q_basis_id = [&](BasisIndex base) { return "[" + c.basis_ids[base] + "]"; };

  LinCatBuilder b(c.field);
  for (unsigned o = 0; o < od.orbits.size(); ++o) b.add_object(q_object_id(o));

  // basis of Hom(α,β): (s, base) with base: s·x_α -> x_β, s-major order
  std::vector<std::pair<unsigned, BasisIndex>> labels;
  std::vector<std::string> ids;
  std::map<BasisIndex, BasisIndex> index_of_base;  // positions assigned after build
  std::vector<bool> is_rep(c.object_count(), false);
  for (ObjectIndex r : od.representative) is_rep[r] = true;
  for (unsigned alpha = 0; alpha < od.orbits.size(); ++alpha) {
    ObjectIndex xa = od.representative[alpha];
    for (unsigned s = 0; s < g.order(); ++s) {
      ObjectIndex sxa = a.object_perm[s][xa];
      for (const auto& [pair, lst] : c.homs) {
        if (pair.first != sxa || !is_rep[pair.second]) continue;
        for (BasisIndex base : lst) {
          b.add_basis(q_basis_id(base), q_object_id(alpha),
                      q_object_id(od.orbit_of[pair.second]));
          labels.emplace_back(s, base);
          ids.push_back(q_basis_id(base));
        }
      }
    }
  }
  for (unsigned o = 0; o < od.orbits.size(); ++o)
    b.set_identity(q_object_id(o), q_basis_id(c.identity_basis(od.representative[o])));

  // (t,g)∘(s,f) = (ts, g∘(t·f)), landing on representative targets
  for (std::size_t j = 0; j < labels.size(); ++j) {
    auto [s, f] = labels[j];
    ObjectIndex y = c.basis_target[f];  // a representative
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [t, gg] = labels[i];
      // (t,gg) has source orbit object x_β with t·x_β = source(gg)
      if (a.object_perm[t][y] != c.basis_source[gg]) continue;
      unsigned ts = g.times(t, s);
      Morphism tf = a.act_basis(t, f);
      Morphism comp_in_c = compose(c, basis_morphism(c, gg), tf);
      std::vector<std::pair<std::string, Scalar>> terms;
      for (const auto& [h, ch] : morphism_to_sparse(k, c, comp_in_c))
        terms.emplace_back(q_basis_id(h), ch);
      if (!terms.empty()) b.set_comp(ids[i], ids[j], terms);
    }
  }

  QuotientCategory out;
  out.category = std::move(b).build_shared();
  out.labels.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    BasisIndex bi = out.category->basis_index(ids[i]);
    out.labels[bi] = labels[i];
    out.index_of_base[labels[i].second] = bi;
  }

  // projection functor: f -> class of (translate-target-to-rep)·f
  LinFunctor proj;
  proj.domain = a.category;
  proj.codomain = out.category;
  proj.object_map.resize(c.object_count());
  for (ObjectIndex x = 0; x < c.object_count(); ++x) proj.object_map[x] = od.orbit_of[x];
  for (const auto& [pair, lst] : c.homs) {
    auto [x, y] = pair;
    unsigned s = od.translate_to_rep[y];
    std::size_t rows = out.category->dim_hom(od.orbit_of[x], od.orbit_of[y]);
    Matrix m = Matrix::zero(k, rows, lst.size());
    for (std::size_t col = 0; col < lst.size(); ++col) {
      Morphism sf = a.act_basis(s, lst[col]);
      for (const auto& [h, ch] : morphism_to_sparse(k, c, sf)) {
        BasisIndex qb = out.index_of_base.at(h);
        m.at(out.category->basis_pos[qb], col) = k.add(m.at(out.category->basis_pos[qb], col), ch);
      }
    }
    proj.hom_maps[pair] = std::move(m);
  }
  out.projection = std::move(proj);
  return out;
}

std::pair<Morphism, Morphism> orbit_iso_witness(const SkewCategory& sk, const GAction& a,
                                                ObjectIndex x, ObjectIndex y) {
  const LinCat& c = *a.category;
  std::optional<unsigned> found;
  for (unsigned s = 0; s < a.group.order(); ++s)
    if (a.object_perm[s][x] == y) {
      found = s;
      break;
    }
  if (!found)
    throw Error("NotSameOrbit",
                "'" + c.objects[x] + "' and '" + c.objects[y] + "' lie in different orbits");
  unsigned s = *found;
  BasisIndex u = sk.index.at({s, c.identity_basis(y)});
  BasisIndex v = sk.index.at({a.group.inverse(s), c.identity_basis(x)});
  return {basis_morphism(*sk.category, u), basis_morphism(*sk.category, v)};
}

SkeletonEquivalence skeleton_equivalence(const GAction& a, const OrbitData& od) {
  const LinCat& c = *a.category;
  const Group& g = a.group;
  Field k(c.field);

  SkeletonEquivalence out;
  out.skew = skew_category(a);
  const LinCat& sk = *out.skew.category;

  std::vector<std::string> rep_ids;
  for (ObjectIndex r : od.representative) rep_ids.push_back(c.objects[r]);
  out.skeleton = full_subcategory(out.skew.category, rep_ids);
  const LinCat& skel = *out.skeleton.category;

  // skew basis index -> skeleton basis index (shared ids)
  std::map<BasisIndex, BasisIndex> to_skel_basis;
  for (BasisIndex i = 0; i < skel.basis_count(); ++i)
    to_skel_basis[sk.basis_index(skel.basis_ids[i])] = i;

  // F: C[G] -> underline C[G], transporting along canonical witnesses:
  // (s,b) at x -> (r_y·s·r_x⁻¹, r_y·b) where r_x translates x to its rep.
  LinFunctor F;
  F.domain = out.skew.category;
  F.codomain = out.skeleton.category;
  F.object_map.resize(sk.object_count());
  for (ObjectIndex x = 0; x < sk.object_count(); ++x) F.object_map[x] = od.orbit_of[x];
  for (const auto& [pair, lst] : sk.homs) {
    auto [x, y] = pair;
    unsigned rx = od.translate_to_rep[x], ry = od.translate_to_rep[y];
    std::size_t rows = skel.dim_hom(od.orbit_of[x], od.orbit_of[y]);
    Matrix m = Matrix::zero(k, rows, lst.size());
    for (std::size_t col = 0; col < lst.size(); ++col) {
      auto [s, base] = out.skew.labels[lst[col]];
      unsigned label = g.times(ry, g.times(s, g.inverse(rx)));
      Morphism ryb = a.act_basis(ry, base);
      for (const auto& [h, ch] : morphism_to_sparse(k, c, ryb)) {
        BasisIndex skel_b = to_skel_basis.at(out.skew.index.at({label, h}));
        m.at(skel.basis_pos[skel_b], col) = k.add(m.at(skel.basis_pos[skel_b], col), ch);
      }
    }
    F.hom_maps[pair] = std::move(m);
  }
  out.to_skeleton = std::move(F);

  // identity witnesses for F (every skeleton object is hit on the nose)
  for (ObjectIndex z = 0; z < skel.object_count(); ++z) {
    WitnessPair w;
    w.domain_object = sk.object_index(skel.objects[z]);
    w.u = identity_morphism(skel, z);
    w.v = identity_morphism(skel, z);
    out.to_skeleton_witnesses.push_back(std::move(w));
  }
  // orbit witnesses for the inclusion (essential surjectivity in C[G])
  for (ObjectIndex y = 0; y < sk.object_count(); ++y) {
    WitnessPair w;
    w.domain_object = od.orbit_of[y];
    auto [u, v] = orbit_iso_witness(out.skew, a, od.representative[od.orbit_of[y]], y);
    w.u = std::move(u);
    w.v = std::move(v);
    out.inclusion_witnesses.push_back(std::move(w));
  }

  if (od.free) {
    out.quotient = quotient_category(a, od);
    const LinCat& q = *out.quotient->category;
    LinFunctor ident;
    ident.domain = out.quotient->category;
    ident.codomain = out.skeleton.category;
    ident.object_map.resize(q.object_count());
    for (ObjectIndex o = 0; o < q.object_count(); ++o) ident.object_map[o] = o;
    for (const auto& [pair, lst] : q.homs) {
      std::size_t rows = skel.dim_hom(pair.first, pair.second);
      Matrix m = Matrix::zero(k, rows, lst.size());
      for (std::size_t col = 0; col < lst.size(); ++col) {
        auto [s, base] = out.quotient->labels[lst[col]];
        BasisIndex skel_b = to_skel_basis.at(out.skew.index.at({s, base}));
        m.at(skel.basis_pos[skel_b], col) = k.one();
      }
      ident.hom_maps[pair] = std::move(m);
    }
    out.quotient_identification = std::move(ident);
  }
  return out;
}

Grading induced_grading(const GAction& a, const OrbitData& od, const QuotientCategory& q) {
  if (!od.free) throw Error("NotFree", "induced grading requires a free action");
  Grading g;
  g.category = q.category;
  g.group = a.group;
  g.degree.resize(q.category->basis_count());
  for (BasisIndex b = 0; b < q.category->basis_count(); ++b) g.degree[b] = q.labels[b].first;
  return g;
}

LinFunctor quotient_change_of_reps(const GAction& a, const OrbitData& od1,
                                   const QuotientCategory& q1, const OrbitData& od2,
                                   const QuotientCategory& q2) {
  const LinCat& c = *a.category;
  const Group& g = a.group;
  Field k(c.field);
  LinFunctor f;
  f.domain = q1.category;
  f.codomain = q2.category;
  f.object_map.resize(q1.category->object_count());
  for (ObjectIndex o = 0; o < q1.category->object_count(); ++o) f.object_map[o] = o;
  for (const auto& [pair, lst] : q1.category->homs) {
    auto [alpha, beta] = pair;
    // u translates the old representative to the new one
    unsigned u_beta = od2.translate_to_rep[od1.representative[beta]];
    std::size_t rows = q2.category->dim_hom(alpha, beta);
    Matrix m = Matrix::zero(k, rows, lst.size());
    for (std::size_t col = 0; col < lst.size(); ++col) {
      auto [s, base] = q1.labels[lst[col]];
      (void)s;
      Morphism moved = a.act_basis(u_beta, base);
      for (const auto& [h, ch] : morphism_to_sparse(k, c, moved)) {
        BasisIndex qb = q2.index_of_base.at(h);
        m.at(q2.category->basis_pos[qb], col) = k.add(m.at(q2.category->basis_pos[qb], col), ch);
      }
    }
    f.hom_maps[pair] = std::move(m);
  }
  return f;
}

}  // namespace kcat
