#include "kcat/algebra.hpp"

#include "kcat/functor.hpp"
#include "kcat/smash.hpp"

namespace kcat {

unsigned Algebra::index(const std::string& id) const {
  for (unsigned i = 0; i < basis.size(); ++i)
    if (basis[i] == id) return i;
  throw Error("UnknownBasis", "no algebra basis element '" + id + "'");
}

Vec algebra_unit_vec(const Field& k, const Algebra& a) {
  Vec u = vec_zero(k, a.dim());
  for (const auto& [i, c] : a.unit) u[i] = k.add(u[i], c);
  return u;
}

Vec algebra_basis_vec(const Field& k, const Algebra& a, unsigned i) {
  return vec_unit(k, a.dim(), i);
}

Vec algebra_mul(const Field& k, const Algebra& a, const Vec& x, const Vec& y) {
  Vec out = vec_zero(k, a.dim());
  for (unsigned i = 0; i < a.dim(); ++i) {
    if (k.is_zero(x[i])) continue;
    for (unsigned j = 0; j < a.dim(); ++j) {
      if (k.is_zero(y[j])) continue;
      auto it = a.mul.find({i, j});
      if (it == a.mul.end()) continue;
      Scalar w = k.mul(x[i], y[j]);
      for (const auto& [h, ch] : it->second) out[h] = k.add(out[h], k.mul(w, ch));
    }
  }
  return out;
}

std::vector<Diagnostic> validate_algebra(const Algebra& a) {
  std::vector<Diagnostic> diags;
  constexpr std::size_t kMaxDiags = 64;
  auto report = [&](const std::string& check, const std::string& witness) {
    if (diags.size() < kMaxDiags) diags.push_back({check, witness});
  };
  Field k(a.field);
  for (const auto& [key, terms] : a.mul) {
    if (key.first >= a.dim() || key.second >= a.dim()) {
      report("AlgebraShape", "product key out of range");
      return diags;
    }
    for (const auto& [h, c] : terms) {
      if (h >= a.dim()) report("AlgebraShape", "product term out of range");
      if (k.is_zero(c)) report("AlgebraShape", "zero coefficient stored");
    }
  }
  Vec unit = algebra_unit_vec(k, a);
  for (unsigned i = 0; i < a.dim(); ++i) {
    Vec e = algebra_basis_vec(k, a, i);
    if (algebra_mul(k, a, unit, e) != e) report("UnitLaw", "(1," + a.basis[i] + ")");
    if (algebra_mul(k, a, e, unit) != e) report("UnitLaw", "(" + a.basis[i] + ",1)");
  }
  for (unsigned i = 0; i < a.dim(); ++i)
    for (unsigned j = 0; j < a.dim(); ++j) {
      Vec ij = algebra_mul(k, a, algebra_basis_vec(k, a, i), algebra_basis_vec(k, a, j));
      for (unsigned l = 0; l < a.dim(); ++l) {
        Vec el = algebra_basis_vec(k, a, l);
        Vec lhs = algebra_mul(k, a, ij, el);
        Vec jl = algebra_mul(k, a, algebra_basis_vec(k, a, j), el);
        Vec rhs = algebra_mul(k, a, algebra_basis_vec(k, a, i), jl);
        if (lhs != rhs) {
          report("Associativity",
                 "(" + a.basis[i] + "," + a.basis[j] + "," + a.basis[l] + ")");
          if (diags.size() >= kMaxDiags) return diags;
        }
      }
    }
  return diags;
}

std::vector<Diagnostic> check_algebra_map(const AlgebraMap& m, bool require_unital) {
  std::vector<Diagnostic> diags;
  const Algebra& dom = *m.domain;
  const Algebra& cod = *m.codomain;
  Field k(dom.field);
  if (dom.field != cod.field || m.matrix.rows() != cod.dim() || m.matrix.cols() != dom.dim()) {
    diags.push_back({"MapShape", "matrix shape or field mismatch"});
    return diags;
  }
  for (unsigned i = 0; i < dom.dim(); ++i)
    for (unsigned j = 0; j < dom.dim(); ++j) {
      Vec prod = algebra_mul(k, dom, algebra_basis_vec(k, dom, i), algebra_basis_vec(k, dom, j));
      Vec lhs = mat_apply(k, m.matrix, prod);
      Vec rhs = algebra_mul(k, cod, mat_apply(k, m.matrix, algebra_basis_vec(k, dom, i)),
                            mat_apply(k, m.matrix, algebra_basis_vec(k, dom, j)));
      if (lhs != rhs) {
        diags.push_back({"Multiplicative", "(" + dom.basis[i] + "," + dom.basis[j] + ")"});
        if (diags.size() >= 64) return diags;
      }
    }
  if (require_unital &&
      mat_apply(k, m.matrix, algebra_unit_vec(k, dom)) != algebra_unit_vec(k, cod))
    diags.push_back({"Unital", "unit"});
  return diags;
}

bool is_algebra_isomorphism(const AlgebraMap& m, bool require_unital) {
  Field k(m.domain->field);
  return check_algebra_map(m, require_unital).empty() &&
         mat_inverse(k, m.matrix).has_value();
}

Algebra algebra_of_category(const LinCat& c) {
  Algebra a;
  a.field = c.field;
  a.basis = c.basis_ids;
  for (const auto& [key, terms] : c.comp) a.mul[key] = terms;
  Field k(c.field);
  for (ObjectIndex x = 0; x < c.object_count(); ++x)
    a.unit.emplace_back(c.identity_basis(x), k.one());
  return a;
}

std::vector<Diagnostic> check_algebra_action(const Algebra& a, const AlgebraAction& act) {
  std::vector<Diagnostic> diags;
  Field k(a.field);
  const Group& g = act.group;
  if (act.automorphism.size() != g.order()) {
    diags.push_back({"ActionShape", "one matrix per group element expected"});
    return diags;
  }
  for (unsigned s = 0; s < g.order(); ++s)
    if (act.automorphism[s].rows() != a.dim() || act.automorphism[s].cols() != a.dim()) {
      diags.push_back({"ActionShape", "matrix of " + g.name(s) + " has wrong shape"});
      return diags;
    }
  if (!mat_is_identity(k, act.automorphism[g.identity]))
    diags.push_back({"IdentityAction", "identity element"});
  for (unsigned t = 0; t < g.order(); ++t)
    for (unsigned s = 0; s < g.order(); ++s)
      if (act.automorphism[g.times(t, s)] !=
          mat_mul(k, act.automorphism[t], act.automorphism[s]))
        diags.push_back({"Compatibility", "(" + g.name(t) + "," + g.name(s) + ")"});
  Vec unit = algebra_unit_vec(k, a);
  for (unsigned s = 0; s < g.order(); ++s) {
    const Matrix& m = act.automorphism[s];
    if (mat_apply(k, m, unit) != unit)
      diags.push_back({"NotAutomorphism", g.name(s) + " does not fix the unit"});
    if (!mat_inverse(k, m))
      diags.push_back({"NotAutomorphism", g.name(s) + " is not invertible"});
    for (unsigned i = 0; i < a.dim(); ++i)
      for (unsigned j = 0; j < a.dim(); ++j) {
        Vec prod = algebra_mul(k, a, algebra_basis_vec(k, a, i), algebra_basis_vec(k, a, j));
        Vec lhs = mat_apply(k, m, prod);
        Vec rhs = algebra_mul(k, a, mat_apply(k, m, algebra_basis_vec(k, a, i)),
                              mat_apply(k, m, algebra_basis_vec(k, a, j)));
        if (lhs != rhs) {
          diags.push_back(
              {"NotAutomorphism", g.name(s) + " on (" + a.basis[i] + "," + a.basis[j] + ")"});
          if (diags.size() >= 64) return diags;
        }
      }
  }
  return diags;
}

AlgebraAction induced_algebra_action(const GAction& a, const Algebra& ac) {
  const LinCat& c = *a.category;
  Field k(c.field);
  AlgebraAction out;
  out.group = a.group;
  for (unsigned s = 0; s < a.group.order(); ++s) {
    Matrix m = Matrix::zero(k, ac.dim(), ac.dim());
    for (BasisIndex b = 0; b < c.basis_count(); ++b) {
      Morphism img = a.act_basis(s, b);
      for (const auto& [h, ch] : morphism_to_sparse(k, c, img)) m.at(h, b) = ch;
    }
    out.automorphism.push_back(std::move(m));
  }
  return out;
}

namespace {

std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

SkewGroupAlgebra skew_group_algebra(const Algebra& a, const AlgebraAction& act) {
  if (auto diags = check_algebra_action(a, act); !diags.empty())
    throw Error("NotAutomorphism", diags.front().check + " at " + diags.front().witness);
  Field k(a.field);
  const Group& g = act.group;
  SkewGroupAlgebra out;
  out.algebra.field = a.field;
  for (unsigned i = 0; i < a.dim(); ++i)
    for (unsigned s = 0; s < g.order(); ++s) {
      out.index[{i, s}] = static_cast<unsigned>(out.labels.size());
      out.labels.emplace_back(i, s);
      out.algebra.basis.push_back(pair_id(a.basis[i], g.name(s)));
    }
  // (b,t)(a,s) = (b·t(a), ts)
  for (unsigned left = 0; left < out.labels.size(); ++left) {
    auto [bi, t] = out.labels[left];
    for (unsigned right = 0; right < out.labels.size(); ++right) {
      auto [ai, s] = out.labels[right];
      Vec ta = mat_apply(k, act.automorphism[t], algebra_basis_vec(k, a, ai));
      Vec prod = algebra_mul(k, a, algebra_basis_vec(k, a, bi), ta);
      unsigned ts = g.times(t, s);
      std::vector<std::pair<unsigned, Scalar>> terms;
      for (unsigned h = 0; h < a.dim(); ++h)
        if (!k.is_zero(prod[h])) terms.emplace_back(out.index.at({h, ts}), prod[h]);
      if (!terms.empty()) out.algebra.mul[{left, right}] = std::move(terms);
    }
  }
  for (const auto& [i, c] : a.unit) out.algebra.unit.emplace_back(out.index.at({i, g.identity}), c);
  return out;
}

std::vector<Diagnostic> check_algebra_grading(const Algebra& a, const AlgebraGrading& g) {
  std::vector<Diagnostic> diags;
  if (g.degree.size() != a.dim()) {
    diags.push_back({"GradingShape", "degree map does not cover the basis"});
    return diags;
  }
  for (unsigned d : g.degree)
    if (d >= g.group.order()) {
      diags.push_back({"GradingShape", "degree out of range"});
      return diags;
    }
  for (const auto& [i, c] : a.unit) {
    (void)c;
    if (!g.group.is_identity(g.degree[i]))
      diags.push_back({"IdentityDegree", a.basis[i]});
  }
  for (const auto& [key, terms] : a.mul) {
    unsigned want = g.group.times(g.degree[key.first], g.degree[key.second]);
    for (const auto& [h, c] : terms) {
      (void)c;
      if (g.degree[h] != want) {
        diags.push_back(
            {"DegreeLaw", "(" + a.basis[key.first] + "," + a.basis[key.second] + ")"});
        break;
      }
    }
  }
  return diags;
}

SmashAlgebra smash_algebra(const Algebra& a, const AlgebraGrading& g) {
  if (auto diags = check_algebra_grading(a, g); !diags.empty())
    throw Error("InhomogeneousBasis", diags.front().check + " at " + diags.front().witness);
  Field k(a.field);
  const Group& gr = g.group;
  SmashAlgebra out;
  out.algebra.field = a.field;
  for (unsigned i = 0; i < a.dim(); ++i)
    for (unsigned u = 0; u < gr.order(); ++u) {
      out.index[{i, u}] = static_cast<unsigned>(out.labels.size());
      out.labels.emplace_back(i, u);
      out.algebra.basis.push_back(pair_id(a.basis[i], "d_" + gr.name(u)));
    }
  // (a δ_u)(b δ_v) = (a·b) δ_v when deg(b)⁻¹·u = v, else 0
  for (unsigned left = 0; left < out.labels.size(); ++left) {
    auto [ai, u] = out.labels[left];
    for (unsigned right = 0; right < out.labels.size(); ++right) {
      auto [bi, v] = out.labels[right];
      if (gr.times(gr.inverse(g.degree[bi]), u) != v) continue;
      auto it = a.mul.find({ai, bi});
      if (it == a.mul.end()) continue;
      std::vector<std::pair<unsigned, Scalar>> terms;
      for (const auto& [h, ch] : it->second) terms.emplace_back(out.index.at({h, v}), ch);
      out.algebra.mul[{left, right}] = std::move(terms);
    }
  }
  for (unsigned u = 0; u < gr.order(); ++u)
    for (const auto& [i, c] : a.unit) out.algebra.unit.emplace_back(out.index.at({i, u}), c);
  return out;
}

std::vector<Diagnostic> verify_twist_identities(const Algebra& a, const AlgebraGrading& g,
                                                const SmashAlgebra& sm) {
  std::vector<Diagnostic> diags;
  Field k(a.field);
  const Group& gr = g.group;
  const Algebra& s = sm.algebra;

  auto delta = [&](unsigned u) {  // 1_A ⊗ δ_u
    Vec v = vec_zero(k, s.dim());
    for (const auto& [i, c] : a.unit) v[sm.index.at({i, u})] = k.add(v[sm.index.at({i, u})], c);
    return v;
  };
  auto emb = [&](unsigned i) {  // a_i ⊗ 1_{k^G}
    Vec v = vec_zero(k, s.dim());
    for (unsigned u = 0; u < gr.order(); ++u) v[sm.index.at({i, u})] = k.one();
    return v;
  };
  auto basis_at = [&](unsigned i, unsigned u) {
    return vec_unit(k, s.dim(), sm.index.at({i, u}));
  };

  // (δ_u δ_t)f = δ_u(δ_t f), zero unless u = t, value f δ_{deg(f)⁻¹t}
  for (unsigned u = 0; u < gr.order(); ++u)
    for (unsigned t = 0; t < gr.order(); ++t)
      for (unsigned i = 0; i < a.dim(); ++i) {
        Vec lhs = algebra_mul(k, s, algebra_mul(k, s, delta(u), delta(t)), emb(i));
        Vec rhs = algebra_mul(k, s, delta(u), algebra_mul(k, s, delta(t), emb(i)));
        Vec want = u == t ? algebra_mul(k, s, emb(i), delta(gr.times(gr.inverse(g.degree[i]), t)))
                          : vec_zero(k, s.dim());
        if (lhs != rhs || lhs != want) {
          diags.push_back({"TwistDiracs", "(" + gr.name(u) + "," + gr.name(t) + "," +
                                              a.basis[i] + ")"});
          if (diags.size() >= 64) return diags;
        }
      }

  // δ_u(g f) = (g f) δ_{(deg g · deg f)⁻¹ u} = (δ_u g) f
  for (unsigned u = 0; u < gr.order(); ++u)
    for (unsigned gi = 0; gi < a.dim(); ++gi)
      for (unsigned fi = 0; fi < a.dim(); ++fi) {
        Vec gf = algebra_mul(k, s, emb(gi), emb(fi));
        Vec lhs = algebra_mul(k, s, delta(u), gf);
        unsigned shift = gr.inverse(gr.times(g.degree[gi], g.degree[fi]));
        Vec mid = algebra_mul(k, s, gf, delta(gr.times(shift, u)));
        Vec rhs = algebra_mul(k, s, algebra_mul(k, s, delta(u), emb(gi)), emb(fi));
        if (lhs != mid || lhs != rhs) {
          diags.push_back({"TwistProducts", "(" + gr.name(u) + "," + a.basis[gi] + "," +
                                                a.basis[fi] + ")"});
          if (diags.size() >= 64) return diags;
        }
      }

  // 1_{k^G} f = Σ_u δ_u f = Σ_u f δ_{deg(f)⁻¹u} = f 1_{k^G}
  for (unsigned i = 0; i < a.dim(); ++i) {
    Vec one_kg = vec_zero(k, s.dim());
    for (unsigned u = 0; u < gr.order(); ++u) vec_axpy(k, k.one(), delta(u), one_kg);
    Vec lhs = algebra_mul(k, s, one_kg, emb(i));
    Vec sum = vec_zero(k, s.dim());
    for (unsigned u = 0; u < gr.order(); ++u)
      vec_axpy(k, k.one(), basis_at(i, gr.times(gr.inverse(g.degree[i]), u)), sum);
    Vec rhs = algebra_mul(k, s, emb(i), one_kg);
    if (lhs != sum || rhs != sum) diags.push_back({"TwistUnit", a.basis[i]});
  }
  return diags;
}

CoherenceResult coherence_skew(const GAction& a) {
  const LinCat& c = *a.category;
  Field k(c.field);
  CoherenceResult out;

  auto ac = std::make_shared<const Algebra>(algebra_of_category(c));
  AlgebraAction act = induced_algebra_action(a, *ac);
  SkewGroupAlgebra acg = skew_group_algebra(*ac, act);

  SkewCategory sk = skew_category(a);
  auto skc = std::make_shared<const Algebra>(algebra_of_category(*sk.category));

  // ψ: component-s element over f at any object -> f ⊗ s
  Matrix m = Matrix::zero(k, acg.algebra.dim(), skc->dim());
  for (BasisIndex b = 0; b < sk.category->basis_count(); ++b) {
    auto [s, base] = sk.labels[b];
    m.at(acg.index.at({base, s}), b) = k.one();
  }
  out.map.domain = skc;
  out.map.codomain = std::make_shared<const Algebra>(std::move(acg.algebra));
  out.map.matrix = std::move(m);
  out.diagnostics = check_algebra_map(out.map, true);
  out.ok = out.diagnostics.empty() && mat_inverse(k, out.map.matrix).has_value();
  return out;
}

namespace {

/// a(C_A#G) assembled directly from graded algebra data: basis (f, s) is
/// the elementary matrix with entry f at position (s·deg(f)⁻¹, s).
struct SmashCategoryAlgebra {
  Algebra algebra;
  std::vector<std::pair<unsigned, unsigned>> labels;  // (basis of A, source label)
  std::map<std::pair<unsigned, unsigned>, unsigned> index;
};

SmashCategoryAlgebra smash_category_algebra(const Algebra& a, const AlgebraGrading& g) {
  if (auto diags = check_algebra_grading(a, g); !diags.empty())
    throw Error("InhomogeneousBasis", diags.front().check + " at " + diags.front().witness);
  Field k(a.field);
  const Group& gr = g.group;
  SmashCategoryAlgebra out;
  out.algebra.field = a.field;
  for (unsigned i = 0; i < a.dim(); ++i)
    for (unsigned s = 0; s < gr.order(); ++s) {
      out.index[{i, s}] = static_cast<unsigned>(out.labels.size());
      out.labels.emplace_back(i, s);
      out.algebra.basis.push_back(pair_id(a.basis[i], gr.name(s)));
    }
  // (g at (v,u)) · (f at (t,s)) is zero unless u = t, else (g·f) at (v,s)
  for (unsigned left = 0; left < out.labels.size(); ++left) {
    auto [gi, u_src] = out.labels[left];
    for (unsigned right = 0; right < out.labels.size(); ++right) {
      auto [fi, s_src] = out.labels[right];
      unsigned t_tgt = gr.times(s_src, gr.inverse(g.degree[fi]));
      if (u_src != t_tgt) continue;
      auto it = a.mul.find({gi, fi});
      if (it == a.mul.end()) continue;
      std::vector<std::pair<unsigned, Scalar>> terms;
      for (const auto& [h, ch] : it->second) terms.emplace_back(out.index.at({h, s_src}), ch);
      out.algebra.mul[{left, right}] = std::move(terms);
    }
  }
  for (unsigned s = 0; s < gr.order(); ++s)
    for (const auto& [i, c] : a.unit) out.algebra.unit.emplace_back(out.index.at({i, s}), c);
  return out;
}

}  // namespace

CoherenceResult coherence_smash(const Algebra& a, const AlgebraGrading& g) {
  Field k(a.field);
  const Group& gr = g.group;
  CoherenceResult out;

  SmashCategoryAlgebra sca = smash_category_algebra(a, g);
  SmashAlgebra sm = smash_algebra(a, g);

  // φ( f placed with source label s ) = f · δ_{s⁻¹}
  Matrix m = Matrix::zero(k, sm.algebra.dim(), sca.algebra.dim());
  for (unsigned col = 0; col < sca.labels.size(); ++col) {
    auto [i, s] = sca.labels[col];
    m.at(sm.index.at({i, gr.inverse(s)}), col) = k.one();
  }
  out.map.domain = std::make_shared<const Algebra>(std::move(sca.algebra));
  out.map.codomain = std::make_shared<const Algebra>(std::move(sm.algebra));
  out.map.matrix = std::move(m);
  out.diagnostics = check_algebra_map(out.map, true);
  out.ok = out.diagnostics.empty() && mat_inverse(k, out.map.matrix).has_value();
  return out;
}

MatrixAlgebra matrix_algebra(const Algebra& a, std::size_t n) {
  if (n == 0) throw Error("BadShape", "matrix algebra of size 0");
  Field k(a.field);
  MatrixAlgebra out;
  out.algebra.field = a.field;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned b = 0; b < a.dim(); ++b) {
        out.index[{i, j, b}] = static_cast<unsigned>(out.labels.size());
        out.labels.emplace_back(i, j, b);
        out.algebra.basis.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                    a.basis[b] + ")");
      }
  for (unsigned left = 0; left < out.labels.size(); ++left) {
    auto [i, j, bi] = out.labels[left];
    for (unsigned right = 0; right < out.labels.size(); ++right) {
      auto [i2, j2, ci] = out.labels[right];
      if (j != i2) continue;
      auto it = a.mul.find({bi, ci});
      if (it == a.mul.end()) continue;
      std::vector<std::pair<unsigned, Scalar>> terms;
      for (const auto& [h, ch] : it->second) terms.emplace_back(out.index.at({i, j2, h}), ch);
      out.algebra.mul[{left, right}] = std::move(terms);
    }
  }
  for (unsigned i = 0; i < n; ++i)
    for (const auto& [b, c] : a.unit) out.algebra.unit.emplace_back(out.index.at({i, i, b}), c);
  return out;
}

LinCatPtr single_object_category(const Algebra& a, const std::string& object_id) {
  Field k(a.field);
  if (a.unit.size() != 1 || !k.is_one(a.unit.front().second))
    throw Error("NonBasisUnit", "the unit of the algebra is not a designated basis element");
  LinCatBuilder b(a.field);
  b.add_object(object_id);
  for (const auto& id : a.basis) b.add_basis(id, object_id, object_id);
  b.set_identity(object_id, a.basis[a.unit.front().first]);
  for (const auto& [key, terms] : a.mul) {
    std::vector<std::pair<std::string, Scalar>> named;
    for (const auto& [h, c] : terms) named.emplace_back(a.basis[h], c);
    b.set_comp(a.basis[key.first], a.basis[key.second], named);
  }
  return std::move(b).build_shared();
}

Grading single_object_grading(const LinCatPtr& c, const Algebra& a, const AlgebraGrading& g) {
  Grading out;
  out.category = c;
  out.group = g.group;
  out.degree.resize(c->basis_count());
  for (unsigned i = 0; i < a.dim(); ++i) out.degree[c->basis_index(a.basis[i])] = g.degree[i];
  return out;
}

MatrixDualityCheck duality_matrix_check(const Algebra& a, const AlgebraGrading& g) {
  Field k(a.field);
  const Group& gr = g.group;
  MatrixDualityCheck out;

  LinCatPtr ca = single_object_category(a);
  Grading cg = single_object_grading(ca, a, g);
  SmashProduct sm = smash_product(cg);
  SkewCategory sk = skew_category(sm.translation);
  auto skew_alg = std::make_shared<const Algebra>(algebra_of_category(*sk.category));
  out.skew_algebra_dim = skew_alg->dim();

  MatrixAlgebra mat = matrix_algebra(a, gr.order());

  // χ: (component w over the smash element f placed (x,s) -> (y,t)) maps to
  // f·e_{t, label(w⁻¹·s-object)}; rows and columns are indexed by G through
  // the smash object labels.
  Matrix chi = Matrix::zero(k, mat.algebra.dim(), skew_alg->dim());
  for (BasisIndex b = 0; b < sk.category->basis_count(); ++b) {
    auto [w, smash_basis] = sk.labels[b];
    const auto& lab = sm.basis_labels[smash_basis];
    unsigned row = lab.target_label;
    unsigned col = gr.times(gr.inverse(w), lab.source_label);
    unsigned base = lab.base;  // basis of A (single object category shares ids)
    chi.at(mat.index.at({row, col, base}), b) = k.one();
  }
  AlgebraMap chi_map{skew_alg, std::make_shared<const Algebra>(mat.algebra), std::move(chi)};
  out.matrix_iso_ok = is_algebra_isomorphism(chi_map, true);

  // skeleton endomorphism algebra has A's structure constants
  FreenessCheck fc = is_free(sm.translation);
  SkeletonEquivalence se = skeleton_equivalence(sm.translation, fc.orbits);
  auto end_alg = std::make_shared<const Algebra>(algebra_of_category(*se.skeleton.category));
  if (end_alg->dim() == a.dim()) {
    Matrix sigma = Matrix::zero(k, a.dim(), end_alg->dim());
    for (BasisIndex b = 0; b < se.skeleton.category->basis_count(); ++b) {
      BasisIndex ambient = sk.category->basis_index(se.skeleton.category->basis_ids[b]);
      auto [w, smash_basis] = sk.labels[ambient];
      (void)w;
      sigma.at(sm.basis_labels[smash_basis].base, b) = k.one();
    }
    AlgebraMap sigma_map{end_alg, std::make_shared<const Algebra>(a), std::move(sigma)};
    out.skeleton_end_is_a = is_algebra_isomorphism(sigma_map, true);
  }

  out.ok = out.matrix_iso_ok && out.skeleton_end_is_a &&
           out.skew_algebra_dim == gr.order() * gr.order() * a.dim();
  return out;
}

}  // namespace kcat
