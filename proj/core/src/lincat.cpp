#include "kcat/lincat.hpp"

#include <algorithm>
#include <deque>

namespace kcat {

ObjectIndex LinCat::object_index(const std::string& id) const {
  for (ObjectIndex i = 0; i < objects.size(); ++i)
    if (objects[i] == id) return i;
  throw Error("UnknownObject", "no object '" + id + "'");
}

BasisIndex LinCat::basis_index(const std::string& id) const {
  for (BasisIndex i = 0; i < basis_ids.size(); ++i)
    if (basis_ids[i] == id) return i;
  throw Error("UnknownBasis", "no basis morphism '" + id + "'");
}

const std::vector<BasisIndex>& LinCat::hom(ObjectIndex x, ObjectIndex y) const {
  static const std::vector<BasisIndex> empty;
  auto it = homs.find({x, y});
  return it == homs.end() ? empty : it->second;
}

bool LinCat::is_identity_basis(BasisIndex b) const {
  ObjectIndex x = basis_source[b];
  return basis_source[b] == basis_target[b] && identity_of[x] && *identity_of[x] == b;
}

BasisIndex LinCat::identity_basis(ObjectIndex x) const {
  if (!identity_of[x]) throw Error("NoIdentity", "object '" + objects[x] + "' has no identity");
  return *identity_of[x];
}

LinCatBuilder::LinCatBuilder(FieldSpec field) { cat_.field = field; }

void LinCatBuilder::add_object(const std::string& id) {
  if (object_index_.count(id)) throw Error("DuplicateObject", "object '" + id + "'");
  if (id.empty() || id.find('|') != std::string::npos)
    throw Error("BadId", "object id '" + id + "' is empty or contains '|'");
  object_index_[id] = static_cast<ObjectIndex>(cat_.objects.size());
  cat_.objects.push_back(id);
  cat_.identity_of.push_back(std::nullopt);
}

void LinCatBuilder::add_basis(const std::string& id, const std::string& source,
                              const std::string& target) {
  if (basis_index_.count(id)) throw Error("DuplicateBasis", "basis morphism '" + id + "'");
  if (id.empty() || id.find('|') != std::string::npos)
    throw Error("BadId", "basis id '" + id + "' is empty or contains '|'");
  auto s = object_index_.find(source);
  auto t = object_index_.find(target);
  if (s == object_index_.end()) throw Error("UnknownObject", "no object '" + source + "'");
  if (t == object_index_.end()) throw Error("UnknownObject", "no object '" + target + "'");
  BasisIndex b = static_cast<BasisIndex>(cat_.basis_ids.size());
  basis_index_[id] = b;
  cat_.basis_ids.push_back(id);
  cat_.basis_source.push_back(s->second);
  cat_.basis_target.push_back(t->second);
  auto& lst = cat_.homs[{s->second, t->second}];
  cat_.basis_pos.push_back(static_cast<std::uint32_t>(lst.size()));
  lst.push_back(b);
}

void LinCatBuilder::set_identity(const std::string& object, const std::string& basis) {
  auto x = object_index_.find(object);
  if (x == object_index_.end()) throw Error("UnknownObject", "no object '" + object + "'");
  auto b = basis_index_.find(basis);
  if (b == basis_index_.end()) throw Error("UnknownBasis", "no basis morphism '" + basis + "'");
  if (cat_.basis_source[b->second] != x->second || cat_.basis_target[b->second] != x->second)
    throw Error("BadId", "identity of '" + object + "' must be an endomorphism basis element");
  cat_.identity_of[x->second] = b->second;
}

void LinCatBuilder::set_comp(const std::string& g, const std::string& f,
                             const std::vector<std::pair<std::string, Scalar>>& terms) {
  Field k(cat_.field);
  auto gi = basis_index_.find(g);
  auto fi = basis_index_.find(f);
  if (gi == basis_index_.end()) throw Error("UnknownBasis", "no basis morphism '" + g + "'");
  if (fi == basis_index_.end()) throw Error("UnknownBasis", "no basis morphism '" + f + "'");
  if (cat_.basis_source[gi->second] != cat_.basis_target[fi->second])
    throw Error("NotComposable", "comp entry (" + g + "," + f + ") is not composable");
  std::map<BasisIndex, Scalar> acc;
  for (const auto& [hid, c] : terms) {
    auto hi = basis_index_.find(hid);
    if (hi == basis_index_.end()) throw Error("UnknownBasis", "no basis morphism '" + hid + "'");
    if (cat_.basis_source[hi->second] != cat_.basis_source[fi->second] ||
        cat_.basis_target[hi->second] != cat_.basis_target[gi->second])
      throw Error("BadComp", "term '" + hid + "' of comp (" + g + "," + f +
                                 ") is not parallel to the composite");
    auto [it, fresh] = acc.emplace(hi->second, c);
    if (!fresh) it->second = k.add(it->second, c);
  }
  SparseVec v;
  for (auto& [h, c] : acc)
    if (!k.is_zero(c)) v.emplace_back(h, c);
  if (v.empty())
    cat_.comp.erase({gi->second, fi->second});
  else
    cat_.comp[{gi->second, fi->second}] = std::move(v);
}

LinCat LinCatBuilder::build() && { return std::move(cat_); }

LinCatPtr LinCatBuilder::build_shared() && {
  return std::make_shared<const LinCat>(std::move(cat_));
}

Morphism zero_morphism(const LinCat& c, ObjectIndex x, ObjectIndex y) {
  Field k(c.field);
  return Morphism{x, y, vec_zero(k, c.dim_hom(x, y))};
}

Morphism basis_morphism(const LinCat& c, BasisIndex b) {
  Field k(c.field);
  ObjectIndex x = c.basis_source[b], y = c.basis_target[b];
  Morphism m = zero_morphism(c, x, y);
  m.coeffs[c.basis_pos[b]] = k.one();
  return m;
}

Morphism identity_morphism(const LinCat& c, ObjectIndex x) {
  return basis_morphism(c, c.identity_basis(x));
}

Morphism morphism_add(const Field& k, const LinCat& c, const Morphism& a, const Morphism& b) {
  if (a.source != b.source || a.target != b.target)
    throw Error("BadShape", "sum of non-parallel morphisms");
  Morphism out = a;
  vec_axpy(k, k.one(), b.coeffs, out.coeffs);
  (void)c;
  return out;
}

Morphism morphism_scale(const Field& k, const Scalar& s, const Morphism& a) {
  Morphism out = a;
  for (Scalar& c : out.coeffs) c = k.mul(s, c);
  return out;
}

bool morphism_eq(const Field& k, const Morphism& a, const Morphism& b) {
  (void)k;
  return a.source == b.source && a.target == b.target && a.coeffs == b.coeffs;
}

SparseVec morphism_to_sparse(const Field& k, const LinCat& c, const Morphism& m) {
  SparseVec out;
  const auto& basis = c.hom(m.source, m.target);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!k.is_zero(m.coeffs[i])) out.emplace_back(basis[i], m.coeffs[i]);
  return out;
}

Morphism compose(const LinCat& c, const Morphism& g, const Morphism& f) {
  if (g.source != f.target)
    throw Error("NotComposable", "compose: source of g is '" + c.objects[g.source] +
                                     "' but target of f is '" + c.objects[f.target] + "'");
  Field k(c.field);
  Morphism out = zero_morphism(c, f.source, g.target);
  const auto& gb = c.hom(g.source, g.target);
  const auto& fb = c.hom(f.source, f.target);
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (k.is_zero(g.coeffs[i])) continue;
    for (std::size_t j = 0; j < fb.size(); ++j) {
      if (k.is_zero(f.coeffs[j])) continue;
      auto it = c.comp.find({gb[i], fb[j]});
      if (it == c.comp.end()) continue;
      Scalar w = k.mul(g.coeffs[i], f.coeffs[j]);
      for (const auto& [h, ch] : it->second)
        out.coeffs[c.basis_pos[h]] = k.add(out.coeffs[c.basis_pos[h]], k.mul(w, ch));
    }
  }
  return out;
}

namespace {

// Expansion of a single composable basis pair as a dense vector over
// Hom(source f, target g).
Vec comp_vec(const Field& k, const LinCat& c, BasisIndex g, BasisIndex f) {
  Vec out = vec_zero(k, c.dim_hom(c.basis_source[f], c.basis_target[g]));
  auto it = c.comp.find({g, f});
  if (it != c.comp.end())
    for (const auto& [h, ch] : it->second) out[c.basis_pos[h]] = k.add(out[c.basis_pos[h]], ch);
  return out;
}

}  // namespace

std::vector<Diagnostic> validate_category(const LinCat& c) {
  std::vector<Diagnostic> diags;
  Field k(c.field);
  constexpr std::size_t kMaxDiags = 64;
  auto report = [&](const std::string& check, const std::string& witness) {
    if (diags.size() < kMaxDiags) diags.push_back({check, witness});
  };

  // structural shape of comp entries
  for (const auto& [key, terms] : c.comp) {
    auto [g, f] = key;
    if (c.basis_source[g] != c.basis_target[f]) {
      report("CompShape", "(" + c.basis_ids[g] + "," + c.basis_ids[f] + ") not composable");
      continue;
    }
    for (const auto& [h, ch] : terms) {
      if (c.basis_source[h] != c.basis_source[f] || c.basis_target[h] != c.basis_target[g])
        report("CompShape", "term '" + c.basis_ids[h] + "' of (" + c.basis_ids[g] + "," +
                                c.basis_ids[f] + ") not parallel");
      if (k.is_zero(ch))
        report("CompShape", "zero coefficient stored in (" + c.basis_ids[g] + "," +
                                c.basis_ids[f] + ")");
    }
  }

  // designated identities
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    if (!c.identity_of[x]) {
      report("NoIdentity", c.objects[x]);
      continue;
    }
  }

  // identity laws, only where identities exist
  for (BasisIndex f = 0; f < c.basis_count(); ++f) {
    ObjectIndex x = c.basis_source[f], y = c.basis_target[f];
    if (c.identity_of[y]) {
      Vec got = comp_vec(k, c, *c.identity_of[y], f);
      Vec want = vec_unit(k, c.dim_hom(x, y), c.basis_pos[f]);
      if (got != want) report("IdentityLaw", "(id," + c.basis_ids[f] + ")");
    }
    if (c.identity_of[x]) {
      Vec got = comp_vec(k, c, f, *c.identity_of[x]);
      Vec want = vec_unit(k, c.dim_hom(x, y), c.basis_pos[f]);
      if (got != want) report("IdentityLaw", "(" + c.basis_ids[f] + ",id)");
    }
  }

  // associativity on all composable basis triples
  std::vector<std::vector<BasisIndex>> by_source(c.object_count());
  for (BasisIndex b = 0; b < c.basis_count(); ++b) by_source[c.basis_source[b]].push_back(b);
  for (BasisIndex f = 0; f < c.basis_count(); ++f) {
    for (BasisIndex g : by_source[c.basis_target[f]]) {
      Morphism gf = compose(c, basis_morphism(c, g), basis_morphism(c, f));
      for (BasisIndex h : by_source[c.basis_target[g]]) {
        Morphism hg = compose(c, basis_morphism(c, h), basis_morphism(c, g));
        Morphism left = compose(c, hg, basis_morphism(c, f));
        Morphism right = compose(c, basis_morphism(c, h), gf);
        if (!morphism_eq(k, left, right)) {
          report("Associativity", "(" + c.basis_ids[h] + "," + c.basis_ids[g] + "," +
                                      c.basis_ids[f] + ")");
          if (diags.size() >= kMaxDiags) return diags;
        }
      }
    }
  }
  return diags;
}

PathCategory path_category(const Quiver& q, const FieldSpec& field) {
  // Kahn topological check for acyclicity.
  std::map<std::string, std::size_t> vindex;
  for (std::size_t i = 0; i < q.vertices.size(); ++i) {
    if (vindex.count(q.vertices[i]))
      throw Error("DuplicateObject", "vertex '" + q.vertices[i] + "'");
    vindex[q.vertices[i]] = i;
  }
  std::vector<std::size_t> indeg(q.vertices.size(), 0);
  for (const auto& a : q.arrows) {
    if (!vindex.count(a.source)) throw Error("UnknownObject", "vertex '" + a.source + "'");
    if (!vindex.count(a.target)) throw Error("UnknownObject", "vertex '" + a.target + "'");
    ++indeg[vindex.at(a.target)];
  }
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < indeg.size(); ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::size_t seen = 0;
  std::vector<std::size_t> work = indeg;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    ++seen;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
      if (vindex.at(q.arrows[ai].source) != v) continue;
      std::size_t t = vindex.at(q.arrows[ai].target);
      if (--work[t] == 0) ready.push_back(t);
    }
  }
  if (seen != q.vertices.size()) throw Error("CyclicQuiver", "quiver has a directed cycle");

  // Enumerate paths by breadth over length; each path is a list of arrow
  // positions in application order.
  struct Path {
    std::vector<std::uint32_t> arrows;
    std::size_t source, target;
  };
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) paths.push_back({{}, v, v});
  std::size_t frontier_begin = 0;
  while (frontier_begin < paths.size()) {
    std::size_t frontier_end = paths.size();
    for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
      for (std::uint32_t ai = 0; ai < q.arrows.size(); ++ai) {
        if (vindex.at(q.arrows[ai].source) != paths[p].target) continue;
        Path ext = paths[p];
        ext.arrows.push_back(ai);
        ext.target = vindex.at(q.arrows[ai].target);
        paths.push_back(std::move(ext));
      }
    }
    frontier_begin = frontier_end;
  }

  auto path_id = [&](const Path& p) -> std::string {
    if (p.arrows.empty()) return "id_" + q.vertices[p.source];
    std::string id;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
      if (!id.empty()) id += ".";
      id += q.arrows[*it].name;
    }
    return id;
  };

  LinCatBuilder b(field);
  for (const auto& v : q.vertices) b.add_object(v);
  for (const auto& p : paths)
    b.add_basis(path_id(p), q.vertices[p.source], q.vertices[p.target]);
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    b.set_identity(q.vertices[v], "id_" + q.vertices[v]);

  Field k{field};
  std::map<std::vector<std::uint32_t>, const Path*> by_arrows;
  for (const auto& p : paths) by_arrows[p.arrows] = &p;
  for (const auto& g : paths) {
    for (const auto& f : paths) {
      if (f.target != g.source) continue;
      std::vector<std::uint32_t> cat = f.arrows;
      cat.insert(cat.end(), g.arrows.begin(), g.arrows.end());
      b.set_comp(path_id(g), path_id(f), {{path_id(*by_arrows.at(cat)), k.one()}});
    }
  }

  PathCategory out;
  out.category = std::move(b).build_shared();
  out.meta.arrow_count = static_cast<std::uint32_t>(q.arrows.size());
  out.meta.arrows_of_basis.resize(paths.size());
  out.meta.basis_of_arrow.assign(q.arrows.size(), 0);
  for (const auto& p : paths) {
    BasisIndex bi = out.category->basis_index(path_id(p));
    out.meta.arrows_of_basis[bi] = p.arrows;
    if (p.arrows.size() == 1) out.meta.basis_of_arrow[p.arrows[0]] = bi;
  }
  return out;
}

}  // namespace kcat
