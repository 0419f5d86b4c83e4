#include "kcat/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kcat {

using nlohmann::json;

namespace {

[[noreturn]] void bail(const std::string& where, const std::string& msg) {
  throw Error("ParseError", where + ": " + msg);
}

json parse(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bail(where, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& member(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bail(where, std::string("missing member '") + key + "'");
  return *it;
}

std::string str_of(const json& j, const std::string& where) {
  if (!j.is_string()) bail(where, "expected a string");
  return j.get<std::string>();
}

Matrix matrix_of(const json& j, const Field& k, std::size_t rows, std::size_t cols,
                 const std::string& where) {
  if (!j.is_array()) bail(where, "expected a matrix (array of rows)");
  if (j.size() != rows) bail(where, "expected " + std::to_string(rows) + " rows");
  Matrix m = Matrix::zero(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      bail(where, "row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m.at(r, c) = k.parse(str_of(row[c], where));
      } catch (const Error& e) {
        bail(where, e.what());
      }
    }
  }
  return m;
}

json matrix_json(const Matrix& m, const Field& k) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(k.str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<std::string, std::string> split_pair_key(const std::string& key,
                                                   const std::string& where) {
  auto bar = key.find('|');
  if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos)
    bail(where, "key '" + key + "' must be '<x>|<y>'");
  return {key.substr(0, bar), key.substr(bar + 1)};
}

}  // namespace

Group read_group(const std::string& text, const std::string& where) {
  json j = parse(text, where);
  if (j.contains("cyclic")) {
    if (!j["cyclic"].is_number_unsigned()) bail(where, "'cyclic' must be a natural number");
    std::size_t n = j["cyclic"].get<std::size_t>();
    if (n == 0) bail(where, "cyclic group of order 0");
    return cyclic_group(n);
  }
  const json& mul = member(j, "mul", where);
  if (!mul.is_array()) bail(where, "'mul' must be a table");
  std::vector<std::vector<unsigned>> table;
  for (const json& row : mul) {
    if (!row.is_array()) bail(where, "'mul' rows must be arrays");
    std::vector<unsigned> r;
    for (const json& v : row) {
      if (!v.is_number_unsigned()) bail(where, "'mul' entries must be indices");
      r.push_back(v.get<unsigned>());
    }
    table.push_back(std::move(r));
  }
  if (j.contains("order") && j["order"].get<std::size_t>() != table.size())
    bail(where, "'order' disagrees with the table size");
  std::optional<unsigned> identity;
  if (j.contains("identity")) identity = j["identity"].get<unsigned>();
  std::vector<std::string> names;
  if (j.contains("names"))
    for (const json& n : j["names"]) names.push_back(str_of(n, where));
  try {
    return group_from_table(table, identity, std::move(names));
  } catch (const Error& e) {
    bail(where, e.what());
  }
}

std::string write_group(const Group& g) {
  json j;
  j["order"] = g.order();
  j["identity"] = g.identity;
  j["mul"] = g.mul;
  j["names"] = g.names;
  return j.dump(2) + "\n";
}

LinCatPtr read_category(const std::string& text, const std::string& where) {
  json j = parse(text, where);
  FieldSpec spec;
  try {
    spec = field_spec_from_string(str_of(member(j, "field", where), where));
  } catch (const Error& e) {
    bail(where, e.what());
  }
  Field k(spec);
  try {
    LinCatBuilder b(spec);
    for (const json& o : member(j, "objects", where)) b.add_object(str_of(o, where));
    for (const auto& [key, lst] : member(j, "homs", where).items()) {
      auto [x, y] = split_pair_key(key, where + "/homs");
      if (!lst.is_array()) bail(where, "hom list for '" + key + "' must be an array");
      for (const json& id : lst) b.add_basis(str_of(id, where), x, y);
    }
    for (const auto& [obj, id] : member(j, "identities", where).items())
      b.set_identity(obj, str_of(id, where));
    for (const json& entry : member(j, "comp", where)) {
      std::vector<std::pair<std::string, Scalar>> terms;
      for (const json& term : member(entry, "result", where + "/comp")) {
        if (!term.is_array() || term.size() != 2) bail(where, "comp terms are [id, scalar] pairs");
        terms.emplace_back(str_of(term[0], where), k.parse(str_of(term[1], where)));
      }
      b.set_comp(str_of(member(entry, "g", where + "/comp"), where),
                 str_of(member(entry, "f", where + "/comp"), where), terms);
    }
    return std::move(b).build_shared();
  } catch (const Error& e) {
    if (e.code() == "ParseError") throw;
    bail(where, e.what());
  }
}

std::string write_category(const LinCat& c) {
  Field k(c.field);
  json j;
  j["field"] = field_spec_to_string(c.field);
  j["objects"] = c.objects;
  json homs = json::object();
  for (const auto& [pair, lst] : c.homs) {
    if (lst.empty()) continue;
    json ids = json::array();
    for (BasisIndex b : lst) ids.push_back(c.basis_ids[b]);
    homs[c.objects[pair.first] + "|" + c.objects[pair.second]] = std::move(ids);
  }
  j["homs"] = std::move(homs);
  json ids = json::object();
  for (ObjectIndex x = 0; x < c.object_count(); ++x)
    if (c.identity_of[x]) ids[c.objects[x]] = c.basis_ids[*c.identity_of[x]];
  j["identities"] = std::move(ids);
  // sorted by (g id, f id) for deterministic output
  std::map<std::pair<std::string, std::string>, json> entries;
  for (const auto& [key, terms] : c.comp) {
    json result = json::array();
    for (const auto& [h, ch] : terms)
      result.push_back(json::array({c.basis_ids[h], k.str(ch)}));
    json entry;
    entry["g"] = c.basis_ids[key.first];
    entry["f"] = c.basis_ids[key.second];
    entry["result"] = std::move(result);
    entries[{c.basis_ids[key.first], c.basis_ids[key.second]}] = std::move(entry);
  }
  json comp = json::array();
  for (auto& [key, entry] : entries) comp.push_back(std::move(entry));
  j["comp"] = std::move(comp);
  return j.dump(2) + "\n";
}

GAction read_action(const std::string& text, const LinCatPtr& category, const std::string& where) {
  json j = parse(text, where);
  const LinCat& c = *category;
  Field k(c.field);
  GAction a;
  a.group = read_group(member(j, "group", where).dump(), where + "/group");
  a.category = category;
  try {
    const json& perm = member(j, "object_perm", where);
    a.object_perm.assign(a.group.order(),
                         std::vector<ObjectIndex>(c.object_count(), 0));
    for (unsigned s = 0; s < a.group.order(); ++s) {
      auto it = perm.find(a.group.name(s));
      if (it == perm.end()) bail(where, "object_perm missing element '" + a.group.name(s) + "'");
      std::vector<bool> assigned(c.object_count(), false);
      for (const auto& [x, sx] : it->items()) {
        ObjectIndex xi = c.object_index(x);
        a.object_perm[s][xi] = c.object_index(str_of(sx, where));
        assigned[xi] = true;
      }
      for (ObjectIndex x = 0; x < c.object_count(); ++x)
        if (!assigned[x])
          bail(where, "object_perm of '" + a.group.name(s) + "' missing object '" +
                          c.objects[x] + "'");
    }
    const json& maps = member(j, "hom_maps", where);
    for (unsigned s = 0; s < a.group.order(); ++s)
      for (const auto& [pair, lst] : c.homs) {
        auto [x, y] = pair;
        std::string key = a.group.name(s) + "|" + c.objects[x] + "|" + c.objects[y];
        auto it = maps.find(key);
        if (it == maps.end()) bail(where, "hom_maps missing '" + key + "'");
        std::size_t rows = c.dim_hom(a.object_perm[s][x], a.object_perm[s][y]);
        a.hom_maps[{s, x, y}] = matrix_of(*it, k, rows, lst.size(), where + "/hom_maps/" + key);
      }
  } catch (const Error& e) {
    if (e.code() == "ParseError") throw;
    bail(where, e.what());
  }
  return a;
}

std::string write_action(const GAction& a) {
  const LinCat& c = *a.category;
  Field k(c.field);
  json j;
  j["group"] = json::parse(write_group(a.group));
  json perm = json::object();
  for (unsigned s = 0; s < a.group.order(); ++s) {
    json p = json::object();
    for (ObjectIndex x = 0; x < c.object_count(); ++x)
      p[c.objects[x]] = c.objects[a.object_perm[s][x]];
    perm[a.group.name(s)] = std::move(p);
  }
  j["object_perm"] = std::move(perm);
  json maps = json::object();
  for (const auto& [key, m] : a.hom_maps) {
    auto [s, x, y] = key;
    maps[a.group.name(s) + "|" + c.objects[x] + "|" + c.objects[y]] = matrix_json(m, k);
  }
  j["hom_maps"] = std::move(maps);
  return j.dump(2) + "\n";
}

Grading read_grading(const std::string& text, const LinCatPtr& category, const Group& group,
                     const std::string& where) {
  json j = parse(text, where);
  const LinCat& c = *category;
  Grading g;
  g.category = category;
  g.group = group;
  g.degree.assign(c.basis_count(), group.identity);
  const json& degrees = member(j, "degrees", where);
  std::vector<bool> seen(c.basis_count(), false);
  try {
    for (const auto& [id, name] : degrees.items()) {
      BasisIndex b = c.basis_index(id);
      g.degree[b] = group.element(str_of(name, where));
      seen[b] = true;
    }
  } catch (const Error& e) {
    if (e.code() == "ParseError") throw;
    bail(where, e.what());
  }
  for (BasisIndex b = 0; b < c.basis_count(); ++b)
    if (!seen[b]) bail(where, "missing degree for basis '" + c.basis_ids[b] + "'");
  return g;
}

std::string write_grading(const Grading& g) {
  json degrees = json::object();
  for (BasisIndex b = 0; b < g.category->basis_count(); ++b)
    degrees[g.category->basis_ids[b]] = g.group.name(g.degree[b]);
  json j;
  j["degrees"] = std::move(degrees);
  return j.dump(2) + "\n";
}

LoadedModule read_module(const std::string& text, const LinCatPtr& category, const Group* group,
                         const std::string& where) {
  json j = parse(text, where);
  const LinCat& c = *category;
  Field k(c.field);
  LoadedModule out;
  out.module.category = category;
  out.module.dims.assign(c.object_count(), 0);
  try {
    const json& dims = member(j, "dims", where);
    for (const auto& [x, n] : dims.items()) {
      if (!n.is_number_unsigned()) bail(where, "dims must be natural numbers");
      out.module.dims[c.object_index(x)] = n.get<std::size_t>();
    }
    const json& action = member(j, "action", where);
    out.module.action.resize(c.basis_count());
    for (BasisIndex b = 0; b < c.basis_count(); ++b) {
      auto it = action.find(c.basis_ids[b]);
      std::size_t rows = out.module.dims[c.basis_target[b]];
      std::size_t cols = out.module.dims[c.basis_source[b]];
      if (it == action.end()) {
        if (rows != 0 && cols != 0)
          bail(where, "action missing basis '" + c.basis_ids[b] + "'");
        out.module.action[b] = Matrix::zero(k, rows, cols);
      } else {
        out.module.action[b] =
            matrix_of(*it, k, rows, cols, where + "/action/" + c.basis_ids[b]);
      }
    }
    if (j.contains("blocks")) {
      if (!group) bail(where, "module has blocks but no group was provided");
      out.has_blocks = true;
      out.blocks.assign(c.object_count(),
                        std::vector<std::vector<std::uint32_t>>(group->order()));
      for (const auto& [x, table] : j["blocks"].items()) {
        ObjectIndex xi = c.object_index(x);
        for (const auto& [sname, indices] : table.items()) {
          unsigned s = group->element(sname);
          for (const json& i : indices) {
            if (!i.is_number_unsigned()) bail(where, "block indices must be naturals");
            out.blocks[xi][s].push_back(i.get<std::uint32_t>());
          }
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() == "ParseError") throw;
    bail(where, e.what());
  }
  return out;
}

namespace {

json module_json(const Module& m) {
  const LinCat& c = *m.category;
  Field k(c.field);
  json j;
  json dims = json::object();
  for (ObjectIndex x = 0; x < c.object_count(); ++x) dims[c.objects[x]] = m.dims[x];
  j["dims"] = std::move(dims);
  json action = json::object();
  for (BasisIndex b = 0; b < c.basis_count(); ++b)
    action[c.basis_ids[b]] = matrix_json(m.action[b], k);
  j["action"] = std::move(action);
  return j;
}

}  // namespace

std::string write_module(const Module& m) { return module_json(m).dump(2) + "\n"; }

std::string write_graded_module(const GradedModule& m, const Group& group) {
  const LinCat& c = *m.module.category;
  json j = module_json(m.module);
  json blocks = json::object();
  for (ObjectIndex x = 0; x < c.object_count(); ++x) {
    json table = json::object();
    for (unsigned s = 0; s < group.order(); ++s) table[group.name(s)] = m.blocks[x][s];
    blocks[c.objects[x]] = std::move(table);
  }
  j["blocks"] = std::move(blocks);
  return j.dump(2) + "\n";
}

Algebra read_algebra(const std::string& text, const std::string& where) {
  json j = parse(text, where);
  Algebra a;
  try {
    a.field = field_spec_from_string(str_of(member(j, "field", where), where));
    Field k(a.field);
    for (const json& id : member(j, "basis", where)) a.basis.push_back(str_of(id, where));
    for (const json& term : member(j, "unit", where)) {
      if (!term.is_array() || term.size() != 2) bail(where, "unit terms are [id, scalar] pairs");
      a.unit.emplace_back(a.index(str_of(term[0], where)), k.parse(str_of(term[1], where)));
    }
    for (const json& entry : member(j, "mul", where)) {
      unsigned g = a.index(str_of(member(entry, "g", where + "/mul"), where));
      unsigned f = a.index(str_of(member(entry, "f", where + "/mul"), where));
      std::vector<std::pair<unsigned, Scalar>> terms;
      for (const json& term : member(entry, "result", where + "/mul")) {
        if (!term.is_array() || term.size() != 2) bail(where, "mul terms are [id, scalar] pairs");
        terms.emplace_back(a.index(str_of(term[0], where)), k.parse(str_of(term[1], where)));
      }
      if (!terms.empty()) a.mul[{g, f}] = std::move(terms);
    }
  } catch (const Error& e) {
    if (e.code() == "ParseError") throw;
    bail(where, e.what());
  }
  return a;
}

std::string write_algebra(const Algebra& a) {
  Field k(a.field);
  json j;
  j["field"] = field_spec_to_string(a.field);
  j["basis"] = a.basis;
  json unit = json::array();
  for (const auto& [i, c] : a.unit) unit.push_back(json::array({a.basis[i], k.str(c)}));
  j["unit"] = std::move(unit);
  std::map<std::pair<std::string, std::string>, json> entries;
  for (const auto& [key, terms] : a.mul) {
    json result = json::array();
    for (const auto& [h, ch] : terms) result.push_back(json::array({a.basis[h], k.str(ch)}));
    json entry;
    entry["g"] = a.basis[key.first];
    entry["f"] = a.basis[key.second];
    entry["result"] = std::move(result);
    entries[{a.basis[key.first], a.basis[key.second]}] = std::move(entry);
  }
  json mul = json::array();
  for (auto& [key, entry] : entries) mul.push_back(std::move(entry));
  j["mul"] = std::move(mul);
  return j.dump(2) + "\n";
}

AlgebraGrading read_algebra_grading(const std::string& text, const Algebra& a, const Group& group,
                                    const std::string& where) {
  json j = parse(text, where);
  AlgebraGrading g;
  g.group = group;
  g.degree.assign(a.dim(), group.identity);
  std::vector<bool> seen(a.dim(), false);
  try {
    for (const auto& [id, name] : member(j, "degrees", where).items()) {
      unsigned b = a.index(id);
      g.degree[b] = group.element(str_of(name, where));
      seen[b] = true;
    }
  } catch (const Error& e) {
    if (e.code() == "ParseError") throw;
    bail(where, e.what());
  }
  for (unsigned b = 0; b < a.dim(); ++b)
    if (!seen[b]) bail(where, "missing degree for basis '" + a.basis[b] + "'");
  return g;
}

std::string write_algebra_grading(const Algebra& a, const AlgebraGrading& g) {
  json degrees = json::object();
  for (unsigned b = 0; b < a.dim(); ++b) degrees[a.basis[b]] = g.group.name(g.degree[b]);
  json j;
  j["degrees"] = std::move(degrees);
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("ParseError", path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", path + ": cannot open for writing");
  out << text;
  if (!out) throw Error("IoError", path + ": write failed");
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace kcat
