#include "kcat/group.hpp"

namespace kcat {

unsigned Group::element(const std::string& name) const {
  for (unsigned i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw Error("UnknownElement", "no group element named '" + name + "'");
}

Group cyclic_group(std::size_t n) {
  if (n == 0) throw Error("InvalidOrder", "cyclic group of order 0");
  Group g;
  g.mul.assign(n, std::vector<unsigned>(n, 0));
  g.inv.assign(n, 0);
  g.names.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    g.inv[i] = static_cast<unsigned>((n - i) % n);
    g.names[i] = "t^" + std::to_string(i);
  }
  g.identity = 0;
  return g;
}

Group group_from_table(const std::vector<std::vector<unsigned>>& table,
                       std::optional<unsigned> identity,
                       std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("InvalidOrder", "empty multiplication table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw Error("BadTable", "row " + std::to_string(i) + " has wrong length");
    for (unsigned v : table[i])
      if (v >= n) throw Error("BadTable", "entry out of range in row " + std::to_string(i));
  }

  Group g;
  g.mul = table;
  if (names.empty()) {
    g.names.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.names[i] = "g" + std::to_string(i);
  } else {
    if (names.size() != n) throw Error("BadTable", "wrong number of element names");
    g.names = std::move(names);
  }

  auto is_two_sided_identity = [&](unsigned e) {
    for (unsigned a = 0; a < n; ++a)
      if (table[e][a] != a || table[a][e] != a) return false;
    return true;
  };
  if (identity) {
    if (*identity >= n || !is_two_sided_identity(*identity))
      throw Error("NoIdentity",
                  "element " + std::to_string(*identity) + " is not a two-sided identity");
    g.identity = *identity;
  } else {
    unsigned e = 0;
    for (; e < n; ++e)
      if (is_two_sided_identity(e)) break;
    if (e == n) throw Error("NoIdentity", "no two-sided identity element");
    g.identity = e;
  }

  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error("NotAssociative", "witness triple (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");

  g.inv.assign(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    bool found = false;
    for (unsigned b = 0; b < n; ++b) {
      if (table[a][b] == g.identity && table[b][a] == g.identity) {
        g.inv[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw Error("NoInverse", "element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

Group direct_product(const Group& g, const Group& h) {
  const std::size_t n = g.order(), m = h.order();
  std::vector<std::vector<unsigned>> table(n * m, std::vector<unsigned>(n * m, 0));
  std::vector<std::string> names(n * m);
  auto idx = [&](unsigned a, unsigned b) { return a * static_cast<unsigned>(m) + b; };
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < m; ++b) {
      names[idx(a, b)] = "(" + g.names[a] + "," + h.names[b] + ")";
      for (unsigned c = 0; c < n; ++c)
        for (unsigned d = 0; d < m; ++d)
          table[idx(a, b)][idx(c, d)] = idx(g.times(a, c), h.times(b, d));
    }
  return group_from_table(table, idx(g.identity, h.identity), std::move(names));
}

}  // namespace kcat
