#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcat/scalar.hpp"

namespace kcat {

/// Finite group as an explicit multiplication table over dense element
/// indices 0..n-1. Names are display-only; every downstream key is an index.
struct Group {
  std::vector<std::vector<unsigned>> mul;  // mul[a][b] = a·b
  unsigned identity = 0;
  std::vector<unsigned> inv;
  std::vector<std::string> names;

  std::size_t order() const { return mul.size(); }
  unsigned times(unsigned a, unsigned b) const { return mul[a][b]; }
  unsigned inverse(unsigned a) const { return inv[a]; }
  bool is_identity(unsigned a) const { return a == identity; }
  const std::string& name(unsigned a) const { return names[a]; }
  /// Index of a named element; throws UnknownElement.
  unsigned element(const std::string& name) const;

  friend bool operator==(const Group&, const Group&) = default;
};

/// Z/n with element i named "t^i"; throws InvalidOrder when n = 0.
Group cyclic_group(std::size_t n);

/// Validates all three group axioms, computes inverses. Throws
/// NotAssociative / NoIdentity / NoInverse, each naming a witness.
Group group_from_table(const std::vector<std::vector<unsigned>>& table,
                       std::optional<unsigned> identity = std::nullopt,
                       std::vector<std::string> names = {});

/// Direct product; element (a,b) named "(na,nb)".
Group direct_product(const Group& g, const Group& h);

inline Group trivial_group() { return cyclic_group(1); }

}  // namespace kcat
