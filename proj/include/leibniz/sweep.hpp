#pragma once

#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

struct NamedAlgebra {
  std::string name;
  LeibnizAlgebra g;
};

struct NamedPair {
  std::string name;
  Pair pair;
};

/// Catalog algebras and direct sums of them with dim <= max_dim, in a fixed
/// order.
std::vector<NamedAlgebra> catalog_algebras(std::size_t max_dim);

/// Deduplicated ideals: 0, g, g², Z(g), Z(g) ∩ g², the lower central series,
/// g² + span{e_i}, and span{z} for z in the rref basis of Z(g).
std::vector<std::pair<std::string, Subspace>> standard_ideals(const LeibnizAlgebra& g);

/// Every catalog algebra of dim <= max_dim paired with its standard ideals.
std::vector<NamedPair> catalog_pairs(std::size_t max_dim);

}  // namespace leibniz
