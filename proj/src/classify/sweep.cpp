#include "leibniz/sweep.hpp"

namespace leibniz {

std::vector<NamedAlgebra> catalog_algebras(std::size_t max_dim) {
  std::vector<NamedAlgebra> base = {
      {"J1", catalog::j1()}, {"J2", catalog::j2()}, {"H1", catalog::h1()}, {"sl2", catalog::sl2()}};
  std::vector<NamedAlgebra> out;
  for (std::size_t q = 0; q <= max_dim; ++q) out.push_back({"a(" + std::to_string(q) + ")", catalog::abelian(q)});
  for (const auto& b : base) {
    if (b.g.dim() > max_dim) continue;
    out.push_back(b);
    for (std::size_t q = 1; b.g.dim() + q <= max_dim; ++q) {
      out.push_back({b.name + "+a(" + std::to_string(q) + ")", direct_sum(b.g, catalog::abelian(q))});
    }
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].g.dim() + base[j].g.dim() <= max_dim) {
        out.push_back({base[i].name + "+" + base[j].name, direct_sum(base[i].g, base[j].g)});
      }
    }
  }
  for (std::size_t k = 2; 2 * k + 1 <= max_dim; ++k) {
    out.push_back({"H(" + std::to_string(k) + ")", catalog::heisenberg(k)});
  }
  return out;
}

std::vector<std::pair<std::string, Subspace>> standard_ideals(const LeibnizAlgebra& g) {
  std::vector<std::pair<std::string, Subspace>> out;
  auto add = [&](std::string name, const Subspace& s) {
    for (const auto& [n, t] : out) {
      if (t == s) return;
    }
    out.emplace_back(std::move(name), s);
  };
  Subspace g2 = derived(g);
  Subspace z = center(g);
  add("0", zero_space(g));
  add("g", full_space(g));
  add("g^2", g2);
  add("Z", z);
  add("Z∩g^2", intersect(z, g2));
  std::vector<Subspace> series = lower_central_series(g);
  for (std::size_t i = 2; i < series.size(); ++i) add("g^" + std::to_string(i + 1), series[i]);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    add("g^2+" + g.labels()[i], sum(g2, Subspace::span(g.field(), g.dim(), {basis_vector(g, i)})));
  }
  for (std::size_t i = 0; i < z.dim(); ++i) {
    add("z" + std::to_string(i), Subspace::span(g.field(), g.dim(), {z.basis_vector(i)}));
  }
  return out;
}

std::vector<NamedPair> catalog_pairs(std::size_t max_dim) {
  std::vector<NamedPair> out;
  for (const auto& a : catalog_algebras(max_dim)) {
    for (const auto& [name, n] : standard_ideals(a.g)) {
      out.push_back({"(" + a.name + ", " + name + ")", Pair::make(a.g, n)});
    }
  }
  return out;
}

}  // namespace leibniz
