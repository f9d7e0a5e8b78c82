#include <cstdlib>
#include <functional>

#include "catch_amalgamated.hpp"
#include "leibniz/error.hpp"
#include "leibniz/homology.hpp"
#include "leibniz/sweep.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace test_support;

namespace {

Subspace first_k(std::size_t q, std::size_t k) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(unit_vector(Field::rationals(), q, i));
  return Subspace::span(Field::rationals(), q, gens);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("boundaries square to zero", "[homology]") {
  std::vector<LeibnizAlgebra> algs = {catalog::j1(), catalog::j2(), catalog::h1(), catalog::sl2(),
                                      direct_sum(catalog::j1(), catalog::abelian(1))};
  for (const auto& g : algs) {
    ChainComplexSlice c = leibniz_complex(g, 4);
    REQUIRE(c.boundaries.size() == 5);
    for (std::size_t n = 2; n <= 4; ++n) CHECK((c.boundaries[n - 1] * c.boundaries[n]).is_zero());
    CHECK(c.boundaries[1].is_zero());
  }
  // A table violating the identity gives ∂∂ != 0.
  LeibnizAlgebra bad(Field::rationals(), {"x", "y"});
  bad.set_bracket(0, 0, vec({0, 1}));
  bad.set_bracket(1, 0, vec({1, 0}));
  CHECK(code_of([&] { leibniz_complex(bad, 3); }) == ErrorCode::InvalidInput);
}

TEST_CASE("tensor power of a projection", "[homology]") {
  Matrix p = Matrix::from_ints(Field::rationals(), {{1, 0, 2}, {0, 1, 0}});
  Matrix p2 = tensor_power(p, 2);
  CHECK(p2.rows() == 4);
  CHECK(p2.cols() == 9);
  // e2 ⊗ e0 -> (2 u0 + ...)⊗u0.
  CHECK(p2.column(2 * 3 + 0) == vec({2, 0, 0, 0}));
  CHECK(tensor_power(p, 0) == Matrix::identity(Field::rationals(), 1));
}

TEST_CASE("mapping cone differential", "[homology]") {
  Pair p = Pair::make(catalog::h1(), span_units(3, {2}));
  MappingCone m = mapping_cone(p, 4);
  CHECK(m.dims[3] == 9 + 8);
  CHECK(m.dims[4] == 27 + 16);
  for (std::size_t n = 2; n <= 4; ++n) CHECK((m.deltas[n - 1] * m.deltas[n]).is_zero());
}

TEST_CASE("second homology examples", "[homology]") {
  Pair h = Pair::full(catalog::h1());
  CHECK(hl2_exterior(h).dim == 5);
  CHECK(hl2_cone(h).dim == 5);

  Pair j2z = Pair::make(catalog::j2(), span_units(3, {2}));
  CHECK(hl2_exterior(j2z).dim == 4);
  CHECK(hl2_cone(j2z).dim == 4);
  CHECK(hl2_central_tau(j2z).dim == 4);
  CHECK(hl2_central_star(j2z).dim == 4);

  for (std::size_t q = 0; q <= 3; ++q) {
    for (std::size_t k = 0; k <= q; ++k) {
      Pair p = Pair::make(catalog::abelian(q), first_k(q, k));
      std::size_t expected = k * (2 * q - k);
      CHECK(hl2_exterior(p).dim == expected);
      CHECK(hl2_cone(p).dim == expected);
      CHECK(hl2_central_tau(p).dim == expected);
      CHECK(hl2_central_star(p).dim == expected);
    }
  }

  CHECK(hl2_dim(catalog::j1()) == 1);
  CHECK(hl2_dim(catalog::j2()) == 4);
  CHECK(hl2_dim(catalog::sl2()) == 0);
}

TEST_CASE("central methods reject non-central ideals", "[homology]") {
  Pair h = Pair::full(catalog::h1());
  CHECK(code_of([&] { hl2_central_tau(h); }) == ErrorCode::IdealNotCentral);
  CHECK(code_of([&] { hl2_central_star(h); }) == ErrorCode::IdealNotCentral);
}

TEST_CASE("cone dimension cap", "[homology]") {
  Pair big = Pair::make(catalog::abelian(9), zero_space(catalog::abelian(9)));
  CHECK(code_of([&] { hl2_cone(big); }) == ErrorCode::DimensionCapExceeded);
  CHECK(code_of([&] { hl2_cone(Pair::full(catalog::h1()), 2); }) == ErrorCode::DimensionCapExceeded);
  CHECK(hl2_cone(Pair::full(catalog::abelian(2)), 2).dim == 4);
  ::setenv("LEIBNIZ_DIM_CAP", "1", 1);
  CHECK(default_dimension_cap() == 1);
  CHECK(code_of([&] { hl2_cone(Pair::full(catalog::j1())); }) == ErrorCode::DimensionCapExceeded);
  ::unsetenv("LEIBNIZ_DIM_CAP");
  CHECK(default_dimension_cap() == 8);
}

TEST_CASE("all methods agree with the oracle on catalog pairs", "[homology][oracle]") {
  std::vector<NamedPair> pairs = catalog_pairs(4);
  CHECK(pairs.size() >= 40);
  for (const auto& [name, p] : pairs) {
    INFO(name);
    std::size_t expected = oracle::hl2(p.g, p.n);
    HomologyResult ext = hl2_exterior(p);
    CHECK(ext.dim == expected);
    CHECK(ext.representatives.dim() == ext.dim);
    CHECK(hl2_cone(p).dim == expected);
    if (center(p.g).contains(p.n)) {
      CHECK(hl2_central_tau(p).dim == expected);
      CHECK(hl2_central_star(p).dim == expected);
    }
    CHECK(hl1(p).dim == p.n.dim() - product_ideal(p.g, full_space(p.g), p.n).dim());
  }
}

TEST_CASE("Kunneth formula on direct sums", "[homology]") {
  std::vector<Pair> small;
  for (const auto& a : catalog_algebras(3)) {
    if (a.g.dim() == 0) continue;
    small.push_back(Pair::full(a.g));
  }
  for (const auto& p1 : small) {
    for (const auto& p2 : small) {
      KunnethReport r = kunneth_check(p1, p2);
      CHECK(r.holds());
      std::size_t ab1 = p1.g.dim() - derived(p1.g).dim();
      std::size_t ab2 = p2.g.dim() - derived(p2.g).dim();
      CHECK(r.b_factor == 2 * ab1 * ab2);
    }
  }
  KunnethReport rel = kunneth_check(Pair::make(catalog::j2(), span_units(3, {2})), Pair::full(catalog::j1()));
  CHECK(rel.holds());
}

TEST_CASE("homology bounds", "[homology]") {
  for (const auto& [name, p] : catalog_pairs(5)) {
    if (!is_nilpotent(p.g)) continue;
    INFO(name);
    CHECK(bound_theorem36(p).holds());
  }
  for (const auto& a : catalog_algebras(5)) {
    if (!is_nilpotent(a.g)) continue;
    INFO(a.name);
    Cor39Report r = bound_cor39(a.g);
    CHECK(r.bound.holds());
    CHECK(r.equality_matches());
  }
  CHECK(code_of([&] { bound_cor39(catalog::sl2()); }) == ErrorCode::NotNilpotent);
  CHECK(code_of([&] { bound_theorem36(Pair::full(catalog::sl2())); }) == ErrorCode::NotNilpotent);
}

TEST_CASE("complement split and snake inequality", "[homology]") {
  LeibnizAlgebra g = direct_sum(catalog::h1(), catalog::j1());
  Subspace first = embed_first(full_space(catalog::h1()), 2);
  Subspace second = embed_second(full_space(catalog::j1()), 3);
  CHECK(complement_split_check(Pair::make(g, first), second).holds());
  CHECK(complement_split_check(Pair::make(g, second), first).holds());
  CHECK(code_of([&] { complement_split_check(Pair::make(g, first), span_units(5, {2, 4})); }) ==
        ErrorCode::NotAComplement);

  for (const auto& [name, p] : catalog_pairs(4)) {
    Subspace zn = intersect(center(p.g), p.n);
    for (std::size_t i = 0; i < zn.dim(); ++i) {
      INFO(name << " k = z" << i);
      SnakeReport r = snake_inequality_check(p.g, p.n, Subspace::span(p.g.field(), p.g.dim(), {zn.basis_vector(i)}));
      CHECK(r.holds());
      CHECK(r.sharp_holds());
    }
  }
  LeibnizAlgebra h1 = catalog::h1();
  CHECK(code_of([&] { snake_inequality_check(h1, full_space(h1), span_units(3, {0})); }) ==
        ErrorCode::NotCentralInPair);
}

TEST_CASE("extra special second homology", "[homology]") {
  CHECK(extra_special_t(catalog::j1()) == 1);
  CHECK(extra_special_t(catalog::j2()) == 1);
  CHECK(extra_special_t(catalog::h1()) == 2);
  CHECK(extra_special_t(catalog::heisenberg(2)) == 0);
  CHECK(code_of([&] { extra_special_t(catalog::abelian(2)); }) == ErrorCode::InvalidInput);
}
