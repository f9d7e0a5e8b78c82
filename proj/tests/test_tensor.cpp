#include <random>

#include "catch_amalgamated.hpp"
#include "leibniz/error.hpp"
#include "leibniz/tensor.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace test_support;

namespace {

std::size_t symbol_of(const TensorPresentation& tp, const std::string& name) {
  for (std::size_t s = 0; s < tp.symbol_count(); ++s) {
    if (tp.symbol_name(s) == name) return s;
  }
  FAIL("no symbol " << name);
  return 0;
}

}  // namespace

TEST_CASE("tensor product examples", "[tensor]") {
  LeibnizAlgebra a2 = catalog::abelian(2);
  Subspace e1 = span_units(2, {0});
  CHECK(tensor_product(a2, e1, e1).dim() == 2);
  CHECK(tensor_product(a2, zero_space(a2), e1).dim() == 0);

  LeibnizAlgebra j1 = catalog::j1();
  TensorPresentation t = tensor_product(j1, full_space(j1), full_space(j1));
  CHECK(t.symbol_count() == 8);
  CHECK(t.dim() == 3);
  CHECK(validate(t.algebra).ok());
  CHECK(exterior_product(j1, full_space(j1), full_space(j1)).dim() == 2);
  CHECK_THROWS_AS(tensor_product(catalog::h1(), span_units(3, {0}), full_space(catalog::h1())), Error);
}

TEST_CASE("square subspace", "[tensor]") {
  LeibnizAlgebra a2 = catalog::abelian(2);
  TensorPresentation disjoint = tensor_product(a2, span_units(2, {0}), span_units(2, {1}));
  CHECK(square_subspace(disjoint).is_zero());

  LeibnizAlgebra a1 = catalog::abelian(1);
  TensorPresentation t1 = tensor_product(a1, full_space(a1), full_space(a1));
  CHECK(square_subspace(t1).dim() == 1);
  CHECK(exterior_product(a1, full_space(a1), full_space(a1)).dim() == 1);

  for (std::size_t q = 0; q <= 4; ++q) {
    LeibnizAlgebra a = catalog::abelian(q);
    CHECK(exterior_product(a, full_space(a), full_space(a)).dim() == q * q);
  }
}

TEST_CASE("exterior product examples", "[tensor]") {
  for (std::size_t q = 1; q <= 3; ++q) {
    LeibnizAlgebra a = catalog::abelian(q);
    for (std::size_t k = 0; k <= q; ++k) {
      std::vector<Vector> gens;
      for (std::size_t i = 0; i < k; ++i) gens.push_back(basis_vector(a, i));
      Subspace n = Subspace::span(a.field(), q, gens);
      CHECK(exterior_product(a, full_space(a), n).dim() == 2 * q * k - k * k);
    }
  }
  LeibnizAlgebra j1 = catalog::j1();
  TensorPresentation e = exterior_product(j1, full_space(j1), span_units(2, {1}));
  CHECK(e.dim() == 2);
  // Both y^y symbols vanish ((3b) and (3c) with [x,x] = y); x^y and y^x
  // span the quotient.
  auto cls = [&](std::size_t s) { return e.class_of(unit_vector(j1.field(), e.symbol_count(), s)); };
  CHECK(is_zero(cls(e.a_index(1, 0))));
  CHECK(is_zero(cls(e.b_index(0, 1))));
  CHECK(Subspace::span(j1.field(), 2, {cls(e.a_index(0, 0)), cls(e.b_index(0, 0))}).is_full());
  CHECK(exterior_product(j1, full_space(j1), zero_space(j1)).dim() == 0);
}

TEST_CASE("commutator map", "[tensor]") {
  LeibnizAlgebra a3 = catalog::abelian(3);
  CHECK(commutator_map(exterior_product(a3, full_space(a3), full_space(a3))).is_zero());

  LeibnizAlgebra j1 = catalog::j1();
  TensorPresentation e = exterior_product(j1, full_space(j1), full_space(j1));
  Matrix c = commutator_map(e);
  Vector xx = e.class_of(unit_vector(j1.field(), e.symbol_count(), symbol_of(e, "x^x")));
  Vector yx = e.class_of(unit_vector(j1.field(), e.symbol_count(), symbol_of(e, "y^x")));
  CHECK(c.apply(xx) == vec({0, 1}));
  CHECK(is_zero(c.apply(yx)));

  std::vector<std::pair<LeibnizAlgebra, Subspace>> cases = {
      {catalog::h1(), span_units(3, {2})},
      {catalog::h1(), full_space(catalog::h1())},
      {catalog::j2(), span_units(3, {1, 2})},
      {direct_sum(catalog::j1(), catalog::abelian(1)), span_units(3, {1, 2})},
  };
  for (const auto& [g, n] : cases) {
    TensorPresentation tp = exterior_product(g, full_space(g), n);
    CHECK(image(commutator_map(tp)) == product_ideal(g, full_space(g), n));
  }
}

TEST_CASE("tensor invariants on catalog pairs", "[tensor][property]") {
  const unsigned seed = 4242;
  INFO("seed " << seed);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);

  std::vector<Pair> pairs = {
      Pair::full(catalog::j1()),
      Pair::full(catalog::j2()),
      Pair::full(catalog::h1()),
      Pair::make(catalog::j2(), span_units(3, {2})),
      Pair::make(catalog::j2(), span_units(3, {1, 2})),
      Pair::make(catalog::h1(), span_units(3, {0, 2})),
      Pair::full(direct_sum(catalog::j1(), catalog::abelian(1))),
      Pair::full(catalog::sl2()),
  };
  for (const auto& p : pairs) {
    Subspace g = full_space(p.g);
    TensorPresentation t = tensor_product(p.g, g, p.n);
    CHECK(t.dim() <= 2 * g.dim() * p.n.dim());
    CHECK(validate(t.algebra).ok());

    // Square elements are central in m*n.
    for (const auto& s : square_generators(t)) {
      for (std::size_t b = 0; b < t.symbol_count(); ++b) {
        Vector e = unit_vector(p.g.field(), t.symbol_count(), b);
        CHECK(is_zero(t.class_of(t.symbol_bracket(s, e))));
        CHECK(is_zero(t.class_of(t.symbol_bracket(e, s))));
      }
    }

    // Brackets do not depend on the chosen representatives.
    std::vector<Vector> rel = t.relations.basis_vectors();
    for (int trial = 0; trial < 10 && !rel.empty(); ++trial) {
      std::size_t s1 = rng() % t.symbol_count();
      std::size_t s2 = rng() % t.symbol_count();
      Vector x = unit_vector(p.g.field(), t.symbol_count(), s1);
      Vector y = unit_vector(p.g.field(), t.symbol_count(), s2);
      Vector x2 = x, y2 = y;
      for (const auto& r : rel) {
        x2 = add(x2, scale(Scalar(p.g.field(), coeff(rng)), r));
        y2 = add(y2, scale(Scalar(p.g.field(), coeff(rng)), r));
      }
      CHECK(t.class_of(t.symbol_bracket(x, y)) == t.class_of(t.symbol_bracket(x2, y2)));
    }

    TensorPresentation e = exterior_product(p.g, g, p.n);
    CHECK(validate(e.algebra).ok());
    CHECK(t.dim() - square_subspace(t).dim() == e.dim());
  }
}

TEST_CASE("trivially acting ideals give the closed form", "[tensor][property]") {
  // The two summands of g1 ⊕ g2 act trivially on each other.
  std::vector<std::pair<LeibnizAlgebra, LeibnizAlgebra>> cases = {
      {catalog::j1(), catalog::j1()},
      {catalog::h1(), catalog::j2()},
      {catalog::abelian(2), catalog::h1()},
  };
  for (const auto& [a, b] : cases) {
    LeibnizAlgebra g = direct_sum(a, b);
    Subspace m = embed_first(full_space(a), b.dim());
    Subspace n = embed_second(full_space(b), a.dim());
    std::size_t abm = a.dim() - derived(a).dim();
    std::size_t abn = b.dim() - derived(b).dim();
    CHECK(tensor_product(g, m, n).dim() == 2 * abm * abn);
  }
  LeibnizAlgebra a3 = catalog::abelian(3);
  CHECK(tensor_product(a3, span_units(3, {0, 1}), span_units(3, {1, 2})).dim() == 2 * 2 * 2);
}

TEST_CASE("exterior kernel matches the chain-complex oracle", "[tensor][oracle]") {
  std::vector<LeibnizAlgebra> algs = {catalog::abelian(1), catalog::abelian(2), catalog::j1(),
                                      catalog::j2(),       catalog::h1(),       catalog::sl2(),
                                      direct_sum(catalog::j1(), catalog::abelian(1)),
                                      direct_sum(catalog::j1(), catalog::j1()),
                                      direct_sum(catalog::j1(), catalog::abelian(2))};
  for (const auto& g : algs) {
    TensorPresentation e = exterior_product(g, full_space(g), full_space(g));
    CHECK(kernel(commutator_map(e)).dim() == oracle::hl2(g));
  }
}

TEST_CASE("induced exterior maps form an exact sequence", "[tensor]") {
  struct Case {
    LeibnizAlgebra g;
    Subspace k;
    Subspace n;
  };
  LeibnizAlgebra h1 = catalog::h1();
  LeibnizAlgebra j2a = direct_sum(catalog::j2(), catalog::abelian(1));
  std::vector<Case> cases = {
      {h1, span_units(3, {2}), full_space(h1)},
      {h1, full_space(h1), full_space(h1)},
      {h1, zero_space(h1), full_space(h1)},
      {j2a, span_units(4, {2}), span_units(4, {2, 3})},
      {j2a, span_units(4, {3}), full_space(j2a)},
  };
  for (const auto& c : cases) {
    ExteriorSequence s = induced_exterior_maps(c.g, c.k, c.n);
    CHECK((s.map2 * s.map1).is_zero());
    CHECK(rank(s.map2) == s.quotient.dim());
    CHECK(image(s.map1) == kernel(s.map2));
  }
  ExteriorSequence same = induced_exterior_maps(h1, full_space(h1), full_space(h1));
  CHECK(same.quotient.dim() == 0);
  CHECK(rank(same.map1) == same.gn.dim());
  ExteriorSequence none = induced_exterior_maps(h1, zero_space(h1), full_space(h1));
  CHECK(none.map1.cols() == 0);
  CHECK(rank(none.map2) == none.gn.dim());
  CHECK(none.quotient.dim() == none.gn.dim());
  CHECK_THROWS_AS(induced_exterior_maps(h1, full_space(h1), span_units(3, {2})), Error);
}

TEST_CASE("direct sum decomposition", "[tensor]") {
  for (std::size_t q1 = 0; q1 <= 2; ++q1) {
    for (std::size_t q2 = 0; q2 <= 2; ++q2) {
      DecompositionReport r =
          direct_sum_decomposition_check(Pair::full(catalog::abelian(q1)), Pair::full(catalog::abelian(q2)));
      CHECK(r.direct == (q1 + q2) * (q1 + q2));
      CHECK(r.b_factor == 2 * q1 * q2);
      CHECK(r.agree());
    }
  }
  DecompositionReport j = direct_sum_decomposition_check(Pair::full(catalog::j1()), Pair::full(catalog::abelian(1)));
  CHECK(j.agree());
  DecompositionReport z = direct_sum_decomposition_check(Pair::full(catalog::h1()), Pair::full(catalog::abelian(0)));
  CHECK(z.b_factor == 0);
  CHECK(z.direct == z.first);
  DecompositionReport rel = direct_sum_decomposition_check(Pair::make(catalog::j2(), span_units(3, {2})),
                                                           Pair::make(catalog::h1(), span_units(3, {0, 2})));
  CHECK(rel.agree());
}
