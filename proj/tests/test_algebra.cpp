#include <random>

#include "catch_amalgamated.hpp"
#include "leibniz/error.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace test_support;

namespace {

std::vector<LeibnizAlgebra> small_catalog() {
  return {catalog::abelian(0), catalog::abelian(1), catalog::abelian(3), catalog::j1(), catalog::j2(),
          catalog::h1(),       catalog::heisenberg(2), catalog::sl2(),     direct_sum(catalog::j1(), catalog::abelian(2)),
          direct_sum(catalog::h1(), catalog::h1())};
}

}  // namespace

TEST_CASE("validate on catalog and a broken table", "[algebra]") {
  for (const auto& g : small_catalog()) {
    CHECK(validate(g).ok());
    CHECK(oracle::leibniz_identity_holds(g));
  }
  LeibnizAlgebra bad(Field::rationals(), {"x", "y"});
  bad.set_bracket(0, 0, vec({0, 1}));
  bad.set_bracket(1, 0, vec({1, 0}));
  ValidationReport r = validate(bad);
  REQUIRE_FALSE(r.ok());
  // On (x,x,x) the identity only asks [x,[x,x]] = [x,y] = 0, which holds;
  // (x,y,x) gives 0 on the left and [y,y] + [x,x] = y on the right.
  bool saw_xxx = false;
  bool saw_xyx = false;
  for (const auto& v : r.violations) {
    saw_xxx = saw_xxx || v.indices == std::vector<std::size_t>{0, 0, 0};
    saw_xyx = saw_xyx || v.indices == std::vector<std::size_t>{0, 1, 0};
  }
  CHECK_FALSE(saw_xxx);
  CHECK(saw_xyx);
  CHECK_FALSE(oracle::leibniz_identity_holds(bad));
}

TEST_CASE("bracket examples", "[algebra]") {
  LeibnizAlgebra j1 = catalog::j1();
  CHECK(j1.bracket(vec({1, 0}), vec({1, 0})) == vec({0, 1}));
  LeibnizAlgebra h1 = catalog::h1();
  CHECK(h1.bracket(vec({0, 1, 0}), vec({1, 0, 0})) == vec({0, 0, -1}));
  CHECK(h1.bracket(vec({0, 0, 0}), vec({1, 2, 3})) == vec({0, 0, 0}));
  CHECK_THROWS_AS(h1.bracket(vec({1}), vec({1, 0, 0})), Error);

  // Bilinearity on random vectors.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  LeibnizAlgebra g = direct_sum(catalog::j2(), catalog::sl2());
  for (int t = 0; t < 20; ++t) {
    Vector u, v, w;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      u.emplace_back(g.field(), d(rng));
      v.emplace_back(g.field(), d(rng));
      w.emplace_back(g.field(), d(rng));
    }
    CHECK(g.bracket(add(u, w), v) == add(g.bracket(u, v), g.bracket(w, v)));
    CHECK(g.bracket(u, add(v, w)) == add(g.bracket(u, v), g.bracket(u, w)));
  }
}

TEST_CASE("product ideal, center and series", "[algebra]") {
  CHECK(derived(catalog::j1()) == span_units(2, {1}));
  CHECK(derived(catalog::abelian(4)).is_zero());
  LeibnizAlgebra h1 = catalog::h1();
  CHECK(product_ideal(h1, full_space(h1), span_units(3, {2})).is_zero());

  CHECK(center(catalog::abelian(3)).is_full());
  CHECK(center(h1) == span_units(3, {2}));
  Pair p = Pair::make(catalog::j2(), span_units(3, {2}));
  CHECK(center_of_pair(p) == span_units(3, {2}));

  auto abelian_series = lower_central_series(catalog::abelian(3));
  REQUIRE(abelian_series.size() == 2);
  CHECK(abelian_series[1].is_zero());
  auto j2_series = lower_central_series(catalog::j2());
  REQUIRE(j2_series.size() == 3);
  CHECK(j2_series[1] == span_units(3, {2}));
  CHECK(j2_series[2].is_zero());

  LeibnizAlgebra solvable(Field::rationals(), {"x", "y"});
  solvable.set_bracket(0, 1, vec({0, 1}));
  solvable.set_bracket(1, 0, vec({0, -1}));
  REQUIRE(validate(solvable).ok());
  CHECK_FALSE(is_nilpotent(solvable));
  CHECK(lower_central_series(solvable).back() == span_units(2, {1}));
}

TEST_CASE("ideal properties", "[algebra][property]") {
  for (const auto& g : small_catalog()) {
    Subspace g2 = derived(g);
    CHECK(g2 == product_ideal(g, full_space(g), full_space(g)));
    CHECK(is_ideal(g, g2));
    CHECK(is_ideal(g, center(g)));
    CHECK(oracle::center_dim(g) == center(g).dim());
    if (is_nilpotent(g)) CHECK(minimal_generator_count(g) == g.dim() - g2.dim());
  }
}

TEST_CASE("quotients", "[algebra]") {
  QuotientAlgebra q1 = quotient_algebra(catalog::j1(), span_units(2, {1}));
  CHECK(q1.algebra.dim() == 1);
  CHECK(is_abelian(q1.algebra));
  QuotientAlgebra q2 = quotient_algebra(catalog::h1(), span_units(3, {2}));
  CHECK(q2.algebra.dim() == 2);
  CHECK(is_abelian(q2.algebra));
  LeibnizAlgebra sl2 = catalog::sl2();
  QuotientAlgebra q3 = quotient_algebra(sl2, zero_space(sl2));
  CHECK(q3.algebra == sl2);
  try {
    quotient_algebra(catalog::h1(), span_units(3, {0}));
    FAIL("expected NotAnIdeal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnIdeal);
  }

  // Projection is a homomorphism and splits the section.
  LeibnizAlgebra g = direct_sum(catalog::h1(), catalog::j1());
  Subspace n = sum(span_units(5, {2}), span_units(5, {4}));
  QuotientAlgebra q = quotient_algebra(g, n);
  CHECK(validate(q.algebra).ok());
  CHECK(is_homomorphism(g, q.algebra, q.basis.projection));
  CHECK(q.basis.projection * q.basis.section == Matrix::identity(g.field(), q.algebra.dim()));
}

TEST_CASE("direct sums", "[algebra]") {
  LeibnizAlgebra a5 = direct_sum(catalog::abelian(2), catalog::abelian(3));
  CHECK(a5.dim() == 5);
  CHECK(is_abelian(a5));
  for (std::size_t q = 0; q <= 3; ++q) {
    LeibnizAlgebra g = direct_sum(catalog::j1(), catalog::abelian(q));
    CHECK(g.dim() == q + 2);
    CHECK(derived(g).dim() == 1);
    CHECK(validate(g).ok());
  }
  LeibnizAlgebra hh = direct_sum(catalog::h1(), catalog::h1());
  CHECK(hh.dim() == 6);
  CHECK(derived(hh).dim() == 2);
  CHECK(hh.labels()[0] == "x_1");

  Pair p = direct_sum_pair(Pair::make(catalog::j2(), span_units(3, {2})), Pair::full(catalog::abelian(1)));
  CHECK(p.n.dim() == 2);
  CHECK(is_ideal(p.g, p.n));
  CHECK_THROWS_AS(direct_sum(catalog::j1(), catalog::abelian(1, Field::prime(3))), Error);
}

TEST_CASE("catalog facts", "[algebra]") {
  LeibnizAlgebra j1 = catalog::j1();
  CHECK(j1.dim() == 2);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) nonzero += j1.basis_bracket(i, j).size();
  }
  CHECK(nonzero == 1);
  CHECK(catalog::heisenberg(2).dim() == 5);
  CHECK(catalog::abelian(0).dim() == 0);
  CHECK(catalog::heisenberg(1) == catalog::h1());
  CHECK(is_lie(catalog::abelian(3)));
  CHECK(is_lie(catalog::heisenberg(3)));
  CHECK_FALSE(is_lie(catalog::j1()));
  CHECK_FALSE(is_lie(catalog::j2()));
  try {
    catalog::by_name("J9");
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
  }

  CHECK(minimal_generator_count(catalog::abelian(4)) == 4);
  CHECK(minimal_generator_count(catalog::h1()) == 2);
  CHECK(minimal_generator_count(direct_sum(catalog::j1(), catalog::abelian(2))) == 3);
  CHECK_THROWS_AS(minimal_generator_count(catalog::sl2()), Error);

  CHECK(is_extra_special(catalog::j1()));
  CHECK(is_extra_special(catalog::j2()));
  CHECK(is_extra_special(catalog::h1()));
  CHECK_FALSE(is_extra_special(catalog::abelian(2)));
  CHECK_FALSE(is_extra_special(direct_sum(catalog::h1(), catalog::abelian(1))));
}

TEST_CASE("change of basis and restriction", "[algebra]") {
  LeibnizAlgebra g = catalog::j2();
  Matrix t = Matrix::from_ints(g.field(), {{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
  LeibnizAlgebra h = change_basis(g, t);
  CHECK(validate(h).ok());
  CHECK(is_homomorphism(h, g, t));

  LeibnizAlgebra ha = direct_sum(catalog::h1(), catalog::abelian(2));
  LeibnizAlgebra sub = restrict_to(ha, span_units(5, {0, 1, 2}));
  CHECK(sub == catalog::h1());
  CHECK_THROWS_AS(restrict_to(catalog::h1(), span_units(3, {0, 1})), Error);
}
