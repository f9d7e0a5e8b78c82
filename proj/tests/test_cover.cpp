#include "catch_amalgamated.hpp"
#include "leibniz/cover.hpp"
#include "leibniz/error.hpp"
#include "leibniz/sweep.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace test_support;

namespace {

std::string violations(const ValidationReport& r) {
  std::string out;
  for (const auto& v : r.violations) out += v.axiom + "; ";
  return out;
}

bool has_axiom(const ValidationReport& r, const std::string& prefix) {
  for (const auto& v : r.violations) {
    if (v.axiom.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

std::size_t kernel_dim(const StemCoverCandidate& c) { return kernel(c.cm.delta).dim(); }

void require_stem_cover(const StemCoverCandidate& c) {
  ValidationReport cm = validate_crossed_module(c.cm);
  INFO(violations(cm));
  CHECK(cm.ok());
  ValidationReport sc = validate_stem_cover(c);
  INFO(violations(sc));
  CHECK(sc.ok());
  CHECK(kernel_dim(c) == oracle::hl2(c.target.g, c.target.n));
}

StemCoverCandidate abelian_cover(std::size_t q, std::size_t k) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(unit_vector(Field::rationals(), q, i));
  return abelian_pair_cover(Pair::make(catalog::abelian(q), Subspace::span(Field::rationals(), q, gens)));
}

}  // namespace

TEST_CASE("inclusions are crossed modules", "[cover]") {
  for (const auto& [name, p] : catalog_pairs(4)) {
    INFO(name);
    ValidationReport r = validate_crossed_module(inclusion_crossed_module(p.g, p.n));
    INFO(violations(r));
    CHECK(r.ok());
  }
  CHECK(validate_crossed_module(identity_crossed_module(catalog::sl2())).ok());
}

TEST_CASE("a rescaled boundary breaks the Peiffer identities", "[cover]") {
  CrossedModule cm = identity_crossed_module(catalog::j1());
  cm.delta = cm.delta.scaled(Scalar(Field::rationals(), 2));
  ValidationReport r = validate_crossed_module(cm);
  CHECK_FALSE(r.ok());
  CHECK(has_axiom(r, "Peiffer"));
}

TEST_CASE("relative centre and action commutator", "[cover]") {
  LeibnizAlgebra h = catalog::h1();
  CrossedModule cm = identity_crossed_module(h);
  CHECK(relative_center(cm) == center(h));
  CHECK(action_commutator(cm) == derived(h));
}

TEST_CASE("covers of abelian pairs", "[cover]") {
  StemCoverCandidate c21 = abelian_cover(2, 1);
  CHECK(kernel_dim(c21) == 3);
  require_stem_cover(c21);
  StemCoverCandidate c11 = abelian_cover(1, 1);
  CHECK(kernel_dim(c11) == 1);
  require_stem_cover(c11);
  StemCoverCandidate c32 = abelian_cover(3, 2);
  CHECK(kernel_dim(c32) == 8);
  require_stem_cover(c32);
  for (std::size_t q = 0; q <= 3; ++q) {
    for (std::size_t k = 0; k <= q; ++k) {
      INFO("q=" << q << " k=" << k);
      StemCoverCandidate c = abelian_cover(q, k);
      CHECK(kernel_dim(c) == k * k + 2 * k * (q - k));
      require_stem_cover(c);
    }
  }
  CHECK_THROWS_AS(abelian_pair_cover(Pair::full(catalog::j1())), Error);
}

TEST_CASE("abelian cover identity", "[cover]") {
  for (std::size_t q = 0; q <= 3; ++q) {
    for (std::size_t k = 0; k <= q; ++k) {
      INFO("q=" << q << " k=" << k);
      AbelianIdentity id = abelian_cover_identity(q, k);
      CHECK(id.holds());
      CHECK(id.rhs == k * k + 2 * k * (q - k));
    }
  }
}

TEST_CASE("cocycle covers", "[cover]") {
  for (const auto& [name, g] : catalog_algebras(3)) {
    INFO(name);
    require_stem_cover(cocycle_cover(g));
  }
  StemCoverCandidate s = cocycle_cover(catalog::sl2());
  CHECK(kernel_dim(s) == 0);
}

TEST_CASE("zero cover", "[cover]") {
  StemCoverCandidate z = zero_cover(catalog::j2());
  require_stem_cover(z);
  CHECK(z.cm.m.dim() == 0);
}

TEST_CASE("covers of direct sums", "[cover]") {
  DirectSumCover a = cover_of_direct_sum(abelian_cover(1, 1), abelian_cover(1, 1));
  CHECK(kernel_dim(a.cover) == 4);
  CHECK(a.b.dim() == 2);
  require_stem_cover(a.cover);

  DirectSumCover jj = cover_of_direct_sum(cocycle_cover(catalog::j1()), cocycle_cover(catalog::j1()));
  CHECK(kernel_dim(jj.cover) == 4);
  require_stem_cover(jj.cover);

  DirectSumCover perfect = cover_of_direct_sum(cocycle_cover(catalog::sl2()), cocycle_cover(catalog::j2()));
  CHECK(perfect.b.dim() == 0);
  require_stem_cover(perfect.cover);

  // Pair covers: abelian pair with a non-abelian full pair, and a zero cover.
  DirectSumCover mixed = direct_sum_cover(abelian_cover(2, 1), cocycle_cover(catalog::h1()));
  require_stem_cover(mixed.cover);
  DirectSumCover with_zero = direct_sum_cover(zero_cover(catalog::j1()), abelian_cover(2, 2));
  require_stem_cover(with_zero.cover);

  CHECK_THROWS_AS(cover_of_direct_sum(abelian_cover(2, 1), abelian_cover(1, 1)), Error);
}

TEST_CASE("B acts and is acted on trivially", "[cover]") {
  DirectSumCover d = cover_of_direct_sum(cocycle_cover(catalog::j1()), abelian_cover(2, 2));
  const CrossedModule& cm = d.cover.cm;
  const std::size_t start = d.m1_dim + d.m2_dim;
  REQUIRE(d.b.dim() > 0);
  for (std::size_t s = 0; s < d.b.dim(); ++s) {
    Vector b = basis_vector(cm.m, start + s);
    for (std::size_t i = 0; i < cm.m.dim(); ++i) {
      CHECK(is_zero(cm.m.bracket(b, basis_vector(cm.m, i))));
      CHECK(is_zero(cm.m.bracket(basis_vector(cm.m, i), b)));
    }
    for (std::size_t x = 0; x < cm.g.dim(); ++x) {
      CHECK(is_zero(cm.left[x].apply(b)));
      CHECK(is_zero(cm.right[x].apply(b)));
    }
  }
}

TEST_CASE("the displayed direct sum formulas", "[cover]") {
  DirectSumCover printed =
      direct_sum_cover(abelian_cover(1, 1), abelian_cover(1, 1), CoverVariant::Printed);
  ValidationReport r = validate_crossed_module(printed.cover.cm);
  CHECK_FALSE(r.ok());
  CHECK(has_axiom(r, "Peiffer"));

  StemCoverCandidate full = cover_of_direct_sum_printed(cocycle_cover(catalog::j1()), cocycle_cover(catalog::j1()));
  ValidationReport placement = validate_stem_cover(full);
  CHECK(has_axiom(placement, "kernel placement"));
}

TEST_CASE("direct sums over the cover corpus", "[cover][property]") {
  std::vector<std::pair<std::string, StemCoverCandidate>> corpus = {
      {"a(1,1)", abelian_cover(1, 1)},   {"a(2,1)", abelian_cover(2, 1)}, {"a(2,2)", abelian_cover(2, 2)},
      {"a(3,1)", abelian_cover(3, 1)},   {"J1", cocycle_cover(catalog::j1())}, {"J2", cocycle_cover(catalog::j2())},
      {"H1", cocycle_cover(catalog::h1())}, {"sl2", cocycle_cover(catalog::sl2())}, {"0->J1", zero_cover(catalog::j1())},
      {"0->a(2)", zero_cover(catalog::abelian(2))},
  };
  for (const auto& [n1, c1] : corpus) {
    for (const auto& [n2, c2] : corpus) {
      if (c1.cm.m.dim() > 6 || c2.cm.m.dim() > 6) continue;
      INFO(n1 << " + " << n2);
      DirectSumCover d = direct_sum_cover(c1, c2);
      require_stem_cover(d.cover);
      CHECK(kernel_dim(d.cover) == kernel_dim(c1) + kernel_dim(c2) + d.b.dim());
      CHECK(d.b.dim() == direct_sum_b_factor(c1.target, c2.target).dim());
    }
  }
}
