#pragma once

#include <vector>

#include "leibniz/homology.hpp"

namespace leibniz {

/// δ: m -> g with an action of g on m. left[i] is the matrix of
/// m -> ^{e_i} m and right[i] that of m -> m^{e_i}, for e_i in the basis of g.
struct CrossedModule {
  LeibnizAlgebra m;
  LeibnizAlgebra g;
  Matrix delta;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  Vector act_left(const Vector& x, const Vector& v) const;
  Vector act_right(const Vector& v, const Vector& x) const;
};

/// n ↪ g with bracket actions, m in the rref coordinates of n.
CrossedModule inclusion_crossed_module(const LeibnizAlgebra& g, const Subspace& n);
CrossedModule identity_crossed_module(const LeibnizAlgebra& g);
/// Action of g on m through lifts: ^x m = [s(x), m], m^x = [m, s(x)] for a
/// section s of a surjective δ. Throws InvalidInput unless δ is onto.
CrossedModule crossed_module_from_lifts(const LeibnizAlgebra& m, const LeibnizAlgebra& g, const Matrix& delta);
/// The same crossed module over g' with g -> g' given by the invertible t.
CrossedModule transport(const CrossedModule& cm, const LeibnizAlgebra& target, const Matrix& t);

/// Leibniz identity on m and g, δ a homomorphism, the six action axioms,
/// δ-equivariance and the two Peiffer identities, all on basis tuples.
ValidationReport validate_crossed_module(const CrossedModule& cm);

/// Z(g,m) = {m : ^x m = m^x = 0 for all x}.
Subspace relative_center(const CrossedModule& cm);
/// [g,m] = span{^x m, m^x}.
Subspace action_commutator(const CrossedModule& cm);

struct StemCoverCandidate {
  CrossedModule cm;
  Pair target;
};

/// Axioms "image", "kernel dimension" and "kernel placement", reported
/// separately.
ValidationReport validate_stem_cover(const StemCoverCandidate& c);

/// n ∔ (n∧n) ∔ (n*(g/n)) -> g for abelian g. Throws NotAbelian.
StemCoverCandidate abelian_pair_cover(const Pair& p);

/// g ⊕ H with [e_i, e_j] = e_[e_i,e_j] + φ(e_i⊗e_j), where φ kills im ∂_3 and
/// maps ker ∂_2 onto H ≅ HL_2(g). A stem cover of (g, g).
StemCoverCandidate cocycle_cover(const LeibnizAlgebra& g);

/// The zero crossed module 0 -> g over (g, 0).
StemCoverCandidate zero_cover(const LeibnizAlgebra& g);

enum class CoverVariant {
  /// Bracket and actions chosen so that the result is a crossed module.
  Corrected,
  /// The formulas exactly as displayed; fails the Peiffer identities.
  Printed,
};

struct DirectSumCover {
  StemCoverCandidate cover;
  BFactor b;
  /// m = m1 ∔ m2 ∔ B; offsets of the blocks in m.
  std::size_t m1_dim = 0;
  std::size_t m2_dim = 0;
};

/// m1 ∔ m2 ∔ B over (g1⊕g2, n1⊕n2), B = ((m̄1*ḡ2) ⊕ (ḡ1*m̄2))/𝔞 with
/// m̄i = mi/[gi,mi] and ḡi = gi/gi². Throws FieldMismatch.
DirectSumCover direct_sum_cover(const StemCoverCandidate& c1, const StemCoverCandidate& c2,
                                CoverVariant variant = CoverVariant::Corrected);

/// direct_sum_cover for covers of full pairs. Throws InvalidInput when an
/// input is not over a full pair.
DirectSumCover cover_of_direct_sum(const StemCoverCandidate& c1, const StemCoverCandidate& c2);

/// m1 ∔ m2 ∔ (m1^ab ⊗ m2^ab ⊕ m2^ab ⊗ m1^ab) with third bracket component
/// m̄1'*m̄2 - m̄1*m̄2' and actions through lifts, as displayed for covers of
/// full pairs. Throws InvalidInput when an input is not over a full pair.
StemCoverCandidate cover_of_direct_sum_printed(const StemCoverCandidate& c1, const StemCoverCandidate& c2);

struct AbelianIdentity {
  std::size_t lhs = 0;  // dim((n∧n) ∔ (n*(g/n)))
  std::size_t rhs = 0;  // dim(g∧n)
  bool holds() const { return lhs == rhs; }
};

/// Both sides for a k-dimensional ideal of a(q).
AbelianIdentity abelian_cover_identity(std::size_t q, std::size_t k);

}  // namespace leibniz
