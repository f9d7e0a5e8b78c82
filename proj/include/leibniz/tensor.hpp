#pragma once

#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class TensorKind { Tensor, Exterior };

/// Generator of m*n: side A is m_i * n_j, side B is n_i * m_j, with indices
/// into the rref bases of m and n.
struct Symbol {
  char side;
  std::size_t i;
  std::size_t j;
};

/// m*n or m∧n for ideals m, n of g, presented on the 2·dim(m)·dim(n)
/// generator symbols. Symbol A(i,j) sits at i·dn + j, B(i,j) at
/// dm·dn + i·dm + j.
struct TensorPresentation {
  TensorKind kind = TensorKind::Tensor;
  LeibnizAlgebra g;
  Subspace m;
  Subspace n;
  std::vector<Vector> m_basis;
  std::vector<Vector> n_basis;
  /// Relations in symbol coordinates (for the exterior, squares included).
  Subspace relations;
  /// Symbol space modulo relations; quotient coordinates are the symbols
  /// at the non-pivot columns of the relation rref.
  QuotientBasis quotient;
  /// Induced bracket on quotient coordinates.
  LeibnizAlgebra algebra;
  /// Symbol-level commutator map into g (g.dim x symbol_count).
  Matrix symbol_commutator;

  std::size_t dm() const { return m_basis.size(); }
  std::size_t dn() const { return n_basis.size(); }
  std::size_t symbol_count() const { return 2 * dm() * dn(); }
  std::size_t dim() const { return quotient.dim(); }

  std::size_t a_index(std::size_t i, std::size_t j) const { return i * dn() + j; }
  std::size_t b_index(std::size_t i, std::size_t j) const { return dm() * dn() + i * dm() + j; }
  Symbol symbol(std::size_t index) const;
  std::string symbol_name(std::size_t index) const;

  /// u * v with u in m, v in n (ambient coordinates), as a symbol vector.
  Vector a_element(const Vector& u, const Vector& v) const;
  /// u * v with u in n, v in m.
  Vector b_element(const Vector& u, const Vector& v) const;
  /// Symbol-level bracket [x, y] = A(c(x), c(y)).
  Vector symbol_bracket(const Vector& x, const Vector& y) const;
  /// Class of a symbol vector in quotient coordinates.
  Vector class_of(const Vector& symbols) const { return quotient.projection.apply(symbols); }
};

/// Throws NotAnIdeal; BracketNotWellDefined and RelationNotKilled guard
/// against internal inconsistencies.
TensorPresentation tensor_product(const LeibnizAlgebra& g, const Subspace& m, const Subspace& n);
TensorPresentation exterior_product(const LeibnizAlgebra& g, const Subspace& m, const Subspace& n);

/// Square generators A(a,b) - B(a,b), a, b in a basis of m ∩ n, in symbol
/// coordinates.
std::vector<Vector> square_generators(const TensorPresentation& tp);
/// The square in the quotient coordinates of a tensor presentation.
Subspace square_subspace(const TensorPresentation& tp);

/// Class of x*n -> [x,n], n*x -> [n,x], in g coordinates (g.dim x tp.dim).
/// Throws RelationNotKilled.
Matrix commutator_map(const TensorPresentation& tp);

struct ExteriorSequence {
  TensorPresentation gk;
  TensorPresentation gn;
  TensorPresentation quotient;
  QuotientAlgebra g_mod_k;
  /// gk -> gn.
  Matrix map1;
  /// gn -> (g/k)∧(n/k).
  Matrix map2;
};

/// g∧k -> g∧n -> (g/k)∧(n/k) for ideals k ⊆ n. Throws SubspaceNotContained.
ExteriorSequence induced_exterior_maps(const LeibnizAlgebra& g, const Subspace& k, const Subspace& n);

/// ((n̄1*ḡ2) ⊕ (ḡ1*n̄2))/𝔞 for trivially acting factors, in block
/// coordinates (n̄1⊗ḡ2) ⊕ (ḡ2⊗n̄1) ⊕ (ḡ1⊗n̄2) ⊕ (n̄2⊗ḡ1).
struct BFactor {
  std::size_t nbar1 = 0;
  std::size_t gbar1 = 0;
  std::size_t nbar2 = 0;
  std::size_t gbar2 = 0;
  Subspace a;
  QuotientBasis quotient;

  std::size_t space_dim() const { return 2 * (nbar1 * gbar2 + gbar1 * nbar2); }
  std::size_t dim() const { return space_dim() - a.dim(); }
  std::size_t v1(std::size_t i, std::size_t j) const { return i * gbar2 + j; }
  std::size_t v2(std::size_t i, std::size_t j) const { return nbar1 * gbar2 + i * nbar1 + j; }
  std::size_t v3(std::size_t i, std::size_t j) const { return 2 * nbar1 * gbar2 + i * nbar2 + j; }
  std::size_t v4(std::size_t i, std::size_t j) const { return 2 * nbar1 * gbar2 + gbar1 * nbar2 + i * gbar1 + j; }
};

/// Builds the B-factor from two spanning families. Column s of bar_i gives
/// the class in n̄_i of the s-th spanning element, column s of iota_i its
/// image in ḡ_i. 𝔞 is spanned by V1(x1⊗y2) - V3(y1⊗x2) and
/// V2(y2⊗x1) - V4(x2⊗y1).
BFactor b_factor(const Matrix& bar1, const Matrix& iota1, const Matrix& bar2, const Matrix& iota2);

/// The B-factor of a direct sum of pairs, with n̄_i = n_i/[g_i,n_i] and
/// ḡ_i = g_i/g_i^2.
BFactor direct_sum_b_factor(const Pair& p1, const Pair& p2);

struct DecompositionReport {
  std::size_t direct = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t b_factor = 0;
  bool agree() const { return direct == first + second + b_factor; }
};

/// dim((g1⊕g2)∧(n1⊕n2)) computed directly and as dim(g1∧n1) + dim(g2∧n2) + dim B.
DecompositionReport direct_sum_decomposition_check(const Pair& p1, const Pair& p2);

}  // namespace leibniz
