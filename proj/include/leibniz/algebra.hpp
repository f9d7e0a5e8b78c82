#pragma once

#include <string>
#include <vector>

#include "leibniz/report.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// Finite-dimensional right Leibniz algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra() = default;
  /// Abelian algebra on the given basis names.
  LeibnizAlgebra(Field field, std::vector<std::string> labels);
  /// Abelian algebra with labels e0, e1, ...
  LeibnizAlgebra(Field field, std::size_t dim);

  Field field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sets [e_i, e_j]; the value is in basis coordinates.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  void set_bracket(std::size_t i, std::size_t j, SparseRow value);
  /// [e_i, e_j] as a sparse vector.
  const SparseRow& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;

  Vector bracket(const Vector& u, const Vector& v) const;
  /// Matrix of v -> [u, v].
  Matrix left_multiplication(const Vector& u) const;
  /// Matrix of v -> [v, u].
  Matrix right_multiplication(const Vector& u) const;

  bool operator==(const LeibnizAlgebra& rhs) const;

 private:
  void check_index(std::size_t i, std::size_t j) const;

  Field field_;
  std::vector<std::string> labels_;
  std::vector<SparseRow> table_;
};

/// Basis triples (i,j,k) violating [[x,y],z] = [[x,z],y] + [x,[y,z]].
ValidationReport validate(const LeibnizAlgebra& alg);

Vector basis_vector(const LeibnizAlgebra& alg, std::size_t i);
/// "2x - 1/3z" style rendering over the basis labels; "0" for zero.
std::string format_element(const LeibnizAlgebra& alg, const Vector& v);
/// "span{...}" over the rref basis.
std::string format_subspace(const LeibnizAlgebra& alg, const Subspace& s);
Subspace full_space(const LeibnizAlgebra& alg);
Subspace zero_space(const LeibnizAlgebra& alg);

/// span{[u,v], [v,u] : u in a, v in b}.
Subspace product_ideal(const LeibnizAlgebra& alg, const Subspace& a, const Subspace& b);
/// g^2 = [g, g].
Subspace derived(const LeibnizAlgebra& alg);
Subspace center(const LeibnizAlgebra& alg);

bool is_ideal(const LeibnizAlgebra& alg, const Subspace& s);
bool is_subalgebra(const LeibnizAlgebra& alg, const Subspace& s);
bool is_abelian(const LeibnizAlgebra& alg);
/// Antisymmetry on basis pairs, including [e_i, e_i] = 0.
bool is_lie(const LeibnizAlgebra& alg);

/// g, g^2, [g^2,g], ... until the terms stop shrinking.
std::vector<Subspace> lower_central_series(const LeibnizAlgebra& alg);
bool is_nilpotent(const LeibnizAlgebra& alg);
/// dim(g/g^2). Throws NotNilpotent.
std::size_t minimal_generator_count(const LeibnizAlgebra& alg);
/// dim Z(g) = dim g^2 = 1. Throws NotNilpotent.
bool is_extra_special(const LeibnizAlgebra& alg);

/// Whether the linear map f: a -> b (b.dim x a.dim) preserves brackets.
bool is_homomorphism(const LeibnizAlgebra& a, const LeibnizAlgebra& b, const Matrix& f);

struct QuotientAlgebra {
  LeibnizAlgebra algebra;
  QuotientBasis basis;
};

/// g/n on the canonical coset representatives. Throws NotAnIdeal.
QuotientAlgebra quotient_algebra(const LeibnizAlgebra& alg, const Subspace& n);

/// Structure on a subalgebra in the coordinates of its rref basis.
/// Throws InvalidInput if s is not closed under the bracket.
LeibnizAlgebra restrict_to(const LeibnizAlgebra& alg, const Subspace& s);

/// The same algebra in the basis given by the columns of t (invertible).
LeibnizAlgebra change_basis(const LeibnizAlgebra& alg, const Matrix& t);

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

/// An algebra with a distinguished two-sided ideal.
struct Pair {
  LeibnizAlgebra g;
  Subspace n;

  /// Throws NotAnIdeal or LengthMismatch.
  static Pair make(LeibnizAlgebra g, Subspace n);
  static Pair full(LeibnizAlgebra g);
};

/// Z(g,n) = Z(g) ∩ n.
Subspace center_of_pair(const Pair& p);
Pair direct_sum_pair(const Pair& p1, const Pair& p2);
/// Embeds a subspace of the first (second) summand into the direct sum.
Subspace embed_first(const Subspace& s, std::size_t other_dim);
Subspace embed_second(const Subspace& s, std::size_t other_dim);

namespace catalog {

LeibnizAlgebra abelian(std::size_t q, Field field = Field::rationals());
/// <x,y | [x,x]=y>.
LeibnizAlgebra j1(Field field = Field::rationals());
/// <x,y,z | [x,y]=z>.
LeibnizAlgebra j2(Field field = Field::rationals());
/// <x,y,z | [x,y]=z=-[y,x]>.
LeibnizAlgebra h1(Field field = Field::rationals());
/// Heisenberg Lie algebra of dimension 2k+1.
LeibnizAlgebra heisenberg(std::size_t k, Field field = Field::rationals());
/// sl2 with [h,e]=2e, [h,f]=-2f, [e,f]=h.
LeibnizAlgebra sl2(Field field = Field::rationals());

/// Lookup by name: abelian, J1, J2, H1, heisenberg, sl2. Throws UnknownName.
LeibnizAlgebra by_name(const std::string& name, std::size_t param = 0, Field field = Field::rationals());

}  // namespace catalog

}  // namespace leibniz
