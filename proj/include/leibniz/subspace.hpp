#pragma once

#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Subspace of F^n held as its canonical rref basis. Two subspaces are equal
/// iff their bases agree entry-wise.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of F^ambient.
  Subspace(Field field, std::size_t ambient);

  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.dense_row(i); }
  std::vector<Vector> basis_vectors() const;

  /// v minus its component along the pivot columns; zero iff v lies here.
  Vector residue(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the rref basis. Throws SubspaceNotContained.
  Vector coordinates(const Vector& v) const;
  /// Inverse of coordinates().
  Vector from_coordinates(const Vector& coords) const;
  /// Columns are the basis vectors (ambient x dim).
  Matrix inclusion() const;

  bool operator==(const Subspace& rhs) const { return basis_ == rhs.basis_; }
  bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

 private:
  explicit Subspace(Echelon e) : basis_(std::move(e.reduced)), pivots_(std::move(e.pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
/// Column space of m, as a subspace of F^rows.
Subspace image(const Matrix& m);
/// Image of a subspace of F^cols under m.
Subspace image(const Matrix& m, const Subspace& s);
/// {v in F^cols : m v in target}.
Subspace preimage(const Matrix& m, const Subspace& target);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// b/a for a ⊆ b. The complement is spanned by b reduced modulo a's pivot
/// columns (rref), so for b = F^n it is the standard vectors at a's
/// non-pivot columns.
struct QuotientBasis {
  Subspace complement;
  /// (dim b - dim a) x ambient; kills a, identity on the complement basis.
  Matrix projection;
  /// ambient x (dim b - dim a); columns are the complement basis.
  Matrix section;
  std::size_t dim() const { return complement.dim(); }
};

/// Throws SubspaceNotContained when a ⊄ b.
QuotientBasis quotient_basis(const Subspace& a, const Subspace& b);

}  // namespace leibniz
