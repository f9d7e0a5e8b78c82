#include "leibniz/subspace.hpp"

#include <algorithm>

#include "leibniz/error.hpp"

namespace leibniz {

Subspace::Subspace(Field field, std::size_t ambient) : basis_(field, 0, ambient) {}

Subspace Subspace::full(Field field, std::size_t ambient) {
  return Subspace(echelon(Matrix::identity(field, ambient)));
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  return Subspace(echelon(Matrix::from_rows(field, ambient, vectors)));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(echelon(m)); }

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

Vector Subspace::residue(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::LengthMismatch, "vector length vs ambient");
  Vector out = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (const auto& e : basis_.row(i)) out[e.col] -= c * e.value;
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return leibniz::is_zero(residue(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorCode::SubspaceNotContained, "vector outside subspace");
  Vector out;
  out.reserve(dim());
  for (std::size_t p : pivots_) out.push_back(v[p]);
  return out;
}

Vector Subspace::from_coordinates(const Vector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorCode::LengthMismatch, "coordinate length");
  Vector out = zero_vector(field(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    for (const auto& e : basis_.row(i)) out[e.col] += coords[i] * e.value;
  }
  return out;
}

Matrix Subspace::inclusion() const { return basis_.transpose(); }

Subspace kernel(const Matrix& m) {
  Echelon e = echelon(m);
  std::vector<std::size_t> pivot_row(m.cols(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) pivot_row[e.pivots[i]] = i;
  // Free column f gives e_f - sum_i R[i][f] e_{p_i}.
  std::vector<SparseRow> vecs(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot_row[f] == static_cast<std::size_t>(-1)) vecs[f].push_back({f, Scalar(m.field(), 1)});
  }
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    for (const auto& ent : e.reduced.row(i)) {
      if (ent.col == e.pivots[i]) continue;
      vecs[ent.col].push_back({e.pivots[i], -ent.value});
    }
  }
  std::vector<SparseRow> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot_row[f] != static_cast<std::size_t>(-1)) continue;
    SparseRow& r = vecs[f];
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    rows.push_back(std::move(r));
  }
  return Subspace::row_space(Matrix::from_sparse(m.field(), m.cols(), std::move(rows)));
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace image(const Matrix& m, const Subspace& s) {
  if (s.ambient_dim() != m.cols()) throw Error(ErrorCode::LengthMismatch, "image of subspace");
  return image(m * s.inclusion());
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (target.ambient_dim() != m.rows()) throw Error(ErrorCode::LengthMismatch, "preimage target");
  QuotientBasis q = quotient_basis(target, Subspace::full(m.field(), m.rows()));
  return kernel(q.projection * m);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::LengthMismatch, "sum of subspaces");
  return Subspace::row_space(Matrix::vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::LengthMismatch, "intersection");
  std::size_t n = a.ambient_dim();
  Matrix left = Matrix::hstack(a.basis(), a.basis());
  Matrix right = Matrix::hstack(b.basis(), Matrix(a.field(), b.dim(), n));
  Echelon e = echelon(Matrix::vstack(left, right));
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] < n) continue;
    SparseRow r;
    for (const auto& ent : e.reduced.row(i)) r.push_back({ent.col - n, ent.value});
    rows.push_back(std::move(r));
  }
  return Subspace::row_space(Matrix::from_sparse(a.field(), n, std::move(rows)));
}

QuotientBasis quotient_basis(const Subspace& a, const Subspace& b) {
  if (!b.contains(a)) throw Error(ErrorCode::SubspaceNotContained, "quotient needs a ⊆ b");
  std::size_t n = a.ambient_dim();
  std::vector<Vector> reduced;
  for (std::size_t i = 0; i < b.dim(); ++i) reduced.push_back(a.residue(b.basis_vector(i)));
  QuotientBasis out;
  out.complement = Subspace::span(a.field(), n, reduced);
  const auto& pc = out.complement.pivots();
  const auto& pa = a.pivots();
  out.projection = Matrix(a.field(), pc.size(), n);
  for (std::size_t j = 0; j < pc.size(); ++j) {
    SparseRow row;
    row.push_back({pc[j], Scalar(a.field(), 1)});
    for (std::size_t i = 0; i < pa.size(); ++i) {
      Scalar c = a.basis().at(i, pc[j]);
      if (!c.is_zero()) row.push_back({pa[i], -c});
    }
    std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
    for (const auto& ent : row) out.projection.set(j, ent.col, ent.value);
  }
  out.section = out.complement.inclusion();
  return out;
}

}  // namespace leibniz
