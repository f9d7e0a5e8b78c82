#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

struct Entry {
  std::size_t col;
  Scalar value;
};

/// Sparse row: entries sorted by column, no explicit zeros.
using SparseRow = std::vector<Entry>;

SparseRow sparse_from_dense(const Vector& v);
Vector dense_from_sparse(const SparseRow& row, Field field, std::size_t cols);
/// a + alpha * b.
SparseRow add_scaled(const SparseRow& a, const Scalar& alpha, const SparseRow& b);

/// Exact matrix with sparse row storage. A matrix acts on column vectors,
/// so an m x n matrix is a linear map F^n -> F^m.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows);
  /// Entries are taken as given; echelon() rejects mismatched tags.
  static Matrix from_sparse(Field field, std::size_t cols, std::vector<SparseRow> rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void add_to(std::size_t r, std::size_t c, const Scalar& value);

  const SparseRow& row(std::size_t r) const { return rows_.at(r); }
  const std::vector<SparseRow>& sparse_rows() const { return rows_; }
  Vector dense_row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void append_row(SparseRow row);
  void append_row(const Vector& row);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Vector apply(const Vector& v) const;
  Matrix scaled(const Scalar& c) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-() const;

  std::size_t nonzeros() const;
  bool is_zero() const;
  bool operator==(const Matrix& rhs) const;

  /// [a b] side by side (same row count).
  static Matrix hstack(const Matrix& a, const Matrix& b);
  /// [a; b] stacked (same column count).
  static Matrix vstack(const Matrix& a, const Matrix& b);
  /// diag(a, b).
  static Matrix block_diag(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

/// Reduced row-echelon form with zero rows dropped, plus pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon echelon(const Matrix& m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Inverse of a square matrix. Throws InvalidInput when singular.
Matrix inverse(const Matrix& m);

/// Throws FieldMismatch if any entry carries a different field tag.
void require_uniform_field(const Matrix& m);

}  // namespace leibniz
