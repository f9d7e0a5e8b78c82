#include "leibniz/matrix.hpp"

#include <algorithm>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

// a + alpha * b on sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Scalar& alpha, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, alpha * b[j].value});
      ++j;
    } else {
      Scalar v = a[i].value + alpha * b[j].value;
      if (!v.is_zero()) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize(SparseRow& row) {
  Scalar inv = row.front().value.inverse();
  for (auto& e : row) e.value *= inv;
}

const Scalar* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it == row.end() || it->col != col) return nullptr;
  return &it->value;
}

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

// Forward elimination into semi-echelon rows (distinct leading columns,
// leading entries 1). With `reduce`, back-substitutes to rref and sorts.
Echelon eliminate(const Matrix& m, bool reduce) {
  require_uniform_field(m);
  std::vector<SparseRow> pivot_rows;
  std::vector<std::size_t> pivot_of_col(m.cols(), kNoPivot);
  for (const auto& source : m.sparse_rows()) {
    SparseRow cur = source;
    while (!cur.empty()) {
      std::size_t lead = cur.front().col;
      std::size_t k = pivot_of_col[lead];
      if (k == kNoPivot) {
        normalize(cur);
        pivot_of_col[lead] = pivot_rows.size();
        pivot_rows.push_back(std::move(cur));
        break;
      }
      cur = axpy(cur, -cur.front().value, pivot_rows[k]);
    }
  }

  std::vector<std::size_t> order(pivot_rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return pivot_rows[x].front().col < pivot_rows[y].front().col;
  });

  if (reduce) {
    // Rows with larger pivots are finished first, so each subtraction only
    // touches non-pivot columns to the right.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      SparseRow& row = pivot_rows[*it];
      std::size_t pos = 1;
      while (pos < row.size()) {
        std::size_t k = pivot_of_col[row[pos].col];
        if (k == kNoPivot) {
          ++pos;
          continue;
        }
        std::size_t col = row[pos].col;
        row = axpy(row, -row[pos].value, pivot_rows[k]);
        pos = static_cast<std::size_t>(
            std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; }) -
            row.begin());
      }
    }
  }

  Echelon out;
  std::vector<SparseRow> sorted;
  sorted.reserve(order.size());
  for (std::size_t i : order) {
    out.pivots.push_back(pivot_rows[i].front().col);
    sorted.push_back(std::move(pivot_rows[i]));
  }
  out.reduced = Matrix::from_sparse(m.field(), m.cols(), std::move(sorted));
  return out;
}

}  // namespace

SparseRow add_scaled(const SparseRow& a, const Scalar& alpha, const SparseRow& b) {
  return axpy(a, alpha, b);
}

SparseRow sparse_from_dense(const Vector& v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) row.push_back({i, v[i]});
  }
  return row;
}

Vector dense_from_sparse(const SparseRow& row, Field field, std::size_t cols) {
  Vector v = zero_vector(field, cols);
  for (const auto& e : row) v.at(e.col) = e.value;
  return v;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, Scalar(field, 1)});
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  return from_rows(field, rows, columns).transpose();
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(field, 0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorCode::LengthMismatch, "ragged matrix literal");
    Vector v;
    for (long long x : r) v.emplace_back(field, x);
    m.append_row(v);
  }
  return m;
}

Matrix Matrix::from_sparse(Field field, std::size_t cols, std::vector<SparseRow> rows) {
  Matrix m(field, 0, cols);
  m.rows_ = std::move(rows);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (c >= cols_) throw Error(ErrorCode::LengthMismatch, "column index out of range");
  const Scalar* s = find_entry(rows_.at(r), c);
  return s ? *s : Scalar(field_);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (c >= cols_) throw Error(ErrorCode::LengthMismatch, "column index out of range");
  if (value.field() != field_) throw Error(ErrorCode::FieldMismatch, "matrix entry");
  SparseRow& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (value.is_zero()) {
      row.erase(it);
    } else {
      it->value = value;
    }
  } else if (!value.is_zero()) {
    row.insert(it, {c, value});
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  if (value.is_zero()) return;
  set(r, c, at(r, c) + value);
}

Vector Matrix::dense_row(std::size_t r) const { return dense_from_sparse(rows_.at(r), field_, cols_); }

Vector Matrix::column(std::size_t c) const {
  Vector v = zero_vector(field_, rows());
  for (std::size_t r = 0; r < rows(); ++r) v[r] = at(r, c);
  return v;
}

void Matrix::append_row(SparseRow row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].col >= cols_ || (i > 0 && row[i].col <= row[i - 1].col)) {
      throw Error(ErrorCode::LengthMismatch, "malformed sparse row");
    }
    if (row[i].value.field() != field_) throw Error(ErrorCode::FieldMismatch, "matrix row");
  }
  rows_.push_back(std::move(row));
}

void Matrix::append_row(const Vector& row) {
  if (row.size() != cols_) throw Error(ErrorCode::LengthMismatch, "row length");
  append_row(sparse_from_dense(row));
}

Matrix Matrix::transpose() const {
  std::vector<SparseRow> out(cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& e : rows_[r]) out[e.col].push_back({r, e.value});
  }
  return from_sparse(field_, rows(), std::move(out));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows()) throw Error(ErrorCode::LengthMismatch, "matrix product shapes");
  if (field_ != rhs.field_) throw Error(ErrorCode::FieldMismatch, "matrix product");
  std::vector<SparseRow> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    SparseRow acc;
    for (const auto& e : rows_[r]) acc = axpy(acc, e.value, rhs.rows_[e.col]);
    out[r] = std::move(acc);
  }
  return from_sparse(field_, rhs.cols_, std::move(out));
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::LengthMismatch, "matrix-vector shapes");
  Vector out = zero_vector(field_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& e : rows_[r]) out[r] += e.value * v[e.col];
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  std::vector<SparseRow> out;
  out.reserve(rows());
  for (const auto& row : rows_) out.push_back(axpy({}, c, row));
  return from_sparse(field_, cols_, std::move(out));
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows() != rhs.rows() || cols_ != rhs.cols_) throw Error(ErrorCode::LengthMismatch, "matrix sum shapes");
  std::vector<SparseRow> out(rows());
  Scalar one(field_, 1);
  for (std::size_t r = 0; r < rows(); ++r) out[r] = axpy(rows_[r], one, rhs.rows_[r]);
  return from_sparse(field_, cols_, std::move(out));
}

Matrix Matrix::operator-() const { return scaled(Scalar(field_, -1)); }

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

bool Matrix::operator==(const Matrix& rhs) const {
  if (field_ != rhs.field_ || cols_ != rhs.cols_ || rows() != rhs.rows()) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto& a = rows_[r];
    const auto& b = rhs.rows_[r];
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].col != b[i].col || a[i].value != b[i].value) return false;
    }
  }
  return true;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::LengthMismatch, "hstack row counts");
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "hstack");
  std::vector<SparseRow> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out[r] = a.rows_[r];
    for (const auto& e : b.rows_[r]) out[r].push_back({e.col + a.cols_, e.value});
  }
  return from_sparse(a.field_, a.cols_ + b.cols_, std::move(out));
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorCode::LengthMismatch, "vstack column counts");
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "vstack");
  std::vector<SparseRow> out = a.rows_;
  out.insert(out.end(), b.rows_.begin(), b.rows_.end());
  return from_sparse(a.field_, a.cols_, std::move(out));
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "block_diag");
  std::vector<SparseRow> out = a.rows_;
  for (const auto& row : b.rows_) {
    SparseRow shifted;
    for (const auto& e : row) shifted.push_back({e.col + a.cols_, e.value});
    out.push_back(std::move(shifted));
  }
  return from_sparse(a.field_, a.cols_ + b.cols_, std::move(out));
}

void require_uniform_field(const Matrix& m) {
  for (const auto& row : m.sparse_rows()) {
    for (const auto& e : row) {
      if (e.value.field() != m.field()) {
        throw Error(ErrorCode::FieldMismatch, "entry over " + e.value.field().name() +
                                                  " in matrix over " + m.field().name());
      }
    }
  }
}

Echelon echelon(const Matrix& m) { return eliminate(m, true); }

Matrix rref(const Matrix& m) { return echelon(m).reduced; }

std::size_t rank(const Matrix& m) { return eliminate(m, false).pivots.size(); }

Matrix inverse(const Matrix& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::LengthMismatch, "inverse of a non-square matrix");
  Echelon e = echelon(Matrix::hstack(m, Matrix::identity(m.field(), n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) {
    throw Error(ErrorCode::InvalidInput, "singular matrix");
  }
  std::vector<SparseRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& ent : e.reduced.row(i)) {
      if (ent.col >= n) rows[i].push_back({ent.col - n, ent.value});
    }
  }
  return Matrix::from_sparse(m.field(), n, std::move(rows));
}

}  // namespace leibniz
