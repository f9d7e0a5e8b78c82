#include "leibniz/algebra.hpp"

#include <set>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

void accumulate(Vector& out, const Scalar& c, const SparseRow& row) {
  if (c.is_zero()) return;
  for (const auto& e : row) out[e.col] += c * e.value;
}

// [v, e_k] for a sparse v.
SparseRow bracket_right_basis(const LeibnizAlgebra& alg, const SparseRow& v, std::size_t k) {
  SparseRow out;
  for (const auto& e : v) out = add_scaled(out, e.value, alg.basis_bracket(e.col, k));
  return out;
}

// [e_i, v] for a sparse v.
SparseRow bracket_left_basis(const LeibnizAlgebra& alg, std::size_t i, const SparseRow& v) {
  SparseRow out;
  for (const auto& e : v) out = add_scaled(out, e.value, alg.basis_bracket(i, e.col));
  return out;
}

bool rows_equal(const SparseRow& a, const SparseRow& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].col != b[i].col || a[i].value != b[i].value) return false;
  }
  return true;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

LeibnizAlgebra::LeibnizAlgebra(Field field, std::vector<std::string> labels)
    : field_(field), labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}

LeibnizAlgebra::LeibnizAlgebra(Field field, std::size_t dim) : LeibnizAlgebra(field, numbered("e", dim)) {}

void LeibnizAlgebra::check_index(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw Error(ErrorCode::LengthMismatch, "basis index out of range");
}

void LeibnizAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim()) throw Error(ErrorCode::LengthMismatch, "bracket value length");
  set_bracket(i, j, sparse_from_dense(value));
}

void LeibnizAlgebra::set_bracket(std::size_t i, std::size_t j, SparseRow value) {
  check_index(i, j);
  for (std::size_t t = 0; t < value.size(); ++t) {
    if (value[t].col >= dim() || (t > 0 && value[t].col <= value[t - 1].col)) {
      throw Error(ErrorCode::LengthMismatch, "malformed bracket value");
    }
    if (value[t].value.field() != field_) throw Error(ErrorCode::FieldMismatch, "bracket value");
  }
  table_[i * dim() + j] = std::move(value);
}

Scalar LeibnizAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, j);
  for (const auto& e : basis_bracket(i, j)) {
    if (e.col == k) return e.value;
  }
  return Scalar(field_);
}

Vector LeibnizAlgebra::bracket(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw Error(ErrorCode::LengthMismatch, "bracket operand length");
  Vector out = zero_vector(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero()) continue;
      accumulate(out, u[i] * v[j], basis_bracket(i, j));
    }
  }
  return out;
}

Matrix LeibnizAlgebra::left_multiplication(const Vector& u) const {
  if (u.size() != dim()) throw Error(ErrorCode::LengthMismatch, "operand length");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket(u, unit_vector(field_, dim(), j)));
  return Matrix::from_columns(field_, dim(), cols);
}

Matrix LeibnizAlgebra::right_multiplication(const Vector& u) const {
  if (u.size() != dim()) throw Error(ErrorCode::LengthMismatch, "operand length");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket(unit_vector(field_, dim(), j), u));
  return Matrix::from_columns(field_, dim(), cols);
}

bool LeibnizAlgebra::operator==(const LeibnizAlgebra& rhs) const {
  if (field_ != rhs.field_ || labels_ != rhs.labels_) return false;
  for (std::size_t t = 0; t < table_.size(); ++t) {
    if (!rows_equal(table_[t], rhs.table_[t])) return false;
  }
  return true;
}

ValidationReport validate(const LeibnizAlgebra& alg) {
  ValidationReport report;
  std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        SparseRow lhs = bracket_right_basis(alg, alg.basis_bracket(i, j), k);
        SparseRow rhs = bracket_right_basis(alg, alg.basis_bracket(i, k), j);
        rhs = add_scaled(rhs, Scalar(alg.field(), 1), bracket_left_basis(alg, i, alg.basis_bracket(j, k)));
        if (!rows_equal(lhs, rhs)) report.add("right Leibniz identity", {i, j, k});
      }
    }
  }
  return report;
}

Vector basis_vector(const LeibnizAlgebra& alg, std::size_t i) { return unit_vector(alg.field(), alg.dim(), i); }

std::string format_element(const LeibnizAlgebra& alg, const Vector& v) {
  if (v.size() != alg.dim()) throw Error(ErrorCode::LengthMismatch, "element length");
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != "1") out += c;
    out += alg.labels()[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_subspace(const LeibnizAlgebra& alg, const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i > 0) out += ", ";
    out += format_element(alg, s.basis_vector(i));
  }
  return out + "}";
}

Subspace full_space(const LeibnizAlgebra& alg) { return Subspace::full(alg.field(), alg.dim()); }

Subspace zero_space(const LeibnizAlgebra& alg) { return Subspace(alg.field(), alg.dim()); }

Subspace product_ideal(const LeibnizAlgebra& alg, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != alg.dim() || b.ambient_dim() != alg.dim()) {
    throw Error(ErrorCode::LengthMismatch, "subspace ambient vs algebra dimension");
  }
  std::vector<Vector> gens;
  for (const auto& u : a.basis_vectors()) {
    for (const auto& v : b.basis_vectors()) {
      gens.push_back(alg.bracket(u, v));
      gens.push_back(alg.bracket(v, u));
    }
  }
  return Subspace::span(alg.field(), alg.dim(), gens);
}

Subspace derived(const LeibnizAlgebra& alg) {
  Subspace g = full_space(alg);
  return product_ideal(alg, g, g);
}

Subspace center(const LeibnizAlgebra& alg) {
  // Rows (i,k): coefficient of e_k in [e_i, v] and in [v, e_i].
  std::size_t d = alg.dim();
  Matrix m(alg.field(), 2 * d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& e : alg.basis_bracket(i, j)) m.add_to(i * d + e.col, j, e.value);
      for (const auto& e : alg.basis_bracket(j, i)) m.add_to(d * d + i * d + e.col, j, e.value);
    }
  }
  return kernel(m);
}

bool is_ideal(const LeibnizAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) return false;
  return s.contains(product_ideal(alg, full_space(alg), s));
}

bool is_subalgebra(const LeibnizAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) return false;
  return s.contains(product_ideal(alg, s, s));
}

bool is_abelian(const LeibnizAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (!alg.basis_bracket(i, j).empty()) return false;
    }
  }
  return true;
}

bool is_lie(const LeibnizAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i; j < alg.dim(); ++j) {
      SparseRow s = add_scaled(alg.basis_bracket(i, j), Scalar(alg.field(), 1), alg.basis_bracket(j, i));
      if (!s.empty()) return false;
      if (i == j && !alg.basis_bracket(i, i).empty()) return false;
    }
  }
  return true;
}

std::vector<Subspace> lower_central_series(const LeibnizAlgebra& alg) {
  Subspace g = full_space(alg);
  std::vector<Subspace> series{g};
  while (true) {
    Subspace next = product_ideal(alg, series.back(), g);
    if (next == series.back()) break;
    series.push_back(next);
    if (next.is_zero()) break;
  }
  return series;
}

bool is_nilpotent(const LeibnizAlgebra& alg) { return lower_central_series(alg).back().is_zero(); }

std::size_t minimal_generator_count(const LeibnizAlgebra& alg) {
  if (!is_nilpotent(alg)) throw Error(ErrorCode::NotNilpotent, "generator count needs a nilpotent algebra");
  return alg.dim() - derived(alg).dim();
}

bool is_extra_special(const LeibnizAlgebra& alg) {
  if (!is_nilpotent(alg)) throw Error(ErrorCode::NotNilpotent, "extra special test needs a nilpotent algebra");
  return center(alg).dim() == 1 && derived(alg).dim() == 1;
}

bool is_homomorphism(const LeibnizAlgebra& a, const LeibnizAlgebra& b, const Matrix& f) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) throw Error(ErrorCode::LengthMismatch, "homomorphism shape");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(f.column(i));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector lhs = f.apply(dense_from_sparse(a.basis_bracket(i, j), a.field(), a.dim()));
      if (lhs != b.bracket(images[i], images[j])) return false;
    }
  }
  return true;
}

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& alg, const Subspace& n) {
  if (!is_ideal(alg, n)) throw Error(ErrorCode::NotAnIdeal, "quotient by a non-ideal");
  QuotientAlgebra out;
  out.basis = quotient_basis(n, full_space(alg));
  std::size_t q = out.basis.dim();
  std::vector<std::string> labels;
  for (std::size_t p : out.basis.complement.pivots()) labels.push_back(alg.labels()[p]);
  out.algebra = LeibnizAlgebra(alg.field(), labels);
  std::vector<Vector> reps;
  for (std::size_t a = 0; a < q; ++a) reps.push_back(out.basis.section.column(a));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      out.algebra.set_bracket(a, b, out.basis.projection.apply(alg.bracket(reps[a], reps[b])));
    }
  }
  return out;
}

LeibnizAlgebra restrict_to(const LeibnizAlgebra& alg, const Subspace& s) {
  if (!is_subalgebra(alg, s)) throw Error(ErrorCode::InvalidInput, "subspace is not closed under the bracket");
  std::vector<std::string> labels;
  std::vector<Vector> basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const SparseRow& row = s.basis().row(i);
    labels.push_back(row.size() == 1 ? alg.labels()[row.front().col] : "b" + std::to_string(i));
  }
  LeibnizAlgebra out(alg.field(), labels);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      out.set_bracket(i, j, s.coordinates(alg.bracket(basis[i], basis[j])));
    }
  }
  return out;
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& alg, const Matrix& t) {
  Matrix inv = inverse(t);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < alg.dim(); ++i) cols.push_back(t.column(i));
  LeibnizAlgebra out(alg.field(), alg.labels());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      out.set_bracket(i, j, inv.apply(alg.bracket(cols[i], cols[j])));
    }
  }
  return out;
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "direct sum over different fields");
  std::set<std::string> seen(a.labels().begin(), a.labels().end());
  bool clash = false;
  for (const auto& l : b.labels()) clash = clash || seen.count(l) > 0;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(clash ? l + "_1" : l);
  for (const auto& l : b.labels()) labels.push_back(clash ? l + "_2" : l);
  LeibnizAlgebra out(a.field(), labels);
  std::size_t da = a.dim();
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) out.set_bracket(i, j, a.basis_bracket(i, j));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      SparseRow shifted;
      for (const auto& e : b.basis_bracket(i, j)) shifted.push_back({e.col + da, e.value});
      out.set_bracket(da + i, da + j, shifted);
    }
  }
  return out;
}

Pair Pair::make(LeibnizAlgebra g, Subspace n) {
  if (n.ambient_dim() != g.dim()) throw Error(ErrorCode::LengthMismatch, "ideal ambient vs algebra dimension");
  if (n.field() != g.field()) throw Error(ErrorCode::FieldMismatch, "ideal field");
  if (!is_ideal(g, n)) throw Error(ErrorCode::NotAnIdeal, "subspace is not a two-sided ideal");
  return Pair{std::move(g), std::move(n)};
}

Pair Pair::full(LeibnizAlgebra g) {
  Subspace n = full_space(g);
  return Pair{std::move(g), std::move(n)};
}

Subspace center_of_pair(const Pair& p) { return intersect(center(p.g), p.n); }

Subspace embed_first(const Subspace& s, std::size_t other_dim) {
  return Subspace::row_space(Matrix::hstack(s.basis(), Matrix(s.field(), s.dim(), other_dim)));
}

Subspace embed_second(const Subspace& s, std::size_t other_dim) {
  return Subspace::row_space(Matrix::hstack(Matrix(s.field(), s.dim(), other_dim), s.basis()));
}

Pair direct_sum_pair(const Pair& p1, const Pair& p2) {
  LeibnizAlgebra g = direct_sum(p1.g, p2.g);
  Subspace n = sum(embed_first(p1.n, p2.g.dim()), embed_second(p2.n, p1.g.dim()));
  return Pair::make(std::move(g), std::move(n));
}

namespace catalog {

namespace {

SparseRow term(Field f, std::size_t k, long long c) { return {{k, Scalar(f, c)}}; }

}  // namespace

LeibnizAlgebra abelian(std::size_t q, Field field) { return LeibnizAlgebra(field, numbered("a", q)); }

LeibnizAlgebra j1(Field field) {
  LeibnizAlgebra g(field, {"x", "y"});
  g.set_bracket(0, 0, term(field, 1, 1));
  return g;
}

LeibnizAlgebra j2(Field field) {
  LeibnizAlgebra g(field, {"x", "y", "z"});
  g.set_bracket(0, 1, term(field, 2, 1));
  return g;
}

LeibnizAlgebra h1(Field field) { return heisenberg(1, field); }

LeibnizAlgebra heisenberg(std::size_t k, Field field) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "heisenberg needs k >= 1");
  std::vector<std::string> labels;
  if (k == 1) {
    labels = {"x", "y", "z"};
  } else {
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("y" + std::to_string(i));
    labels.push_back("z");
  }
  LeibnizAlgebra g(field, labels);
  std::size_t z = 2 * k;
  for (std::size_t i = 0; i < k; ++i) {
    g.set_bracket(i, k + i, term(field, z, 1));
    g.set_bracket(k + i, i, term(field, z, -1));
  }
  return g;
}

LeibnizAlgebra sl2(Field field) {
  LeibnizAlgebra g(field, {"h", "e", "f"});
  g.set_bracket(0, 1, term(field, 1, 2));
  g.set_bracket(1, 0, term(field, 1, -2));
  g.set_bracket(0, 2, term(field, 2, -2));
  g.set_bracket(2, 0, term(field, 2, 2));
  g.set_bracket(1, 2, term(field, 0, 1));
  g.set_bracket(2, 1, term(field, 0, -1));
  return g;
}

LeibnizAlgebra by_name(const std::string& name, std::size_t param, Field field) {
  if (name == "abelian" || name == "a") return abelian(param, field);
  if (name == "J1") return j1(field);
  if (name == "J2") return j2(field);
  if (name == "H1") return h1(field);
  if (name == "heisenberg" || name == "H") return heisenberg(param, field);
  if (name == "sl2") return sl2(field);
  throw Error(ErrorCode::UnknownName, "no catalog algebra named '" + name + "'");
}

}  // namespace catalog

}  // namespace leibniz
