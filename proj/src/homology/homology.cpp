#include "leibniz/homology.hpp"

#include <cstdlib>
#include <string>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<std::size_t> digits(std::size_t index, std::size_t base, std::size_t len) {
  std::vector<std::size_t> out(len);
  for (std::size_t p = len; p-- > 0;) {
    out[p] = index % base;
    index /= base;
  }
  return out;
}

Matrix columns_to_matrix(Field field, std::size_t rows, std::vector<SparseRow> columns) {
  return Matrix::from_sparse(field, rows, std::move(columns)).transpose();
}

Matrix zero_matrix(Field field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }

void require_central(const Pair& p) {
  if (!center(p.g).contains(p.n)) throw Error(ErrorCode::IdealNotCentral, "the ideal is not central");
}

void require_nilpotent(const LeibnizAlgebra& g) {
  if (!is_nilpotent(g)) throw Error(ErrorCode::NotNilpotent, "the algebra is not nilpotent");
}

HomologyResult make_result(const Subspace& sub, const Subspace& whole, HomologyMethod method) {
  QuotientBasis q = quotient_basis(sub, whole);
  return {q.dim(), q.complement, method};
}

}  // namespace

std::string_view to_string(HomologyMethod method) {
  switch (method) {
    case HomologyMethod::Exterior: return "exterior";
    case HomologyMethod::Cone: return "cone";
    case HomologyMethod::Tau: return "tau";
    case HomologyMethod::Star: return "star";
    case HomologyMethod::Quotient: return "quotient";
  }
  return "unknown";
}

Matrix leibniz_boundary(const LeibnizAlgebra& g, std::size_t n) {
  const Field f = g.field();
  const std::size_t d = g.dim();
  if (n == 0) return zero_matrix(f, 0, 1);
  if (n == 1) return zero_matrix(f, 1, d);
  const std::size_t in_dim = ipow(d, n);
  const std::size_t out_dim = ipow(d, n - 1);
  std::vector<SparseRow> columns(in_dim);
  Vector acc = zero_vector(f, out_dim);
  for (std::size_t idx = 0; idx < in_dim; ++idx) {
    std::vector<std::size_t> x = digits(idx, d, n);
    bool touched = false;
    for (std::size_t j = 1; j < n; ++j) {
      // Positions are 1-based in the sign: (-1)^(j+1) for 0-based j.
      Scalar sign(f, (j % 2 == 0) ? -1 : 1);
      for (std::size_t i = 0; i < j; ++i) {
        const SparseRow& br = g.basis_bracket(x[i], x[j]);
        if (br.empty()) continue;
        std::vector<std::size_t> y;
        y.reserve(n - 1);
        for (std::size_t p = 0; p < n; ++p) {
          if (p != j) y.push_back(x[p]);
        }
        for (const auto& e : br) {
          y[i] = e.col;
          std::size_t out = 0;
          for (std::size_t v : y) out = out * d + v;
          acc[out] += sign * e.value;
          touched = true;
        }
      }
    }
    if (touched) {
      columns[idx] = sparse_from_dense(acc);
      for (const auto& e : columns[idx]) acc[e.col] = Scalar(f);
    }
  }
  return columns_to_matrix(f, out_dim, std::move(columns));
}

Matrix tensor_power(const Matrix& fm, std::size_t n) {
  const Field f = fm.field();
  const std::size_t q = fm.rows();
  const std::size_t d = fm.cols();
  Matrix ft = fm.transpose();
  const std::size_t in_dim = ipow(d, n);
  std::vector<SparseRow> columns(in_dim);
  for (std::size_t idx = 0; idx < in_dim; ++idx) {
    std::vector<std::size_t> x = digits(idx, d, n);
    SparseRow col{{0, Scalar(f, 1)}};
    for (std::size_t p = 0; p < n && !col.empty(); ++p) {
      SparseRow next;
      for (const auto& a : col) {
        for (const auto& b : ft.row(x[p])) next.push_back({a.col * q + b.col, a.value * b.value});
      }
      col = std::move(next);
    }
    columns[idx] = std::move(col);
  }
  return columns_to_matrix(f, ipow(q, n), std::move(columns));
}

ChainComplexSlice leibniz_complex(const LeibnizAlgebra& g, std::size_t top) {
  ChainComplexSlice c;
  for (std::size_t n = 0; n <= top; ++n) c.dims.push_back(ipow(g.dim(), n));
  c.boundaries.push_back(leibniz_boundary(g, 0));
  for (std::size_t n = 1; n <= top; ++n) {
    c.boundaries.push_back(leibniz_boundary(g, n));
    if (n >= 2 && !(c.boundaries[n - 1] * c.boundaries[n]).is_zero()) {
      throw Error(ErrorCode::InvalidInput, "boundary does not square to zero in degree " + std::to_string(n));
    }
  }
  return c;
}

MappingCone mapping_cone(const Pair& p, std::size_t top) {
  const Field f = p.g.field();
  QuotientAlgebra q = quotient_algebra(p.g, p.n);
  ChainComplexSlice cg = leibniz_complex(p.g, top);
  ChainComplexSlice cq = leibniz_complex(q.algebra, top);
  MappingCone m;
  m.dims.push_back(cq.dims[0]);
  for (std::size_t n = 1; n <= top; ++n) m.dims.push_back(cg.dims[n - 1] + cq.dims[n]);
  m.deltas.push_back(zero_matrix(f, 0, m.dims[0]));
  for (std::size_t n = 1; n <= top; ++n) {
    Matrix dg = (n >= 2) ? cg.boundaries[n - 1] : zero_matrix(f, 0, 1);
    std::size_t lower_g = (n >= 2) ? cg.dims[n - 2] : 0;
    Matrix top_row = Matrix::hstack(-dg, zero_matrix(f, lower_g, cq.dims[n]));
    Matrix bottom_row = Matrix::hstack(tensor_power(q.basis.projection, n - 1), cq.boundaries[n]);
    m.deltas.push_back(Matrix::vstack(top_row, bottom_row));
    if (n >= 2 && !(m.deltas[n - 1] * m.deltas[n]).is_zero()) {
      throw Error(ErrorCode::InvalidInput, "cone differential does not square to zero in degree " + std::to_string(n));
    }
  }
  return m;
}

std::size_t default_dimension_cap() {
  if (const char* env = std::getenv("LEIBNIZ_DIM_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, std::string("bad LEIBNIZ_DIM_CAP: ") + env);
    }
  }
  return 8;
}

HomologyResult hl1(const Pair& p) {
  return make_result(product_ideal(p.g, full_space(p.g), p.n), p.n, HomologyMethod::Quotient);
}

HomologyResult hl2_exterior(const Pair& p) {
  TensorPresentation e = exterior_product(p.g, full_space(p.g), p.n);
  Subspace k = kernel(commutator_map(e));
  return {k.dim(), k, HomologyMethod::Exterior};
}

HomologyResult hl2_cone(const Pair& p, std::optional<std::size_t> cap) {
  std::size_t limit = cap ? *cap : default_dimension_cap();
  if (p.g.dim() > limit) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "dim g = " + std::to_string(p.g.dim()) + " exceeds the cap " + std::to_string(limit));
  }
  MappingCone m = mapping_cone(p, 4);
  Subspace cycles = kernel(m.deltas[3]);
  Subspace boundaries = image(m.deltas[4]);
  return make_result(boundaries, cycles, HomologyMethod::Cone);
}

HomologyResult hl2_central_tau(const Pair& p) {
  require_central(p);
  const Field f = p.g.field();
  Matrix proj = quotient_basis(derived(p.g), full_space(p.g)).projection;
  const std::size_t q = proj.rows();
  const std::size_t k = p.n.dim();
  std::vector<Vector> nbar;
  for (std::size_t a = 0; a < k; ++a) nbar.push_back(proj.apply(p.n.basis_vector(a)));
  std::vector<SparseRow> columns;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      SparseRow col;
      for (std::size_t i = 0; i < q; ++i) {
        if (!nbar[a][i].is_zero()) col.push_back({i * k + b, nbar[a][i]});
      }
      for (std::size_t j = 0; j < q; ++j) {
        if (!nbar[b][j].is_zero()) col.push_back({q * k + a * q + j, -nbar[b][j]});
      }
      columns.push_back(std::move(col));
    }
  }
  Matrix tau = columns_to_matrix(f, 2 * q * k, std::move(columns));
  return make_result(image(tau), Subspace::full(f, 2 * q * k), HomologyMethod::Tau);
}

HomologyResult hl2_central_star(const Pair& p) {
  require_central(p);
  const Field f = p.g.field();
  Matrix proj = quotient_basis(derived(p.g), full_space(p.g)).projection;
  const std::size_t q = proj.rows();
  const std::size_t k = p.n.dim();
  // g^ab and n sit side by side in an abelian algebra, so each acts
  // trivially on the other.
  LeibnizAlgebra host = catalog::abelian(q + k, f);
  std::vector<Vector> gens_m, gens_n;
  for (std::size_t i = 0; i < q; ++i) gens_m.push_back(unit_vector(f, q + k, i));
  for (std::size_t i = 0; i < k; ++i) gens_n.push_back(unit_vector(f, q + k, q + i));
  Subspace m = Subspace::span(f, q + k, gens_m);
  Subspace n = Subspace::span(f, q + k, gens_n);
  TensorPresentation tp = tensor_product(host, m, n);
  Subspace whole = Subspace::full(f, tp.dim());
  if (intersect(p.n, derived(p.g)) == p.n) return make_result(Subspace(f, tp.dim()), whole, HomologyMethod::Star);

  std::vector<Vector> nbar;
  for (std::size_t a = 0; a < k; ++a) {
    Vector v = proj.apply(p.n.basis_vector(a));
    v.resize(q + k, Scalar(f));
    nbar.push_back(std::move(v));
  }
  std::vector<Vector> rel;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      Vector s = sub(tp.a_element(nbar[a], gens_n[b]), tp.b_element(gens_n[a], nbar[b]));
      rel.push_back(tp.class_of(s));
    }
  }
  return make_result(Subspace::span(f, tp.dim(), rel), whole, HomologyMethod::Star);
}

std::size_t hl2_dim(const LeibnizAlgebra& g) { return hl2_exterior(Pair::full(g)).dim; }
std::size_t hl2_dim(const Pair& p) { return hl2_exterior(p).dim; }

KunnethReport kunneth_check(const Pair& p1, const Pair& p2) {
  KunnethReport r;
  r.direct = hl2_dim(direct_sum_pair(p1, p2));
  r.first = hl2_dim(p1);
  r.second = hl2_dim(p2);
  r.b_factor = direct_sum_b_factor(p1, p2).dim();
  return r;
}

BoundReport bound_theorem36(const Pair& p) {
  require_nilpotent(p.g);
  Subspace c = intersect(derived(p.g), p.n);
  QuotientAlgebra q = quotient_algebra(p.g, c);
  Pair reduced = Pair::make(q.algebra, image(q.basis.projection, p.n));
  QuotientAlgebra mod_center = quotient_algebra(p.g, center_of_pair(p));
  BoundReport r;
  r.lhs = hl2_dim(p);
  r.rhs = hl2_dim(reduced) + 2 * c.dim() * minimal_generator_count(mod_center.algebra);
  return r;
}

Cor39Report bound_cor39(const LeibnizAlgebra& g) {
  require_nilpotent(g);
  const std::size_t s = derived(g).dim();
  const std::size_t ab = g.dim() - s;
  Cor39Report r;
  r.bound.lhs = hl2_dim(g);
  r.bound.rhs = ab * ab + 2 * s * minimal_generator_count(quotient_algebra(g, center(g)).algebra);
  r.abelian = is_abelian(g);
  return r;
}

SplitReport complement_split_check(const Pair& p, const Subspace& complement) {
  if (complement.ambient_dim() != p.g.dim()) throw Error(ErrorCode::LengthMismatch, "complement ambient dimension");
  if (!is_ideal(p.g, complement) || !intersect(p.n, complement).is_zero() || !sum(p.n, complement).is_full()) {
    throw Error(ErrorCode::NotAComplement, "not an ideal complement of n");
  }
  SplitReport r;
  r.whole = hl2_dim(p.g);
  r.pair = hl2_dim(p);
  r.quotient = hl2_dim(quotient_algebra(p.g, p.n).algebra);
  return r;
}

SnakeReport snake_inequality_check(const LeibnizAlgebra& g, const Subspace& n, const Subspace& k) {
  Pair p = Pair::make(g, n);
  if (k.ambient_dim() != g.dim() || !intersect(center(g), n).contains(k)) {
    throw Error(ErrorCode::NotCentralInPair, "k is not contained in Z(g) ∩ n");
  }
  QuotientAlgebra q = quotient_algebra(g, k);
  SnakeReport r;
  r.quotient = hl2_dim(Pair::make(q.algebra, image(q.basis.projection, n)));
  r.pair = hl2_dim(p);
  r.intersection = intersect(product_ideal(g, full_space(g), n), k).dim();
  r.central = center(g).contains(n);
  return r;
}

long long extra_special_t(const LeibnizAlgebra& e) {
  if (!is_extra_special(e)) throw Error(ErrorCode::InvalidInput, "the algebra is not extra special");
  long long d = static_cast<long long>(e.dim());
  return static_cast<long long>(hl2_dim(e)) - ((d - 1) * (d - 1) - 1);
}

}  // namespace leibniz
