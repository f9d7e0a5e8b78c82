#include "leibniz/cover.hpp"

#include <set>
#include <string>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

// S with delta * S = I; throws unless delta is onto.
Matrix right_inverse(const Matrix& delta) {
  const Field f = delta.field();
  const std::size_t rows = delta.rows();
  const std::size_t cols = delta.cols();
  Echelon e = echelon(Matrix::hstack(delta, Matrix::identity(f, rows)));
  std::size_t rank = 0;
  while (rank < e.pivots.size() && e.pivots[rank] < cols) ++rank;
  if (rank != rows) throw Error(ErrorCode::InvalidInput, "delta is not onto");
  std::vector<Vector> columns(rows, zero_vector(f, cols));
  for (std::size_t r = 0; r < rank; ++r) {
    Vector row = e.reduced.dense_row(r);
    for (std::size_t i = 0; i < rows; ++i) columns[i][e.pivots[r]] = row[cols + i];
  }
  return Matrix::from_columns(f, cols, columns);
}

Vector embed(const Vector& v, std::size_t offset, std::size_t total, Field f) {
  Vector out = zero_vector(f, total);
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

std::vector<std::string> block_labels(const LeibnizAlgebra& a, const LeibnizAlgebra& b, const std::string& prefix,
                                      std::size_t extra) {
  LeibnizAlgebra s = direct_sum(a, b);
  std::vector<std::string> labels = s.labels();
  std::set<std::string> seen(labels.begin(), labels.end());
  for (std::size_t i = 0; i < extra; ++i) {
    std::string l = prefix + std::to_string(i);
    while (seen.count(l) > 0) l = "_" + l;
    seen.insert(l);
    labels.push_back(l);
  }
  return labels;
}

void require_full_cover(const StemCoverCandidate& c) {
  if (!c.target.n.is_full() || rank(c.cm.delta) != c.cm.g.dim()) {
    throw Error(ErrorCode::InvalidInput, "expected a cover of a full pair");
  }
}

Matrix block_delta(const Matrix& d1, const Matrix& d2, std::size_t extra) {
  Matrix d = Matrix::block_diag(d1, d2);
  return Matrix::hstack(d, Matrix(d.field(), d.rows(), extra));
}

}  // namespace

Vector CrossedModule::act_left(const Vector& x, const Vector& v) const {
  Vector out = zero_vector(m.field(), m.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out = add(out, scale(x[i], left[i].apply(v)));
  }
  return out;
}

Vector CrossedModule::act_right(const Vector& v, const Vector& x) const {
  Vector out = zero_vector(m.field(), m.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out = add(out, scale(x[i], right[i].apply(v)));
  }
  return out;
}

CrossedModule inclusion_crossed_module(const LeibnizAlgebra& g, const Subspace& n) {
  Pair p = Pair::make(g, n);
  CrossedModule cm;
  cm.g = g;
  cm.m = restrict_to(g, n);
  cm.delta = n.inclusion();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::vector<Vector> lc, rc;
    for (std::size_t j = 0; j < n.dim(); ++j) {
      lc.push_back(n.coordinates(g.bracket(basis_vector(g, i), n.basis_vector(j))));
      rc.push_back(n.coordinates(g.bracket(n.basis_vector(j), basis_vector(g, i))));
    }
    cm.left.push_back(Matrix::from_columns(g.field(), n.dim(), lc));
    cm.right.push_back(Matrix::from_columns(g.field(), n.dim(), rc));
  }
  return cm;
}

CrossedModule identity_crossed_module(const LeibnizAlgebra& g) { return inclusion_crossed_module(g, full_space(g)); }

CrossedModule crossed_module_from_lifts(const LeibnizAlgebra& m, const LeibnizAlgebra& g, const Matrix& delta) {
  if (delta.rows() != g.dim() || delta.cols() != m.dim()) throw Error(ErrorCode::LengthMismatch, "delta shape");
  Matrix s = right_inverse(delta);
  CrossedModule cm;
  cm.m = m;
  cm.g = g;
  cm.delta = delta;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Vector lift = s.column(i);
    cm.left.push_back(m.left_multiplication(lift));
    cm.right.push_back(m.right_multiplication(lift));
  }
  return cm;
}

CrossedModule transport(const CrossedModule& cm, const LeibnizAlgebra& target, const Matrix& t) {
  if (t.rows() != target.dim() || t.cols() != cm.g.dim()) throw Error(ErrorCode::LengthMismatch, "transport shape");
  Matrix tinv = inverse(t);
  CrossedModule out;
  out.m = cm.m;
  out.g = target;
  out.delta = t * cm.delta;
  const Field f = cm.m.field();
  for (std::size_t i = 0; i < target.dim(); ++i) {
    Matrix l(f, cm.m.dim(), cm.m.dim());
    Matrix r(f, cm.m.dim(), cm.m.dim());
    for (std::size_t j = 0; j < cm.g.dim(); ++j) {
      Scalar c = tinv.at(j, i);
      if (c.is_zero()) continue;
      l = l + cm.left[j].scaled(c);
      r = r + cm.right[j].scaled(c);
    }
    out.left.push_back(std::move(l));
    out.right.push_back(std::move(r));
  }
  return out;
}

ValidationReport validate_crossed_module(const CrossedModule& cm) {
  ValidationReport rep;
  const LeibnizAlgebra& m = cm.m;
  const LeibnizAlgebra& g = cm.g;
  if (cm.delta.rows() != g.dim() || cm.delta.cols() != m.dim() || cm.left.size() != g.dim() ||
      cm.right.size() != g.dim()) {
    rep.add("shape", {});
    return rep;
  }
  for (const auto& v : validate(m).violations) rep.add("m: " + v.axiom, v.indices);
  for (const auto& v : validate(g).violations) rep.add("g: " + v.axiom, v.indices);

  const std::size_t dm = m.dim();
  const std::size_t dg = g.dim();
  auto u = [&](std::size_t i) { return basis_vector(m, i); };
  auto e = [&](std::size_t i) { return basis_vector(g, i); };
  // L[a][c] = ^{e_a} u_c, R[a][c] = u_c^{e_a}.
  std::vector<std::vector<Vector>> L(dg), R(dg);
  for (std::size_t a = 0; a < dg; ++a) {
    for (std::size_t c = 0; c < dm; ++c) {
      L[a].push_back(cm.left[a].column(c));
      R[a].push_back(cm.right[a].column(c));
    }
  }

  for (std::size_t c = 0; c < dm; ++c) {
    for (std::size_t d = 0; d < dm; ++d) {
      Vector mm = m.bracket(u(c), u(d));
      if (cm.delta.apply(mm) != g.bracket(cm.delta.column(c), cm.delta.column(d))) {
        rep.add("delta is a homomorphism", {c, d});
      }
      if (cm.act_left(cm.delta.column(c), u(d)) != mm) rep.add("Peiffer: ^{delta m}m' = [m,m']", {c, d});
      if (cm.act_right(u(c), cm.delta.column(d)) != mm) rep.add("Peiffer: [m,m'] = m^{delta m'}", {c, d});
    }
  }
  for (std::size_t a = 0; a < dg; ++a) {
    for (std::size_t c = 0; c < dm; ++c) {
      if (cm.delta.apply(L[a][c]) != g.bracket(e(a), cm.delta.column(c))) {
        rep.add("delta(^x m) = [x, delta m]", {a, c});
      }
      if (cm.delta.apply(R[a][c]) != g.bracket(cm.delta.column(c), e(a))) {
        rep.add("delta(m^x) = [delta m, x]", {c, a});
      }
    }
  }
  for (std::size_t a = 0; a < dg; ++a) {
    for (std::size_t b = 0; b < dg; ++b) {
      Vector xx = g.bracket(e(a), e(b));
      for (std::size_t c = 0; c < dm; ++c) {
        Vector lhs1 = cm.act_left(xx, u(c));
        Vector rhs1 = add(cm.left[a].apply(L[b][c]), cm.right[b].apply(L[a][c]));
        if (lhs1 != rhs1) rep.add("^[x,x']m = ^x(^x'm) + (^x m)^x'", {a, b, c});
        Vector lhs3 = cm.act_right(u(c), xx);
        Vector rhs3 = sub(cm.right[b].apply(R[a][c]), cm.right[a].apply(R[b][c]));
        if (lhs3 != rhs3) rep.add("m^[x,x'] = (m^x)^x' - (m^x')^x", {c, a, b});
        Vector lhs5 = cm.left[a].apply(L[b][c]);
        Vector rhs5 = scale(Scalar(m.field(), -1), cm.left[a].apply(R[b][c]));
        if (lhs5 != rhs5) rep.add("^x(^x'm) = -^x(m^x')", {a, b, c});
      }
    }
  }
  for (std::size_t a = 0; a < dg; ++a) {
    for (std::size_t c = 0; c < dm; ++c) {
      for (std::size_t d = 0; d < dm; ++d) {
        Vector lhs2 = cm.left[a].apply(m.bracket(u(c), u(d)));
        Vector rhs2 = sub(m.bracket(L[a][c], u(d)), m.bracket(L[a][d], u(c)));
        if (lhs2 != rhs2) rep.add("^x[m,m'] = [^x m, m'] - [^x m', m]", {a, c, d});
        Vector lhs4 = cm.right[a].apply(m.bracket(u(c), u(d)));
        Vector rhs4 = add(m.bracket(R[a][c], u(d)), m.bracket(u(c), R[a][d]));
        if (lhs4 != rhs4) rep.add("[m,m']^x = [m^x, m'] + [m, m'^x]", {c, d, a});
        Vector lhs6 = m.bracket(u(c), L[a][d]);
        Vector rhs6 = scale(Scalar(m.field(), -1), m.bracket(u(c), R[a][d]));
        if (lhs6 != rhs6) rep.add("[m, ^x m'] = -[m, m'^x]", {c, a, d});
      }
    }
  }
  return rep;
}

Subspace relative_center(const CrossedModule& cm) {
  const Field f = cm.m.field();
  Matrix stacked(f, 0, cm.m.dim());
  for (std::size_t i = 0; i < cm.g.dim(); ++i) {
    stacked = Matrix::vstack(stacked, cm.left[i]);
    stacked = Matrix::vstack(stacked, cm.right[i]);
  }
  return kernel(stacked);
}

Subspace action_commutator(const CrossedModule& cm) {
  const Field f = cm.m.field();
  Matrix all(f, cm.m.dim(), 0);
  for (std::size_t i = 0; i < cm.g.dim(); ++i) {
    all = Matrix::hstack(all, cm.left[i]);
    all = Matrix::hstack(all, cm.right[i]);
  }
  return image(all);
}

ValidationReport validate_stem_cover(const StemCoverCandidate& c) {
  ValidationReport rep;
  const CrossedModule& cm = c.cm;
  if (!(cm.g == c.target.g)) {
    rep.add("image", {});
    rep.add("kernel dimension", {});
    rep.add("kernel placement", {});
    return rep;
  }
  if (image(cm.delta) != c.target.n) rep.add("image", {});
  Subspace ker = kernel(cm.delta);
  if (ker.dim() != hl2_dim(c.target)) rep.add("kernel dimension", {ker.dim(), hl2_dim(c.target)});
  if (!intersect(relative_center(cm), action_commutator(cm)).contains(ker)) rep.add("kernel placement", {});
  return rep;
}

StemCoverCandidate zero_cover(const LeibnizAlgebra& g) {
  const Field f = g.field();
  CrossedModule cm;
  cm.m = LeibnizAlgebra(f, std::size_t{0});
  cm.g = g;
  cm.delta = Matrix(f, g.dim(), 0);
  cm.left.assign(g.dim(), Matrix(f, 0, 0));
  cm.right.assign(g.dim(), Matrix(f, 0, 0));
  return {cm, Pair::make(g, zero_space(g))};
}

StemCoverCandidate abelian_pair_cover(const Pair& p) {
  if (!is_abelian(p.g)) throw Error(ErrorCode::NotAbelian, "abelian_pair_cover needs an abelian algebra");
  const Field f = p.g.field();
  const std::size_t k = p.n.dim();
  const std::size_t r = p.g.dim() - k;

  // n ∔ (n∧n) -> n with ^{e_a}u_b = u_a∧u_b and u_b^{e_a} = u_b∧u_a.
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a) labels.push_back("u" + std::to_string(a));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) labels.push_back("w" + std::to_string(a) + std::to_string(b));
  }
  const std::size_t dm = k + k * k;
  LeibnizAlgebra m(f, labels);
  auto w = [&](std::size_t a, std::size_t b) { return k + a * k + b; };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) m.set_bracket(a, b, unit_vector(f, dm, w(a, b)));
  }
  CrossedModule c1;
  c1.m = m;
  c1.g = catalog::abelian(k, f);
  c1.delta = Matrix::hstack(Matrix::identity(f, k), Matrix(f, k, k * k));
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Vector> lc(dm, zero_vector(f, dm)), rc(dm, zero_vector(f, dm));
    for (std::size_t b = 0; b < k; ++b) {
      lc[b] = unit_vector(f, dm, w(a, b));
      rc[b] = unit_vector(f, dm, w(b, a));
    }
    c1.left.push_back(Matrix::from_columns(f, dm, lc));
    c1.right.push_back(Matrix::from_columns(f, dm, rc));
  }
  StemCoverCandidate first{c1, Pair::full(c1.g)};
  DirectSumCover ds = direct_sum_cover(first, zero_cover(catalog::abelian(r, f)));

  QuotientBasis qb = quotient_basis(p.n, full_space(p.g));
  Matrix t = Matrix::hstack(p.n.inclusion(), qb.section);
  return {transport(ds.cover.cm, p.g, t), p};
}

StemCoverCandidate cocycle_cover(const LeibnizAlgebra& g) {
  const Field f = g.field();
  const std::size_t d = g.dim();
  Matrix d2 = leibniz_boundary(g, 2);
  Matrix d3 = leibniz_boundary(g, 3);
  QuotientBasis mod_b = quotient_basis(image(d3), Subspace::full(f, d * d));
  Subspace h = image(mod_b.projection, kernel(d2));
  std::vector<Vector> picks;
  for (std::size_t piv : h.pivots()) picks.push_back(unit_vector(f, mod_b.dim(), piv));
  Matrix select = Matrix::from_rows(f, mod_b.dim(), picks);
  Matrix phi = select * mod_b.projection;

  std::vector<std::string> labels = g.labels();
  for (std::size_t i = 0; i < h.dim(); ++i) labels.push_back("h" + std::to_string(i));
  const std::size_t dm = d + h.dim();
  LeibnizAlgebra m(f, labels);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector v = embed(g.bracket(basis_vector(g, i), basis_vector(g, j)), 0, dm, f);
      Vector c = phi.column(i * d + j);
      for (std::size_t s = 0; s < h.dim(); ++s) v[d + s] = c[s];
      m.set_bracket(i, j, v);
    }
  }
  Matrix delta = Matrix::hstack(Matrix::identity(f, d), Matrix(f, d, h.dim()));
  return {crossed_module_from_lifts(m, g, delta), Pair::full(g)};
}

DirectSumCover direct_sum_cover(const StemCoverCandidate& c1, const StemCoverCandidate& c2, CoverVariant variant) {
  const CrossedModule& a = c1.cm;
  const CrossedModule& b = c2.cm;
  if (a.m.field() != b.m.field()) throw Error(ErrorCode::FieldMismatch, "covers over different fields");
  const Field f = a.m.field();

  Matrix pm1 = quotient_basis(action_commutator(a), full_space(a.m)).projection;
  Matrix pm2 = quotient_basis(action_commutator(b), full_space(b.m)).projection;
  Matrix pg1 = quotient_basis(derived(a.g), full_space(a.g)).projection;
  Matrix pg2 = quotient_basis(derived(b.g), full_space(b.g)).projection;
  Matrix iota1 = pg1 * a.delta;
  Matrix iota2 = pg2 * b.delta;
  BFactor bf = b_factor(pm1, iota1, pm2, iota2);

  const std::size_t d1 = a.m.dim();
  const std::size_t d2 = b.m.dim();
  const std::size_t nb = bf.dim();
  const std::size_t dm = d1 + d2 + nb;

  // Block elements of the B space, projected to B coordinates and placed
  // in the third block of m.
  auto lift = [&](const Vector& space) { return embed(bf.quotient.projection.apply(space), d1 + d2, dm, f); };
  auto r12 = [&](const Vector& m1, const Vector& x2) {
    Vector v = zero_vector(f, bf.space_dim());
    for (std::size_t i = 0; i < bf.nbar1; ++i)
      for (std::size_t j = 0; j < bf.gbar2; ++j) v[bf.v1(i, j)] += m1[i] * x2[j];
    return lift(v);
  };
  auto l12 = [&](const Vector& m1, const Vector& x2) {
    Vector v = zero_vector(f, bf.space_dim());
    for (std::size_t i = 0; i < bf.nbar1; ++i)
      for (std::size_t j = 0; j < bf.gbar2; ++j) v[bf.v2(j, i)] += x2[j] * m1[i];
    return lift(v);
  };
  auto l21 = [&](const Vector& m2, const Vector& x1) {
    Vector v = zero_vector(f, bf.space_dim());
    for (std::size_t i = 0; i < bf.gbar1; ++i)
      for (std::size_t j = 0; j < bf.nbar2; ++j) v[bf.v3(i, j)] += x1[i] * m2[j];
    return lift(v);
  };
  auto r21 = [&](const Vector& m2, const Vector& x1) {
    Vector v = zero_vector(f, bf.space_dim());
    for (std::size_t i = 0; i < bf.gbar1; ++i)
      for (std::size_t j = 0; j < bf.nbar2; ++j) v[bf.v4(j, i)] += m2[j] * x1[i];
    return lift(v);
  };
  const bool printed = variant == CoverVariant::Printed;
  const Scalar minus_one(f, -1);

  LeibnizAlgebra m(f, block_labels(a.m, b.m, "B", nb));
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      m.set_bracket(i, j, embed(a.m.bracket(basis_vector(a.m, i), basis_vector(a.m, j)), 0, dm, f));
    }
  }
  for (std::size_t i = 0; i < d2; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      m.set_bracket(d1 + i, d1 + j, embed(b.m.bracket(basis_vector(b.m, i), basis_vector(b.m, j)), d1, dm, f));
    }
  }
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      Vector m1 = pm1.column(i);
      Vector m2 = pm2.column(j);
      if (printed) {
        m.set_bracket(i, d1 + j, scale(minus_one, l21(m2, iota1.column(i))));
        m.set_bracket(d1 + j, i, r12(m1, iota2.column(j)));
      } else {
        m.set_bracket(i, d1 + j, r12(m1, iota2.column(j)));
        m.set_bracket(d1 + j, i, l12(m1, iota2.column(j)));
      }
    }
  }

  CrossedModule cm;
  cm.m = m;
  cm.g = direct_sum(a.g, b.g);
  cm.delta = block_delta(a.delta, b.delta, nb);
  const std::size_t dg1 = a.g.dim();
  const std::size_t dg2 = b.g.dim();
  for (std::size_t s = 0; s < dg1 + dg2; ++s) {
    std::vector<Vector> lc(dm, zero_vector(f, dm)), rc(dm, zero_vector(f, dm));
    if (s < dg1) {
      Vector x1 = pg1.column(s);
      for (std::size_t c = 0; c < d1; ++c) {
        lc[c] = embed(a.left[s].column(c), 0, dm, f);
        rc[c] = embed(a.right[s].column(c), 0, dm, f);
      }
      for (std::size_t c = 0; c < d2; ++c) {
        Vector m2 = pm2.column(c);
        lc[d1 + c] = printed ? scale(minus_one, l21(m2, x1)) : l21(m2, x1);
        rc[d1 + c] = printed ? scale(minus_one, r21(m2, x1)) : r21(m2, x1);
      }
    } else {
      std::size_t t = s - dg1;
      Vector x2 = pg2.column(t);
      for (std::size_t c = 0; c < d1; ++c) {
        Vector m1 = pm1.column(c);
        lc[c] = printed ? r12(m1, x2) : l12(m1, x2);
        rc[c] = printed ? l12(m1, x2) : r12(m1, x2);
      }
      for (std::size_t c = 0; c < d2; ++c) {
        lc[d1 + c] = embed(b.left[t].column(c), d1, dm, f);
        rc[d1 + c] = embed(b.right[t].column(c), d1, dm, f);
      }
    }
    cm.left.push_back(Matrix::from_columns(f, dm, lc));
    cm.right.push_back(Matrix::from_columns(f, dm, rc));
  }

  DirectSumCover out;
  out.cover = {cm, direct_sum_pair(c1.target, c2.target)};
  out.b = bf;
  out.m1_dim = d1;
  out.m2_dim = d2;
  return out;
}

DirectSumCover cover_of_direct_sum(const StemCoverCandidate& c1, const StemCoverCandidate& c2) {
  require_full_cover(c1);
  require_full_cover(c2);
  return direct_sum_cover(c1, c2);
}

StemCoverCandidate cover_of_direct_sum_printed(const StemCoverCandidate& c1, const StemCoverCandidate& c2) {
  require_full_cover(c1);
  require_full_cover(c2);
  const CrossedModule& a = c1.cm;
  const CrossedModule& b = c2.cm;
  if (a.m.field() != b.m.field()) throw Error(ErrorCode::FieldMismatch, "covers over different fields");
  const Field f = a.m.field();
  Matrix pm1 = quotient_basis(derived(a.m), full_space(a.m)).projection;
  Matrix pm2 = quotient_basis(derived(b.m), full_space(b.m)).projection;
  const std::size_t a1 = pm1.rows();
  const std::size_t a2 = pm2.rows();
  const std::size_t d1 = a.m.dim();
  const std::size_t d2 = b.m.dim();
  const std::size_t dm = d1 + d2 + 2 * a1 * a2;

  LeibnizAlgebra m(f, block_labels(a.m, b.m, "W", 2 * a1 * a2));
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      m.set_bracket(i, j, embed(a.m.bracket(basis_vector(a.m, i), basis_vector(a.m, j)), 0, dm, f));
    }
  }
  for (std::size_t i = 0; i < d2; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      m.set_bracket(d1 + i, d1 + j, embed(b.m.bracket(basis_vector(b.m, i), basis_vector(b.m, j)), d1, dm, f));
    }
  }
  // [(m1,0,0),(0,m2',0)] = -m̄1*m̄2' and [(0,m2,0),(m1',0,0)] = m̄1'*m̄2, both
  // in the m1^ab ⊗ m2^ab block.
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      Vector v = zero_vector(f, dm);
      Vector x = pm1.column(i);
      Vector y = pm2.column(j);
      for (std::size_t s = 0; s < a1; ++s)
        for (std::size_t t = 0; t < a2; ++t) v[d1 + d2 + s * a2 + t] += x[s] * y[t];
      m.set_bracket(d1 + j, i, v);
      m.set_bracket(i, d1 + j, scale(Scalar(f, -1), v));
    }
  }
  LeibnizAlgebra g = direct_sum(a.g, b.g);
  Matrix delta = block_delta(a.delta, b.delta, 2 * a1 * a2);
  return {crossed_module_from_lifts(m, g, delta), direct_sum_pair(c1.target, c2.target)};
}

AbelianIdentity abelian_cover_identity(std::size_t q, std::size_t k) {
  if (k > q) throw Error(ErrorCode::InvalidInput, "k exceeds q");
  LeibnizAlgebra n = catalog::abelian(k);
  LeibnizAlgebra g = catalog::abelian(q);
  const Field f = g.field();
  std::vector<Vector> first, second;
  for (std::size_t i = 0; i < q; ++i) (i < k ? first : second).push_back(unit_vector(f, q, i));
  Subspace ns = Subspace::span(f, q, first);
  Subspace us = Subspace::span(f, q, second);
  AbelianIdentity r;
  r.lhs = exterior_product(n, full_space(n), full_space(n)).dim() + tensor_product(g, ns, us).dim();
  r.rhs = exterior_product(g, full_space(g), ns).dim();
  return r;
}

}  // namespace leibniz
