#include "leibniz/tensor.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

std::string vector_name(const LeibnizAlgebra& g, const Subspace& s, std::size_t i, const char* fallback) {
  const SparseRow& row = s.basis().row(i);
  if (row.size() == 1 && row.front().value.is_one()) return g.labels()[row.front().col];
  return fallback + std::to_string(i);
}

TensorPresentation base_presentation(const LeibnizAlgebra& g, const Subspace& m, const Subspace& n) {
  if (!is_ideal(g, m) || !is_ideal(g, n)) throw Error(ErrorCode::NotAnIdeal, "tensor factors must be ideals");
  TensorPresentation tp;
  tp.g = g;
  tp.m = m;
  tp.n = n;
  tp.m_basis = m.basis_vectors();
  tp.n_basis = n.basis_vectors();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < tp.dm(); ++i) {
    for (std::size_t j = 0; j < tp.dn(); ++j) cols.push_back(g.bracket(tp.m_basis[i], tp.n_basis[j]));
  }
  for (std::size_t i = 0; i < tp.dn(); ++i) {
    for (std::size_t j = 0; j < tp.dm(); ++j) cols.push_back(g.bracket(tp.n_basis[i], tp.m_basis[j]));
  }
  tp.symbol_commutator = Matrix::from_columns(g.field(), g.dim(), cols);
  return tp;
}

std::vector<Vector> tensor_relations(const TensorPresentation& tp) {
  const LeibnizAlgebra& g = tp.g;
  const auto& mb = tp.m_basis;
  const auto& nb = tp.n_basis;
  std::size_t dm = tp.dm();
  std::size_t dn = tp.dn();
  auto br = [&](const Vector& u, const Vector& v) { return g.bracket(u, v); };
  std::vector<Vector> rels;
  auto push = [&](Vector v) {
    if (!is_zero(v)) rels.push_back(std::move(v));
  };

  // (3a) m*[n,n'] - m^n*n' + m^{n'}*n
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t k = 0; k < dn; ++k)
        push(add(sub(tp.a_element(mb[i], br(nb[j], nb[k])), tp.a_element(br(mb[i], nb[j]), nb[k])),
                 tp.a_element(br(mb[i], nb[k]), nb[j])));
  // (3b) n*[m,m'] - n^m*m' + n^{m'}*m
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dm; ++j)
      for (std::size_t k = 0; k < dm; ++k)
        push(add(sub(tp.b_element(nb[i], br(mb[j], mb[k])), tp.b_element(br(nb[i], mb[j]), mb[k])),
                 tp.b_element(br(nb[i], mb[k]), mb[j])));
  // (3c) [m,m']*n - ^m n*m' + m*n^{m'}
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dm; ++j)
      for (std::size_t k = 0; k < dn; ++k)
        push(add(sub(tp.a_element(br(mb[i], mb[j]), nb[k]), tp.b_element(br(mb[i], nb[k]), mb[j])),
                 tp.a_element(mb[i], br(nb[k], mb[j]))));
  // (3d) [n,n']*m - ^n m*n' + n*m^{n'}
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t k = 0; k < dm; ++k)
        push(add(sub(tp.b_element(br(nb[i], nb[j]), mb[k]), tp.a_element(br(nb[i], mb[k]), nb[j])),
                 tp.b_element(nb[i], br(mb[k], nb[j]))));
  // (4a) m*^{m'}n + m*n^{m'}
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dm; ++j)
      for (std::size_t k = 0; k < dn; ++k)
        push(add(tp.a_element(mb[i], br(mb[j], nb[k])), tp.a_element(mb[i], br(nb[k], mb[j]))));
  // (4b) n*^{n'}m + n*m^{n'}
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t k = 0; k < dm; ++k)
        push(add(tp.b_element(nb[i], br(nb[j], mb[k])), tp.b_element(nb[i], br(mb[k], nb[j]))));
  // (5a)-(5d): A(u,v) = B(u,v) for u, v among [m,n] and [n,m]. Both slots
  // are bilinear, so a basis of the span of those commutators suffices.
  std::vector<Vector> comms;
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < dn; ++j) {
      comms.push_back(br(mb[i], nb[j]));
      comms.push_back(br(nb[j], mb[i]));
    }
  }
  Subspace p = Subspace::span(g.field(), g.dim(), comms);
  std::vector<Vector> pb = p.basis_vectors();
  for (const auto& u : pb)
    for (const auto& v : pb) push(sub(tp.a_element(u, v), tp.b_element(u, v)));
  return rels;
}

// m-coordinates and n-coordinates of c(x).
std::pair<Vector, Vector> commutator_coordinates(const TensorPresentation& tp, const Vector& x) {
  Vector c = tp.symbol_commutator.apply(x);
  return {tp.m.coordinates(c), tp.n.coordinates(c)};
}

Vector outer_a(const TensorPresentation& tp, const Vector& alpha, const Vector& beta) {
  Vector out = zero_vector(tp.g.field(), tp.symbol_count());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].is_zero()) continue;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (!beta[j].is_zero()) out[tp.a_index(i, j)] += alpha[i] * beta[j];
    }
  }
  return out;
}

void finish(TensorPresentation& tp, const std::vector<Vector>& rels) {
  Field f = tp.g.field();
  std::size_t ns = tp.symbol_count();
  tp.relations = Subspace::span(f, ns, rels);
  // The bracket descends iff c kills every relation (both slots factor
  // through c).
  for (std::size_t r = 0; r < tp.relations.dim(); ++r) {
    if (!is_zero(tp.symbol_commutator.apply(tp.relations.basis_vector(r)))) {
      throw Error(ErrorCode::BracketNotWellDefined, "relation " + std::to_string(r) + " has nonzero commutator");
    }
  }
  tp.quotient = quotient_basis(tp.relations, Subspace::full(f, ns));
  std::size_t q = tp.quotient.dim();
  std::vector<std::string> labels;
  std::vector<Vector> left, right;
  for (std::size_t a = 0; a < q; ++a) {
    std::size_t s = tp.quotient.complement.pivots()[a];
    labels.push_back(tp.symbol_name(s));
    auto [cm, cn] = commutator_coordinates(tp, unit_vector(f, ns, s));
    left.push_back(std::move(cm));
    right.push_back(std::move(cn));
  }
  tp.algebra = LeibnizAlgebra(f, labels);
  for (std::size_t a = 0; a < q; ++a) {
    if (is_zero(left[a])) continue;
    for (std::size_t b = 0; b < q; ++b) {
      if (is_zero(right[b])) continue;
      tp.algebra.set_bracket(a, b, tp.class_of(outer_a(tp, left[a], right[b])));
    }
  }
}

}  // namespace

Symbol TensorPresentation::symbol(std::size_t index) const {
  if (index >= symbol_count()) throw Error(ErrorCode::LengthMismatch, "symbol index out of range");
  if (index < dm() * dn()) return {'A', index / dn(), index % dn()};
  std::size_t r = index - dm() * dn();
  return {'B', r / dm(), r % dm()};
}

std::string TensorPresentation::symbol_name(std::size_t index) const {
  Symbol s = symbol(index);
  const char* sep = kind == TensorKind::Tensor ? "*" : "^";
  if (s.side == 'A') return vector_name(g, m, s.i, "m") + sep + vector_name(g, n, s.j, "n");
  return vector_name(g, n, s.i, "n") + sep + vector_name(g, m, s.j, "m");
}

Vector TensorPresentation::a_element(const Vector& u, const Vector& v) const {
  return outer_a(*this, m.coordinates(u), n.coordinates(v));
}

Vector TensorPresentation::b_element(const Vector& u, const Vector& v) const {
  Vector alpha = n.coordinates(u);
  Vector beta = m.coordinates(v);
  Vector out = zero_vector(g.field(), symbol_count());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].is_zero()) continue;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (!beta[j].is_zero()) out[b_index(i, j)] += alpha[i] * beta[j];
    }
  }
  return out;
}

Vector TensorPresentation::symbol_bracket(const Vector& x, const Vector& y) const {
  Vector cx = m.coordinates(symbol_commutator.apply(x));
  Vector cy = n.coordinates(symbol_commutator.apply(y));
  return outer_a(*this, cx, cy);
}

TensorPresentation tensor_product(const LeibnizAlgebra& g, const Subspace& m, const Subspace& n) {
  TensorPresentation tp = base_presentation(g, m, n);
  finish(tp, tensor_relations(tp));
  return tp;
}

std::vector<Vector> square_generators(const TensorPresentation& tp) {
  Subspace common = intersect(tp.m, tp.n);
  std::vector<Vector> cb = common.basis_vectors();
  std::vector<Vector> out;
  for (const auto& a : cb) {
    for (const auto& b : cb) out.push_back(sub(tp.a_element(a, b), tp.b_element(a, b)));
  }
  return out;
}

Subspace square_subspace(const TensorPresentation& tp) {
  std::vector<Vector> classes;
  for (const auto& s : square_generators(tp)) classes.push_back(tp.class_of(s));
  return Subspace::span(tp.g.field(), tp.dim(), classes);
}

TensorPresentation exterior_product(const LeibnizAlgebra& g, const Subspace& m, const Subspace& n) {
  TensorPresentation tp = base_presentation(g, m, n);
  tp.kind = TensorKind::Exterior;
  std::vector<Vector> rels = tensor_relations(tp);
  // Square elements have zero commutator, so they are central and the
  // bracket descends; finish() re-checks this.
  for (auto& s : square_generators(tp)) rels.push_back(std::move(s));
  finish(tp, rels);
  return tp;
}

Matrix commutator_map(const TensorPresentation& tp) {
  for (std::size_t r = 0; r < tp.relations.dim(); ++r) {
    if (!is_zero(tp.symbol_commutator.apply(tp.relations.basis_vector(r)))) {
      throw Error(ErrorCode::RelationNotKilled, "commutator map does not vanish on relation " + std::to_string(r));
    }
  }
  return tp.symbol_commutator * tp.quotient.section;
}

namespace {

// Matrix of a symbol-level map into `target`, checked to send relations
// into relations.
Matrix descend(const TensorPresentation& source, const TensorPresentation& target, const std::vector<Vector>& images) {
  Matrix s = Matrix::from_columns(source.g.field(), target.symbol_count(), images);
  Matrix on_relations = target.quotient.projection * s * source.relations.inclusion();
  if (!on_relations.is_zero()) throw Error(ErrorCode::RelationNotKilled, "induced map does not preserve relations");
  return target.quotient.projection * s * source.quotient.section;
}

}  // namespace

ExteriorSequence induced_exterior_maps(const LeibnizAlgebra& g, const Subspace& k, const Subspace& n) {
  if (!n.contains(k)) throw Error(ErrorCode::SubspaceNotContained, "k must lie in n");
  Subspace full = full_space(g);
  ExteriorSequence out{exterior_product(g, full, k), exterior_product(g, full, n), {}, quotient_algebra(g, k), {}, {}};
  const LeibnizAlgebra& q = out.g_mod_k.algebra;
  const Matrix& pi = out.g_mod_k.basis.projection;
  out.quotient = exterior_product(q, full_space(q), image(pi, n));

  std::vector<Vector> images1;
  const TensorPresentation& gk = out.gk;
  for (std::size_t s = 0; s < gk.symbol_count(); ++s) {
    Symbol sym = gk.symbol(s);
    images1.push_back(sym.side == 'A' ? out.gn.a_element(gk.m_basis[sym.i], gk.n_basis[sym.j])
                                      : out.gn.b_element(gk.n_basis[sym.i], gk.m_basis[sym.j]));
  }
  out.map1 = descend(gk, out.gn, images1);

  std::vector<Vector> images2;
  const TensorPresentation& gn = out.gn;
  for (std::size_t s = 0; s < gn.symbol_count(); ++s) {
    Symbol sym = gn.symbol(s);
    images2.push_back(sym.side == 'A'
                          ? out.quotient.a_element(pi.apply(gn.m_basis[sym.i]), pi.apply(gn.n_basis[sym.j]))
                          : out.quotient.b_element(pi.apply(gn.n_basis[sym.i]), pi.apply(gn.m_basis[sym.j])));
  }
  out.map2 = descend(gn, out.quotient, images2);
  return out;
}

BFactor b_factor(const Matrix& bar1, const Matrix& iota1, const Matrix& bar2, const Matrix& iota2) {
  if (bar1.cols() != iota1.cols() || bar2.cols() != iota2.cols()) {
    throw Error(ErrorCode::LengthMismatch, "spanning families must match");
  }
  Field f = bar1.field();
  BFactor b;
  b.nbar1 = bar1.rows();
  b.gbar1 = iota1.rows();
  b.nbar2 = bar2.rows();
  b.gbar2 = iota2.rows();
  std::vector<Vector> gens;
  for (std::size_t s = 0; s < bar1.cols(); ++s) {
    Vector x1 = bar1.column(s);
    Vector y1 = iota1.column(s);
    for (std::size_t t = 0; t < bar2.cols(); ++t) {
      Vector x2 = bar2.column(t);
      Vector y2 = iota2.column(t);
      Vector first = zero_vector(f, b.space_dim());
      Vector second = zero_vector(f, b.space_dim());
      for (std::size_t i = 0; i < b.nbar1; ++i) {
        for (std::size_t j = 0; j < b.gbar2; ++j) {
          first[b.v1(i, j)] += x1[i] * y2[j];
          second[b.v2(j, i)] += y2[j] * x1[i];
        }
      }
      for (std::size_t i = 0; i < b.gbar1; ++i) {
        for (std::size_t j = 0; j < b.nbar2; ++j) {
          first[b.v3(i, j)] -= y1[i] * x2[j];
          second[b.v4(j, i)] -= x2[j] * y1[i];
        }
      }
      gens.push_back(std::move(first));
      gens.push_back(std::move(second));
    }
  }
  b.a = Subspace::span(f, b.space_dim(), gens);
  b.quotient = quotient_basis(b.a, Subspace::full(f, b.space_dim()));
  return b;
}

BFactor direct_sum_b_factor(const Pair& p1, const Pair& p2) {
  auto families = [](const Pair& p) {
    Subspace gn = product_ideal(p.g, full_space(p.g), p.n);
    QuotientBasis nbar = quotient_basis(gn, p.n);
    QuotientBasis gbar = quotient_basis(derived(p.g), full_space(p.g));
    Matrix inc = p.n.inclusion();
    return std::pair<Matrix, Matrix>{nbar.projection * inc, gbar.projection * inc};
  };
  auto [bar1, iota1] = families(p1);
  auto [bar2, iota2] = families(p2);
  return b_factor(bar1, iota1, bar2, iota2);
}

DecompositionReport direct_sum_decomposition_check(const Pair& p1, const Pair& p2) {
  Pair sum_pair = direct_sum_pair(p1, p2);
  DecompositionReport r;
  r.direct = exterior_product(sum_pair.g, full_space(sum_pair.g), sum_pair.n).dim();
  r.first = exterior_product(p1.g, full_space(p1.g), p1.n).dim();
  r.second = exterior_product(p2.g, full_space(p2.g), p2.n).dim();
  r.b_factor = direct_sum_b_factor(p1, p2).dim();
  return r;
}

}  // namespace leibniz
