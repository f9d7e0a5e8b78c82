#include "leibniz/classify.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

void require_nilpotent(const LeibnizAlgebra& g) {
  if (!is_nilpotent(g)) throw Error(ErrorCode::NotNilpotent, "the classification needs a nilpotent algebra");
}

Subspace complement_of(const Subspace& a, const Subspace& b) { return quotient_basis(a, b).complement; }

bool is_direct_sum(const Subspace& a, const Subspace& b) {
  return intersect(a, b).is_zero() && sum(a, b).is_full();
}

CaseCheck make_check(CaseKind kind, long long k, long long d) {
  CaseCheck c;
  c.kind = kind;
  c.k = k;
  c.defect_matches = d == k;
  return c;
}

CaseCheck check_abelian(const Pair& p, long long d) {
  CaseCheck c = make_check(CaseKind::Abelian, 0, d);
  if (is_abelian(p.g)) {
    c.condition = Condition::Holds;
    c.reason = "g is abelian";
  } else if (p.n.is_zero()) {
    c.condition = Condition::Holds;
    c.reason = "n = 0, so HL_2 and the bound both vanish";
  } else {
    c.reason = "g is not abelian";
  }
  return c;
}

// g = e ⊕ a(q) with n = e². Canonical witness: a is a complement of g² in
// Z(g) and e is g² plus a complement of Z(g).
CaseCheck check_extra_special(const Pair& p, long long d, Evidence& ev) {
  CaseCheck c = make_check(CaseKind::ExtraSpecialCommutator, 1, d);
  const LeibnizAlgebra& g = p.g;
  Subspace g2 = derived(g);
  if (g2.dim() != 1) {
    c.reason = "dim g^2 = " + std::to_string(g2.dim()) + ", not 1";
    return c;
  }
  if (p.n != g2) {
    c.reason = "n differs from g^2";
    return c;
  }
  Subspace z = center(g);
  Subspace a = complement_of(g2, z);
  Subspace e = sum(g2, complement_of(z, full_space(g)));
  if (is_ideal(g, e) && is_direct_sum(e, a) && is_extra_special(restrict_to(g, e))) {
    c.condition = Condition::Holds;
    c.reason = "g = e + a(q) with n = e^2";
    ev.decomposition_found = true;
    ev.witness = "e = " + format_subspace(g, e) + ", a = " + format_subspace(g, a);
  } else {
    c.condition = Condition::NoWitness;
    c.reason = "no extra special summand found";
  }
  return c;
}

// g = m ⊕ n with dim m² = 1 and n one-dimensional central. Since n is
// central, m² = g², so the canonical witness is g² plus a complement of
// g² + n.
CaseCheck check_central_summand(const Pair& p, long long d, const std::vector<Subspace>& candidates, Evidence& ev) {
  CaseCheck c = make_check(CaseKind::OneDimCentralSummand, 2, d);
  const LeibnizAlgebra& g = p.g;
  Subspace g2 = derived(g);
  if (p.n.dim() != 1) {
    c.reason = "dim n = " + std::to_string(p.n.dim()) + ", not 1";
    return c;
  }
  if (!center(g).contains(p.n)) {
    c.reason = "n is not central";
    return c;
  }
  if (g2.dim() != 1) {
    c.reason = "dim g^2 = " + std::to_string(g2.dim()) + ", not 1";
    return c;
  }
  if (g2.contains(p.n)) {
    c.reason = "n lies in g^2";
    return c;
  }
  std::vector<Subspace> tries = {sum(g2, complement_of(sum(g2, p.n), full_space(g)))};
  tries.insert(tries.end(), candidates.begin(), candidates.end());
  for (const auto& m : tries) {
    if (m.ambient_dim() != g.dim()) continue;
    if (!is_ideal(g, m) || !is_direct_sum(m, p.n)) continue;
    if (derived(restrict_to(g, m)).dim() != 1) continue;
    c.condition = Condition::Holds;
    c.reason = "g = m + n with dim m^2 = 1";
    ev.decomposition_found = true;
    ev.witness = "m = " + format_subspace(g, m);
    return c;
  }
  c.condition = Condition::NoWitness;
  c.reason = "no complement m with dim m^2 = 1 found";
  return c;
}

CaseCheck check_defect_three(const Pair& p, long long d) {
  CaseCheck c = make_check(CaseKind::Unclassified, 3, d);
  const LeibnizAlgebra& g = p.g;
  Subspace g2 = derived(g);
  Subspace z = center(g);
  bool a = g2.dim() == 2 && p.n.dim() == 1 && intersect(z, g2).contains(p.n);
  bool b = g2.dim() == 1 && p.n.dim() == 2 && p.n.contains(g2) && z.contains(p.n);
  if (a) {
    c.kind = CaseKind::Case3a;
    c.condition = Condition::Holds;
    c.reason = "dim g^2 = 2 and n is a line in Z(g) ∩ g^2";
  } else if (b) {
    c.kind = CaseKind::Case3b;
    c.condition = Condition::Holds;
    c.reason = "dim g^2 = 1 and n is a plane with g^2 ⊆ n ⊆ Z(g)";
  } else {
    c.reason = "dim g^2 = " + std::to_string(g2.dim()) + ", dim n = " + std::to_string(p.n.dim()) +
               (z.contains(p.n) ? ", n central" : ", n not central");
  }
  return c;
}

ClassificationVerdict base_verdict(const Pair& p) {
  require_nilpotent(p.g);
  ClassificationVerdict v;
  v.n = p.n.dim();
  v.m = p.g.dim() - v.n;
  v.hl2_dim = hl2_dim(p);
  v.defect = static_cast<long long>(v.n * (v.n + 2 * v.m)) - static_cast<long long>(v.hl2_dim);
  Subspace z = center(p.g);
  v.evidence.dim_g2 = derived(p.g).dim();
  v.evidence.dim_center = z.dim();
  v.evidence.dim_center_cap_n = intersect(z, p.n).dim();
  v.evidence.n_central = z.contains(p.n);
  return v;
}

void finish(ClassificationVerdict& v) {
  v.matched_case = CaseKind::Unclassified;
  for (const auto& c : v.checks) {
    if (c.condition == Condition::Holds && c.defect_matches) {
      v.matched_case = c.kind;
      break;
    }
  }
}

}  // namespace

long long defect(const Pair& p) {
  long long n = static_cast<long long>(p.n.dim());
  long long m = static_cast<long long>(p.g.dim()) - n;
  return n * (n + 2 * m) - static_cast<long long>(hl2_dim(p));
}

std::string_view to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Abelian: return "abelian";
    case CaseKind::ExtraSpecialCommutator: return "extra-special-commutator";
    case CaseKind::OneDimCentralSummand: return "one-dim-central-summand";
    case CaseKind::Case3a: return "case-3a";
    case CaseKind::Case3b: return "case-3b";
    case CaseKind::Unclassified: return "unclassified";
  }
  return "unknown";
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Holds: return "holds";
    case Condition::Violated: return "violated";
    case Condition::NoWitness: return "no-witness";
  }
  return "unknown";
}

bool ClassificationVerdict::consistent() const {
  for (const auto& c : checks) {
    if (!c.consistent()) return false;
  }
  return true;
}

ClassificationVerdict theorem41_verdict(const Pair& p, const std::vector<Subspace>& candidates) {
  ClassificationVerdict v = base_verdict(p);
  v.checks.push_back(check_abelian(p, v.defect));
  v.checks.push_back(check_extra_special(p, v.defect, v.evidence));
  v.checks.push_back(check_central_summand(p, v.defect, candidates, v.evidence));
  finish(v);
  return v;
}

ClassificationVerdict theorem42_verdict(const Pair& p) {
  ClassificationVerdict v = base_verdict(p);
  v.checks.push_back(check_defect_three(p, v.defect));
  finish(v);
  return v;
}

ClassificationVerdict classify(const Pair& p, const std::vector<Subspace>& candidates) {
  ClassificationVerdict v = theorem41_verdict(p, candidates);
  v.checks.push_back(check_defect_three(p, v.defect));
  finish(v);
  return v;
}

std::string_view to_string(Prop43Row row) {
  switch (row) {
    case Prop43Row::CentralWithoutSquare: return "central-without-square";
    case Prop43Row::CentralWithSquare: return "central-with-square";
    case Prop43Row::NonCentral: return "non-central";
  }
  return "unknown";
}

LeibnizAlgebra extra_special_sum(const std::string& e, std::size_t q) {
  LeibnizAlgebra base;
  if (e == "J1") {
    base = catalog::j1();
  } else if (e == "J2") {
    base = catalog::j2();
  } else if (e == "H1") {
    base = catalog::h1();
  } else {
    throw Error(ErrorCode::ShapeMismatch, "expected J1, J2 or H1, got " + e);
  }
  return direct_sum(base, catalog::abelian(q));
}

Prop43Result prop43_table(const std::string& e, std::size_t q, const Subspace& n) {
  LeibnizAlgebra g = extra_special_sum(e, q);
  if (n.ambient_dim() != g.dim() || n.dim() != 2) {
    throw Error(ErrorCode::ShapeMismatch, "the table needs a 2-dimensional ideal of " + e + "+a(" + std::to_string(q) + ")");
  }
  Pair p = Pair::make(g, n);
  Prop43Result r;
  r.e = e;
  r.q = q;
  r.n = n;
  if (!center(g).contains(n)) {
    r.row = Prop43Row::NonCentral;
  } else if (n.contains(derived(g))) {
    r.row = Prop43Row::CentralWithSquare;
  } else {
    r.row = Prop43Row::CentralWithoutSquare;
  }
  const std::size_t table[3][3] = {
      {4 * q, 4 * q + 1, 2 * q + 1},
      {4 * (q + 1), 4 * q + 5, 2 * q + 3},
      {4 * (q + 1), 4 * q + 5, 2 * (q + 2)},
  };
  std::size_t which = e == "J1" ? 0 : (e == "J2" ? 1 : 2);
  r.expected = table[which][static_cast<std::size_t>(r.row)];
  r.actual = hl2_dim(p);
  return r;
}

Prop43Result prop43_central(const std::string& e, std::size_t q, const Subspace& n) {
  LeibnizAlgebra g = extra_special_sum(e, q);
  if (n.ambient_dim() != g.dim() || !n.contains(derived(g)) || !center(g).contains(n)) {
    throw Error(ErrorCode::ShapeMismatch, "needs e^2 ⊆ n ⊆ Z(g)");
  }
  Prop43Result r;
  r.e = e;
  r.q = q;
  r.n = n;
  r.row = Prop43Row::CentralWithSquare;
  long long dg = static_cast<long long>(g.dim());
  long long dn = static_cast<long long>(n.dim());
  r.expected = static_cast<std::size_t>(2 * dg * dn - (dn + 1) * (dn + 1) + 2);
  r.actual = hl2_dim(Pair::make(g, n));
  return r;
}

std::vector<Prop43Result> prop43_sweep(std::size_t q_max) {
  std::vector<Prop43Result> out;
  for (const std::string e : {"J1", "J2", "H1"}) {
    for (std::size_t q = 0; q <= q_max; ++q) {
      LeibnizAlgebra g = extra_special_sum(e, q);
      const Field f = g.field();
      const std::size_t s = g.dim() - q;
      const std::size_t d = g.dim();
      auto u = [&](std::size_t i) { return unit_vector(f, d, i); };
      auto a = [&](std::size_t i) { return u(s + i); };
      Vector sq = u(s - 1);
      std::vector<std::vector<Vector>> gens;
      if (q >= 2) {
        gens.push_back({a(0), a(1)});
        gens.push_back({add(sq, a(0)), a(1)});
      }
      if (q >= 1) gens.push_back({sq, a(0)});
      if (q >= 2) gens.push_back({sq, add(a(0), a(1))});
      if (e == "J1") {
        gens.push_back({sq, u(0)});
        if (q >= 1) gens.push_back({sq, add(u(0), a(0))});
      } else {
        gens.push_back({sq, u(0)});
        gens.push_back({sq, u(1)});
        gens.push_back({sq, add(u(0), u(1))});
        if (q >= 1) gens.push_back({sq, add(sub(u(0), u(1)), a(0))});
      }
      for (const auto& gs : gens) out.push_back(prop43_table(e, q, Subspace::span(f, d, gs)));
    }
  }
  return out;
}

std::vector<SmallIdealCase> small_ideal_table() {
  std::vector<SmallIdealCase> out;
  const std::vector<std::pair<long long, long long>> planes = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}};
  for (const std::string e : {"J2", "H1"}) {
    LeibnizAlgebra g = e == "J2" ? catalog::j2() : catalog::h1();
    const Field f = g.field();
    Vector z = unit_vector(f, 3, 2);
    auto push = [&](const Subspace& n, std::size_t expected) {
      out.push_back({e, n, expected, hl2_dim(Pair::make(g, n))});
    };
    push(Subspace::span(f, 3, {z}), 4);
    for (const auto& [a, b] : planes) {
      Vector v{Scalar(f, a), Scalar(f, b), Scalar(f)};
      push(Subspace::span(f, 3, {z, v}), e == "J2" ? 3 : 4);
    }
    push(full_space(g), e == "J2" ? 4 : 5);
  }
  return out;
}

}  // namespace leibniz
