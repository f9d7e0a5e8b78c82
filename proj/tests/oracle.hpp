#pragma once

// Reference computations for tests. Dense rational matrices and plain
// Gaussian elimination, sharing no code with the library's linear algebra.

#include <vector>

#include "leibniz/algebra.hpp"

namespace oracle {

using leibniz::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline std::size_t rank(Dense m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Structure constants c[i][j][k] over Q.
struct Table {
  std::size_t d = 0;
  std::vector<Rational> c;
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * d + j) * d + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * d + j) * d + k]; }
};

inline Table table_of(const leibniz::LeibnizAlgebra& g) {
  Table t{g.dim(), std::vector<Rational>(g.dim() * g.dim() * g.dim())};
  for (std::size_t i = 0; i < t.d; ++i) {
    for (std::size_t j = 0; j < t.d; ++j) {
      for (std::size_t k = 0; k < t.d; ++k) t.at(i, j, k) = g.constant(i, j, k).to_rational();
    }
  }
  return t;
}

inline std::vector<Rational> bracket(const Table& t, const std::vector<Rational>& u, const std::vector<Rational>& v) {
  std::vector<Rational> out(t.d);
  for (std::size_t i = 0; i < t.d; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < t.d; ++j) {
      if (v[j] == 0) continue;
      for (std::size_t k = 0; k < t.d; ++k) out[k] += u[i] * v[j] * t.at(i, j, k);
    }
  }
  return out;
}

inline std::vector<Rational> unit(std::size_t d, std::size_t i) {
  std::vector<Rational> v(d);
  v[i] = 1;
  return v;
}

inline bool leibniz_identity_holds(const leibniz::LeibnizAlgebra& g) {
  Table t = table_of(g);
  for (std::size_t i = 0; i < t.d; ++i) {
    for (std::size_t j = 0; j < t.d; ++j) {
      for (std::size_t k = 0; k < t.d; ++k) {
        auto x = unit(t.d, i), y = unit(t.d, j), z = unit(t.d, k);
        auto lhs = bracket(t, bracket(t, x, y), z);
        auto r1 = bracket(t, bracket(t, x, z), y);
        auto r2 = bracket(t, x, bracket(t, y, z));
        for (std::size_t a = 0; a < t.d; ++a) {
          if (lhs[a] != r1[a] + r2[a]) return false;
        }
      }
    }
  }
  return true;
}

inline std::size_t center_dim(const leibniz::LeibnizAlgebra& g) {
  Table t = table_of(g);
  Dense m;
  for (std::size_t i = 0; i < t.d; ++i) {
    for (std::size_t k = 0; k < t.d; ++k) {
      std::vector<Rational> left(t.d), right(t.d);
      for (std::size_t j = 0; j < t.d; ++j) {
        left[j] = t.at(i, j, k);
        right[j] = t.at(j, i, k);
      }
      m.push_back(left);
      m.push_back(right);
    }
  }
  return t.d - rank(m);
}

// Re-expresses the table in a basis whose first k vectors span n.
inline Table adapted_table(const Table& t, const Dense& n_basis) {
  std::size_t d = t.d;
  Dense basis = n_basis;
  for (std::size_t i = 0; i < d && basis.size() < d; ++i) {
    Dense trial = basis;
    trial.push_back(unit(d, i));
    if (rank(trial) == trial.size()) basis.push_back(unit(d, i));
  }
  // Invert the change of basis by solving B^T y = v for each bracket.
  auto solve = [&](const std::vector<Rational>& v) {
    Dense aug(d, std::vector<Rational>(d + 1));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) aug[r][c] = basis[c][r];
      aug[r][d] = v[r];
    }
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t p = c;
      while (aug[p][c] == 0) ++p;
      std::swap(aug[p], aug[c]);
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || aug[r][c] == 0) continue;
        Rational f = aug[r][c] / aug[c][c];
        for (std::size_t k = c; k <= d; ++k) aug[r][k] -= f * aug[c][k];
      }
    }
    std::vector<Rational> y(d);
    for (std::size_t c = 0; c < d; ++c) y[c] = aug[c][d] / aug[c][c];
    return y;
  };
  Table out{d, std::vector<Rational>(d * d * d)};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto y = solve(bracket(t, basis[i], basis[j]));
      for (std::size_t k = 0; k < d; ++k) out.at(i, j, k) = y[k];
    }
  }
  return out;
}

// Columns of the Leibniz boundary restricted to tensors with some factor
// in n = span(e_0..e_{k-1}); rows are all of g^{(deg-1)}.
inline Dense boundary_on_kernel(const Table& t, std::size_t k, std::size_t deg) {
  std::size_t d = t.d;
  std::size_t in_size = 1, out_size = 1;
  for (std::size_t i = 0; i < deg; ++i) in_size *= d;
  for (std::size_t i = 0; i + 1 < deg; ++i) out_size *= d;
  Dense cols;
  std::vector<std::size_t> x(deg);
  for (std::size_t idx = 0; idx < in_size; ++idx) {
    std::size_t rest = idx;
    bool touches_n = false;
    for (std::size_t p = deg; p-- > 0;) {
      x[p] = rest % d;
      rest /= d;
      touches_n = touches_n || x[p] < k;
    }
    if (!touches_n) continue;
    std::vector<Rational> col(out_size);
    for (std::size_t i = 0; i < deg; ++i) {
      for (std::size_t j = i + 1; j < deg; ++j) {
        // 1-based sign (-1)^{j+1} for 0-based j.
        int sign = (j + 1) % 2 == 0 ? 1 : -1;
        for (std::size_t a = 0; a < d; ++a) {
          const Rational& c = t.at(x[i], x[j], a);
          if (c == 0) continue;
          std::size_t out = 0;
          for (std::size_t p = 0; p < deg; ++p) {
            if (p == j) continue;
            out = out * d + (p == i ? a : x[p]);
          }
          col[out] += sign * c;
        }
      }
    }
    cols.push_back(col);
  }
  return cols;  // transposed: each entry is one column
}

// HL_2(g,n) as H_2 of the kernel subcomplex of CL(g) -> CL(g/n).
inline std::size_t hl2(const leibniz::LeibnizAlgebra& g, const leibniz::Subspace& n) {
  Table t = table_of(g);
  Dense nb;
  for (const auto& v : n.basis_vectors()) {
    std::vector<Rational> r;
    for (const auto& s : v) r.push_back(s.to_rational());
    nb.push_back(r);
  }
  Table a = adapted_table(t, nb);
  std::size_t k = nb.size();
  Dense d2 = boundary_on_kernel(a, k, 2);
  Dense d3 = boundary_on_kernel(a, k, 3);
  // Rank of a column set equals the rank of the transposed matrix.
  return d2.size() - rank(d2) - rank(d3);
}

inline std::size_t hl2(const leibniz::LeibnizAlgebra& g) {
  return hl2(g, leibniz::Subspace::full(g.field(), g.dim()));
}

}  // namespace oracle
