#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "leibniz/tensor.hpp"

namespace leibniz {

enum class HomologyMethod { Exterior, Cone, Tau, Star, Quotient };

std::string_view to_string(HomologyMethod method);

struct HomologyResult {
  std::size_t dim = 0;
  /// Cycle representatives in the method's own coordinates.
  Subspace representatives;
  HomologyMethod method = HomologyMethod::Exterior;
};

/// Leibniz boundary CL_n(g) -> CL_{n-1}(g) on lexicographic tensor
/// coordinates; CL_0 is the ground field and the boundary out of CL_1 is 0.
Matrix leibniz_boundary(const LeibnizAlgebra& g, std::size_t n);
/// x_1 ⊗ ... ⊗ x_n -> f x_1 ⊗ ... ⊗ f x_n, with CL_0 mapped identically.
Matrix tensor_power(const Matrix& f, std::size_t n);

struct ChainComplexSlice {
  /// dims[n] = dim CL_n for n = 0..top.
  std::vector<std::size_t> dims;
  /// boundaries[n] = ∂_n for n = 1..top (index 0 unused).
  std::vector<Matrix> boundaries;
};

ChainComplexSlice leibniz_complex(const LeibnizAlgebra& g, std::size_t top);

/// M_n = CL_{n-1}(g) ⊕ CL_n(g/n), δ_n(a,b) = (-∂_{n-1} a, ∂̄_n b + π a).
struct MappingCone {
  std::vector<std::size_t> dims;
  /// deltas[n] = δ_n for n = 1..top (index 0 unused).
  std::vector<Matrix> deltas;
};

/// Builds M_0..M_top and asserts δδ = 0 (throws InvalidInput otherwise).
MappingCone mapping_cone(const Pair& p, std::size_t top);

/// LEIBNIZ_DIM_CAP if set, else 8.
std::size_t default_dimension_cap();

/// n/[g,n].
HomologyResult hl1(const Pair& p);
/// Kernel of the commutator map g∧n -> g.
HomologyResult hl2_exterior(const Pair& p);
/// H_3 of the mapping cone. Throws DimensionCapExceeded above the cap.
HomologyResult hl2_cone(const Pair& p, std::optional<std::size_t> cap = std::nullopt);
/// Cokernel of τ: n⊗n -> (g/g²⊗n) ⊕ (n⊗g/g²). Throws IdealNotCentral.
HomologyResult hl2_central_tau(const Pair& p);
/// (g^ab * n)/⟨n̄*n - n*n̄⟩ built from the trivial-action tensor product.
/// Throws IdealNotCentral.
HomologyResult hl2_central_star(const Pair& p);

/// dim HL_2(g) for the full pair, by the exterior method.
std::size_t hl2_dim(const LeibnizAlgebra& g);
std::size_t hl2_dim(const Pair& p);

struct KunnethReport {
  std::size_t direct = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t b_factor = 0;
  bool holds() const { return direct == first + second + b_factor; }
};

/// HL_2(g1⊕g2, n1⊕n2) against HL_2(g1,n1) + HL_2(g2,n2) + dim B.
KunnethReport kunneth_check(const Pair& p1, const Pair& p2);

struct BoundReport {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool holds() const { return lhs <= rhs; }
  bool equality() const { return lhs == rhs; }
  std::size_t slack() const { return rhs >= lhs ? rhs - lhs : 0; }
};

/// dim HL_2(g,n) <= dim HL_2(g/(g²∩n), n/(g²∩n)) + 2 dim(g²∩n) d(g/Z(g,n)).
/// Throws NotNilpotent.
BoundReport bound_theorem36(const Pair& p);

struct Cor39Report {
  BoundReport bound;
  bool abelian = false;
  /// Equality holds exactly when g is abelian.
  bool equality_matches() const { return bound.equality() == abelian; }
};

/// dim HL_2(g) <= (dim g - dim g²)² + 2 dim(g²) d(g/Z(g)). Throws NotNilpotent.
Cor39Report bound_cor39(const LeibnizAlgebra& g);

struct SplitReport {
  std::size_t whole = 0;
  std::size_t pair = 0;
  std::size_t quotient = 0;
  bool holds() const { return whole == pair + quotient; }
};

/// dim HL_2(g) = dim HL_2(g,n) + dim HL_2(g/n) when n has an ideal
/// complement. Throws NotAComplement.
SplitReport complement_split_check(const Pair& p, const Subspace& complement);

struct SnakeReport {
  std::size_t quotient = 0;
  std::size_t pair = 0;
  std::size_t intersection = 0;
  bool central = false;
  bool holds() const { return quotient <= pair + intersection; }
  /// For central n, dim HL_2(g/k, n/k) <= dim HL_2(g,n); true otherwise.
  bool sharp_holds() const { return !central || quotient <= pair; }
};

/// Throws NotCentralInPair unless k ⊆ Z(g) ∩ n.
SnakeReport snake_inequality_check(const LeibnizAlgebra& g, const Subspace& n, const Subspace& k);

/// t = dim HL_2(e) - ((dim e - 1)² - 1) for an extra special e.
long long extra_special_t(const LeibnizAlgebra& e);

}  // namespace leibniz
