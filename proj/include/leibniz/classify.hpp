#pragma once

#include <string>
#include <vector>

#include "leibniz/homology.hpp"

namespace leibniz {

/// n(n+2m) - dim HL_2(g,n) with n = dim n, m = dim g/n.
long long defect(const Pair& p);

enum class CaseKind {
  Abelian,
  ExtraSpecialCommutator,
  OneDimCentralSummand,
  Case3a,
  Case3b,
  Unclassified,
};

std::string_view to_string(CaseKind kind);

enum class Condition { Holds, Violated, NoWitness };

std::string_view to_string(Condition c);

/// The structural condition attached to defect k, tested without looking
/// at homology.
struct CaseCheck {
  CaseKind kind = CaseKind::Unclassified;
  long long k = 0;
  Condition condition = Condition::Violated;
  bool defect_matches = false;
  std::string reason;

  /// Both directions: the condition holds exactly when the defect is k.
  bool consistent() const { return (condition == Condition::Holds) == defect_matches; }
  /// Defect is k but no decomposition was found.
  bool soft_failure() const { return condition == Condition::NoWitness && defect_matches; }
};

struct Evidence {
  std::size_t dim_g2 = 0;
  std::size_t dim_center = 0;
  std::size_t dim_center_cap_n = 0;
  bool n_central = false;
  bool decomposition_found = false;
  /// Basis description of the witnessing decomposition, if any.
  std::string witness;
};

struct ClassificationVerdict {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t hl2_dim = 0;
  long long defect = 0;
  CaseKind matched_case = CaseKind::Unclassified;
  Evidence evidence;
  std::vector<CaseCheck> checks;

  bool consistent() const;
};

/// Checks for k = 0, 1, 2. Extra candidates are tried as the complement m in
/// g = m ⊕ n (and as the abelian summand for k = 1) when the canonical choice
/// fails. Throws NotNilpotent.
ClassificationVerdict theorem41_verdict(const Pair& p, const std::vector<Subspace>& candidates = {});
/// The k = 3 check (cases a and b). Throws NotNilpotent.
ClassificationVerdict theorem42_verdict(const Pair& p);
/// All four checks. Throws NotNilpotent.
ClassificationVerdict classify(const Pair& p, const std::vector<Subspace>& candidates = {});

enum class Prop43Row {
  /// n ⊆ Z(g) with e² ⊄ n.
  CentralWithoutSquare,
  /// e² ⊆ n ⊆ Z(g).
  CentralWithSquare,
  /// n ⊄ Z(g).
  NonCentral,
};

std::string_view to_string(Prop43Row row);

struct Prop43Result {
  std::string e;
  std::size_t q = 0;
  Subspace n;
  Prop43Row row = Prop43Row::NonCentral;
  std::size_t expected = 0;
  std::size_t actual = 0;
  bool matches() const { return expected == actual; }
};

/// e ⊕ a(q) for e in {J1, J2, H1}, with e on the first coordinates.
/// Throws ShapeMismatch for other names.
LeibnizAlgebra extra_special_sum(const std::string& e, std::size_t q);

/// Row, tabulated value and computed value for a 2-dimensional ideal n of
/// e ⊕ a(q). Throws ShapeMismatch or NotAnIdeal.
Prop43Result prop43_table(const std::string& e, std::size_t q, const Subspace& n);

/// 2 dim g dim n - (dim n + 1)² + 2 against the computed value, for
/// e² ⊆ n ⊆ Z(g). Throws ShapeMismatch.
Prop43Result prop43_central(const std::string& e, std::size_t q, const Subspace& n);

/// Representative ideals of every realizable row, for e in {J1, J2, H1}.
std::vector<Prop43Result> prop43_sweep(std::size_t q_max);

/// Representative non-zero ideals of J2 or H1 with the tabulated dim HL_2.
struct SmallIdealCase {
  std::string e;
  Subspace n;
  std::size_t expected = 0;
  std::size_t actual = 0;
  bool matches() const { return expected == actual; }
};

std::vector<SmallIdealCase> small_ideal_table();

}  // namespace leibniz
