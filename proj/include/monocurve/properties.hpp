#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocurve/curve.hpp"

namespace monocurve {

// Two combinatorial properties of the powers of a generator set, checked for
// every m with a non-full m-fold sumset (for m >= regularity the sumset is a
// complete range, so the conditions hold vacuously and are not scanned):
//
//   (P1)  if mA is not all of {0..m*alpha}, then mA + {0, alpha} is not all
//         of {0..(m+1)*alpha} either;
//   (P2)  if mA is not all of {0..m*alpha}, then mA misses some number in
//         {0..alpha} or in {(m-1)*alpha..m*alpha}.
//
// (P2) implies (P1), and (P1) holds for A iff the reduction number equals
// the regularity (question (Q)) for the corresponding curve.

/// Evidence for a violated property: the power m, the numbers missing from
/// the m-fold sumset, and a prose description of the recomputation.
struct Witness {
  Nat m = 0;
  std::vector<Nat> missing;
  std::string detail;
};

struct PropertyReport {
  bool holds = true;
  std::optional<Witness> witness;
  /// Largest m actually examined (reg - 1, or the caller's cap). Larger m
  /// give full sumsets, so the property is vacuous there.
  Nat scanned_m_max = 0;
};

/// Violation of (P1) at exactly this m, if any.
std::optional<Witness> p1_violation_at(const GeneratorSet& A, Nat m);
/// Violation of (P2) at exactly this m, if any.
std::optional<Witness> p2_violation_at(const GeneratorSet& A, Nat m);

PropertyReport check_p1(const GeneratorSet& A);
/// m_max, when given, caps the scanned range at min(reg - 1, m_max).
PropertyReport check_p2(const GeneratorSet& A,
                        std::optional<Nat> m_max = std::nullopt);

/// Question (Q): does the reduction number equal the regularity?
struct QReport {
  bool holds = false;
  Nat r = 0;
  Nat reg = 0;
};

QReport q_status(const GeneratorSet& A);

/// One inequality lhs <= rhs with a stable name; satisfied is recomputable
/// from the stored sides.
struct BoundCheck {
  std::string name;
  Nat lhs = 0;
  Nat rhs = 0;
  bool satisfied = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;

  bool all_satisfied() const {
    for (const BoundCheck& c : checks)
      if (!c.satisfied) return false;
    return true;
  }
};

/// Every bound this library knows for the regularity and reduction number:
///   reduction-le-regularity   r <= reg
///   regularity-reduction-cap  reg <= 2r-2 (r >= 2), reg <= 1 (r = 1)
///   lambda-epsilon-bound      reg <= floor((lambda-1)/epsilon) + 2
///   gap-sum-bound             reg <= sum of gap lengths + 1
///   eisenbud-goto             reg <= degree - codim
///   degree-codim-plus-one     reg <= degree - codim + 1
///   reduction-formula-lower   floor((p1-2)/epsilon) + 1 <= r
/// The last one only when the set matches the reduction-formula family.
BoundReport check_bounds(const GeneratorSet& A);

/// Structural match for the family {0..p} | {q_1..q_l} | {alpha} with
/// p >= alpha - q_1; membership certifies property (P2). When the primary
/// orientation does not match but the reflected set does, the match is
/// reported with mirrored = true and the reflected set's parameters.
struct P2FamilyMatch {
  Nat p = 0;
  Nat q = 0;  // least element above p
  Nat l = 0;  // number of elements strictly between p and alpha
  bool mirrored = false;
};

/// Structural match for the family {0..eps} | {p_1 < ... < p_l} | {alpha-1,
/// alpha} with eps + 2 <= p_1 and p_l <= alpha - eps, where eps is the
/// two-sided epsilon of the set (so the reflected tail {alpha-eps..alpha} is
/// present as well). Membership certifies r >= lower_bound; when in addition
/// p_1 - eps - 1 equals the longest gap (exact = true), r = reg = predicted.
struct ReductionFormulaMatch {
  Nat epsilon = 0;
  Nat p1 = 0;
  Nat p_last = 0;
  Nat delta = 0;  // floor((p1 - epsilon - 2) / epsilon)
  Nat gamma = 0;  // p1 - epsilon - 1 - delta * epsilon, in 1..epsilon
  Nat lower_bound = 0;
  bool exact = false;
  Nat predicted = 0;  // delta + 2; the exact value of r and reg when exact
};

struct FamilyReport {
  std::optional<P2FamilyMatch> p2_family;
  /// p2_family in the primary orientation with greatest element below alpha
  /// equal to alpha - 1; certifies r = reg. Full sets qualify for alpha >= 3.
  bool equality_family = false;
  std::optional<ReductionFormulaMatch> reduction_formula;
};

/// Purely syntactic family classification; asserts only hypotheses, never
/// the certified conclusions (those are checked against computed invariants
/// by the verification suite).
FamilyReport classify_families(const GeneratorSet& A);

}  // namespace monocurve
