#include "monocurve/properties.hpp"

#include <algorithm>

namespace monocurve {

namespace {

std::vector<Nat> missing_numbers(const BitPoly& g) {
  std::vector<Nat> out;
  for (const Gap& gap : g.gaps())
    for (Nat u = gap.lo; u <= gap.hi; ++u) out.push_back(u);
  return out;
}

Witness p1_witness(const GeneratorSet& A, Nat m, const BitPoly& g,
                   const BitPoly& sh) {
  Witness w;
  w.m = m;
  w.missing = missing_numbers(g);
  w.detail = "the " + std::to_string(m) + "-fold sumset is " +
             format_support(g) + ", not a complete range, yet adding {0," +
             std::to_string(A.alpha()) + "} completes it to " +
             format_support(sh);
  return w;
}

Witness p2_witness(const GeneratorSet& A, Nat m, const BitPoly& g) {
  const Nat alpha = A.alpha();
  Witness w;
  w.m = m;
  w.missing = missing_numbers(g);
  w.detail = "the " + std::to_string(m) + "-fold sumset " + format_support(g) +
             " is not a complete range but contains all of {0.." +
             std::to_string(alpha) + "} and {" + std::to_string((m - 1) * alpha) +
             ".." + std::to_string(m * alpha) + "}";
  return w;
}

}  // namespace

std::optional<Witness> p1_violation_at(const GeneratorSet& A, Nat m) {
  if (m == 0) return std::nullopt;
  const BitPoly g = A.indicator().pow(m);
  if (g.is_full()) return std::nullopt;
  const BitPoly sh = g + g.shifted(A.alpha());
  if (!sh.is_full()) return std::nullopt;
  return p1_witness(A, m, g, sh);
}

std::optional<Witness> p2_violation_at(const GeneratorSet& A, Nat m) {
  if (m == 0) return std::nullopt;
  const Nat alpha = A.alpha();
  const BitPoly g = A.indicator().pow(m);
  if (g.is_full()) return std::nullopt;
  if (!g.contains_range(0, alpha)) return std::nullopt;
  if (!g.contains_range((m - 1) * alpha, m * alpha)) return std::nullopt;
  return p2_witness(A, m, g);
}

PropertyReport check_p1(const GeneratorSet& A) {
  const Nat reg = regularity(A);
  PropertyReport rep;
  rep.scanned_m_max = reg - 1;
  BitPoly cur = A.indicator();
  for (Nat m = 1; m < reg; ++m) {
    // cur = f^m is not full here, since m is below the regularity.
    const BitPoly sh = cur + cur.shifted(A.alpha());
    if (sh.is_full()) {
      rep.holds = false;
      rep.witness = p1_witness(A, m, cur, sh);
      return rep;
    }
    cur = cur * A.indicator();
  }
  return rep;
}

PropertyReport check_p2(const GeneratorSet& A, std::optional<Nat> m_max) {
  const Nat reg = regularity(A);
  Nat hi = reg - 1;
  if (m_max && *m_max < hi) hi = *m_max;
  PropertyReport rep;
  rep.scanned_m_max = hi;
  const Nat alpha = A.alpha();
  BitPoly cur = A.indicator();
  for (Nat m = 1; m <= hi; ++m) {
    if (cur.contains_range(0, alpha) &&
        cur.contains_range((m - 1) * alpha, m * alpha)) {
      rep.holds = false;
      rep.witness = p2_witness(A, m, cur);
      return rep;
    }
    cur = cur * A.indicator();
  }
  return rep;
}

QReport q_status(const GeneratorSet& A) {
  const CurveInvariants inv = invariants(A);
  return QReport{inv.r == inv.reg, inv.r, inv.reg};
}

BoundReport check_bounds(const GeneratorSet& A) {
  const CurveInvariants inv = invariants(A);
  BoundReport rep;
  auto push = [&rep](std::string name, Nat lhs, Nat rhs) {
    rep.checks.push_back(BoundCheck{std::move(name), lhs, rhs, lhs <= rhs});
  };
  push("reduction-le-regularity", inv.r, inv.reg);
  push("regularity-reduction-cap", inv.reg, inv.r >= 2 ? 2 * inv.r - 2 : 1);
  push("lambda-epsilon-bound", inv.reg, inv.improvement_bound);
  push("gap-sum-bound", inv.reg, inv.glp_bound);
  push("eisenbud-goto", inv.reg, inv.degree - inv.codim);
  push("degree-codim-plus-one", inv.reg, inv.degree - inv.codim + 1);
  const FamilyReport fam = classify_families(A);
  if (fam.reduction_formula)
    push("reduction-formula-lower", fam.reduction_formula->lower_bound, inv.r);
  return rep;
}

namespace {

// Largest i with {0, ..., i} contained in A.
Nat prefix_run(const GeneratorSet& A) {
  const BitPoly& f = A.indicator();
  Nat i = 0;
  while (i < A.alpha() && f.contains(i + 1)) ++i;
  return i;
}

std::optional<P2FamilyMatch> primary_p2_match(const GeneratorSet& A) {
  const Nat alpha = A.alpha();
  // For the full set the prefix run is alpha; cap p at alpha - 1 so that the
  // block above p is nonempty ({alpha} itself, a degenerate but valid tail).
  const Nat p = std::min(prefix_run(A), alpha - 1);
  Nat q = alpha;
  for (Nat e : A.elements())
    if (e > p) {
      q = e;
      break;
    }
  if (p + q < alpha) return std::nullopt;
  Nat l = 0;
  for (Nat e : A.elements())
    if (e > p && e < alpha) ++l;
  return P2FamilyMatch{p, q, l, false};
}

}  // namespace

FamilyReport classify_families(const GeneratorSet& A) {
  FamilyReport rep;
  rep.p2_family = primary_p2_match(A);
  if (!rep.p2_family) {
    if (auto mirror = primary_p2_match(A.reflected())) {
      mirror->mirrored = true;
      rep.p2_family = mirror;
    }
  }

  // The equality family needs the primary orientation and a tail reaching
  // alpha - 1. For non-full smooth sets alpha - 1 is always the greatest
  // element below alpha, so any primary match qualifies; the full set has a
  // valid decomposition {0..alpha-2} | {alpha-1} | {alpha} once alpha >= 3.
  if (A.is_full_set())
    rep.equality_family = A.alpha() >= 3;
  else
    rep.equality_family = rep.p2_family && !rep.p2_family->mirrored;

  const Nat eps = epsilon(A);
  const Nat alpha = A.alpha();
  if (!A.is_full_set() && prefix_run(A) == eps) {
    // Elements strictly between the prefix {0..eps} and alpha - 1 must all
    // fit below alpha - eps (the reflected tail {alpha-eps..alpha} is in A
    // by the definition of epsilon).
    std::vector<Nat> middle;
    for (Nat e : A.elements())
      if (e > eps && e < alpha - 1) middle.push_back(e);
    if (!middle.empty() && middle.front() >= eps + 2 &&
        middle.back() <= alpha - eps) {
      ReductionFormulaMatch m;
      m.epsilon = eps;
      m.p1 = middle.front();
      m.p_last = middle.back();
      m.delta = (m.p1 - eps - 2) / eps;
      m.gamma = m.p1 - eps - 1 - m.delta * eps;
      m.lower_bound = (m.p1 - 2) / eps + 1;
      m.exact = m.p1 - eps - 1 == A.indicator().max_gap_length();
      m.predicted = m.delta + 2;
      rep.reduction_formula = m;
    }
  }
  return rep;
}

}  // namespace monocurve
