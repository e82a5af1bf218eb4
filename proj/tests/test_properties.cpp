#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "monocurve/properties.hpp"
#include "monocurve/search.hpp"
#include "support/families.hpp"
#include "support/naive.hpp"

using namespace monocurve;

namespace {

const GeneratorSet& counterexample17() {
  static const GeneratorSet A(17, {0, 1, 2, 5, 13, 14, 16, 17});
  return A;
}

const BoundCheck* find_bound(const BoundReport& rep, const std::string& name) {
  for (const BoundCheck& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("(P1): holds on easy sets, fails on the counterexample") {
  const PropertyReport ok = check_p1(GeneratorSet(9, {0, 1, 5, 8, 9}));
  CHECK(ok.holds);
  CHECK(!ok.witness.has_value());
  CHECK(ok.scanned_m_max == 3);

  // the full set: nothing to scan
  const PropertyReport full = check_p1(GeneratorSet(4, {0, 1, 2, 3, 4}));
  CHECK(full.holds);
  CHECK(full.scanned_m_max == 0);

  const PropertyReport bad = check_p1(counterexample17());
  CHECK(!bad.holds);
  CHECK(bad.scanned_m_max == 3);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->m == 3);
  CHECK(bad.witness->missing == std::vector<Nat>{25});
  CHECK(!bad.witness->detail.empty());

  // re-derive the witness with set arithmetic only
  const naive::Support base = naive::of(counterexample17().indicator());
  const naive::Support cube = naive::power(base, 3);
  CHECK(!naive::full(cube));
  CHECK(!cube.contains(25));
  CHECK(naive::full(naive::unite(cube, naive::shift(cube, 17))));
  CHECK(naive::unite(cube, naive::shift(cube, 17)) == naive::range(0, 68));
}

TEST_CASE("(P1) violations at a single power") {
  const GeneratorSet& A = counterexample17();
  CHECK(!p1_violation_at(A, 0).has_value());
  CHECK(!p1_violation_at(A, 1).has_value());
  CHECK(!p1_violation_at(A, 2).has_value());
  CHECK(p1_violation_at(A, 3).has_value());
  CHECK(!p1_violation_at(A, 4).has_value());  // full power: vacuous
}

TEST_CASE("(P2): window checks and truncation") {
  const GeneratorSet& A = counterexample17();

  const PropertyReport bad = check_p2(A);
  CHECK(!bad.holds);
  CHECK(bad.scanned_m_max == 3);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->m == 3);
  CHECK(bad.witness->missing == std::vector<Nat>{25});

  // 25 lies in neither {0..17} nor {34..51}; both windows are covered
  const naive::Support cube = naive::power(naive::of(A.indicator()), 3);
  for (Nat x = 0; x <= 17; ++x) CHECK(cube.contains(x));
  for (Nat x = 34; x <= 51; ++x) CHECK(cube.contains(x));

  // capping the scan below the violating power reports a clean (bounded) pass
  const PropertyReport capped = check_p2(A, 2);
  CHECK(capped.holds);
  CHECK(capped.scanned_m_max == 2);
  const PropertyReport wide = check_p2(A, 10);
  CHECK(!wide.holds);
  CHECK(wide.scanned_m_max == 3);

  CHECK(!p2_violation_at(A, 1).has_value());
  CHECK(!p2_violation_at(A, 2).has_value());
  CHECK(p2_violation_at(A, 3).has_value());
  CHECK(!p2_violation_at(A, 4).has_value());

  CHECK(check_p2(GeneratorSet(7, {0, 1, 2, 5, 6, 7})).holds);
}

TEST_CASE("question (Q)") {
  const QReport bad = q_status(counterexample17());
  CHECK(!bad.holds);
  CHECK(bad.r == 3);
  CHECK(bad.reg == 4);

  const QReport good = q_status(GeneratorSet(4, {0, 1, 3, 4}));
  CHECK(good.holds);
  CHECK(good.r == 2);
  CHECK(good.reg == 2);
}

TEST_CASE("bound report for the counterexample") {
  const BoundReport rep = check_bounds(counterexample17());
  CHECK(rep.checks.size() == 6);  // no family bound: not a member
  CHECK(rep.all_satisfied());

  const struct {
    const char* name;
    Nat lhs, rhs;
  } expected[] = {
      {"reduction-le-regularity", 3, 4}, {"regularity-reduction-cap", 4, 4},
      {"lambda-epsilon-bound", 4, 8},    {"gap-sum-bound", 4, 11},
      {"eisenbud-goto", 4, 11},          {"degree-codim-plus-one", 4, 12},
  };
  REQUIRE(rep.checks.size() == std::size(expected));
  for (std::size_t i = 0; i < std::size(expected); ++i) {
    CHECK(rep.checks[i].name == expected[i].name);
    CHECK(rep.checks[i].lhs == expected[i].lhs);
    CHECK(rep.checks[i].rhs == expected[i].rhs);
    CHECK(rep.checks[i].satisfied);
  }
}

TEST_CASE("bound report includes the family lower bound for members") {
  const BoundReport rep = check_bounds(GeneratorSet(9, {0, 1, 5, 8, 9}));
  CHECK(rep.checks.size() == 7);
  CHECK(rep.all_satisfied());
  const BoundCheck* low = find_bound(rep, "reduction-formula-lower");
  REQUIRE(low != nullptr);
  CHECK(low->lhs == 4);  // floor((5-2)/1) + 1
  CHECK(low->rhs == 4);  // the reduction number itself

  // r = 1 collapses the regularity cap to reg <= 1
  const BoundCheck* cap =
      find_bound(check_bounds(GeneratorSet(3, {0, 1, 2, 3})), "regularity-reduction-cap");
  REQUIRE(cap != nullptr);
  CHECK(cap->lhs == 1);
  CHECK(cap->rhs == 1);
}

TEST_CASE("family classification: pinned examples") {
  // {0,1,2} | {5,6} | {7}: prefix meets tail across the gap
  const FamilyReport a = classify_families(GeneratorSet(7, {0, 1, 2, 5, 6, 7}));
  REQUIRE(a.p2_family.has_value());
  CHECK(a.p2_family->p == 2);
  CHECK(a.p2_family->q == 5);
  CHECK(a.p2_family->l == 2);
  CHECK(!a.p2_family->mirrored);
  CHECK(a.equality_family);
  // also decomposes as {0..2} | {5} | {6,7} with two-sided eps = 2
  REQUIRE(a.reduction_formula.has_value());
  CHECK(a.reduction_formula->epsilon == 2);
  CHECK(a.reduction_formula->p1 == 5);
  CHECK(a.reduction_formula->p_last == 5);
  CHECK(a.reduction_formula->delta == 0);
  CHECK(a.reduction_formula->gamma == 2);
  CHECK(a.reduction_formula->lower_bound == 2);
  CHECK(a.reduction_formula->exact);
  CHECK(a.reduction_formula->predicted == 2);
  {
    const QReport q = q_status(GeneratorSet(7, {0, 1, 2, 5, 6, 7}));
    CHECK(q.holds);
    CHECK(q.reg == 2);  // matches the prediction
  }

  // the counterexample matches nothing
  const FamilyReport b = classify_families(counterexample17());
  CHECK(!b.p2_family.has_value());
  CHECK(!b.equality_family);
  CHECK(!b.reduction_formula.has_value());

  // {0,1} | {5} | {8,9}: formula member, exact, r = reg = 4
  const FamilyReport c = classify_families(GeneratorSet(9, {0, 1, 5, 8, 9}));
  CHECK(!c.p2_family.has_value());
  CHECK(!c.equality_family);
  REQUIRE(c.reduction_formula.has_value());
  CHECK(c.reduction_formula->epsilon == 1);
  CHECK(c.reduction_formula->p1 == 5);
  CHECK(c.reduction_formula->p_last == 5);
  CHECK(c.reduction_formula->delta == 2);
  CHECK(c.reduction_formula->gamma == 1);
  CHECK(c.reduction_formula->lower_bound == 4);
  CHECK(c.reduction_formula->exact);
  CHECK(c.reduction_formula->predicted == 4);
}

TEST_CASE("family classification: mirrored and degenerate cases") {
  // primary orientation fails, the reflection {0,1,2,3,6,7} matches
  const FamilyReport m = classify_families(GeneratorSet(7, {0, 1, 4, 5, 6, 7}));
  REQUIRE(m.p2_family.has_value());
  CHECK(m.p2_family->mirrored);
  CHECK(m.p2_family->p == 3);
  CHECK(m.p2_family->q == 6);
  CHECK(m.p2_family->l == 1);
  CHECK(!m.equality_family);  // only the primary orientation certifies it

  // and the reflection itself matches primarily
  const FamilyReport r = classify_families(GeneratorSet(7, {0, 1, 2, 3, 6, 7}));
  REQUIRE(r.p2_family.has_value());
  CHECK(!r.p2_family->mirrored);
  CHECK(r.p2_family->p == 3);
  CHECK(r.equality_family);

  // full sets: degenerate tail {alpha}; equality certificate needs alpha >= 3
  const FamilyReport f2 = classify_families(GeneratorSet(2, {0, 1, 2}));
  REQUIRE(f2.p2_family.has_value());
  CHECK(f2.p2_family->p == 1);
  CHECK(f2.p2_family->q == 2);
  CHECK(f2.p2_family->l == 0);
  CHECK(!f2.equality_family);
  CHECK(!f2.reduction_formula.has_value());

  const FamilyReport f3 = classify_families(GeneratorSet(3, {0, 1, 2, 3}));
  REQUIRE(f3.p2_family.has_value());
  CHECK(f3.equality_family);
}

TEST_CASE("generated equality-family instances satisfy their certificate") {
  const std::vector<GeneratorSet> instances =
      families::equality_family_instances(12);
  CHECK(instances.size() > 50);

  bool saw_pinned = false;
  for (const GeneratorSet& A : instances) {
    CAPTURE(A.alpha());
    CAPTURE(A.elements());
    const FamilyReport fam = classify_families(A);
    CHECK(fam.equality_family);
    REQUIRE(fam.p2_family.has_value());
    CHECK(!fam.p2_family->mirrored);
    CHECK(fam.p2_family->p + fam.p2_family->q >= A.alpha());

    const QReport q = q_status(A);
    CHECK(q.holds);
    CHECK(check_p2(A).holds);
    if (A == GeneratorSet(7, {0, 1, 2, 5, 6, 7})) saw_pinned = true;
  }
  CHECK(saw_pinned);
}

TEST_CASE("generated reduction-formula instances satisfy their certificate") {
  const std::vector<GeneratorSet> instances =
      families::reduction_formula_instances(12);
  CHECK(instances.size() > 400);

  bool saw_pinned = false;
  bool saw_inexact = false;
  for (const GeneratorSet& A : instances) {
    CAPTURE(A.alpha());
    CAPTURE(A.elements());
    const FamilyReport fam = classify_families(A);
    REQUIRE(fam.reduction_formula.has_value());
    const ReductionFormulaMatch& rf = *fam.reduction_formula;
    CHECK(rf.gamma >= 1);
    CHECK(rf.gamma <= rf.epsilon);
    // floor((p1-2)/eps) + 1 and delta + 2 coincide: the numerators differ
    // by exactly eps
    CHECK(rf.lower_bound == rf.delta + 2);
    CHECK(rf.p1 == rf.epsilon + 1 + rf.delta * rf.epsilon + rf.gamma);

    const CurveInvariants inv = invariants(A);
    CHECK(rf.lower_bound <= inv.r);
    if (rf.exact) {
      CHECK(inv.r == inv.reg);
      CHECK(inv.reg == rf.predicted);
    } else {
      saw_inexact = true;
    }
    if (A == GeneratorSet(9, {0, 1, 5, 8, 9})) saw_pinned = true;
  }
  CHECK(saw_pinned);
  CHECK(saw_inexact);
}

TEST_CASE("property implications hold on every small curve") {
  for (Nat alpha = 2; alpha <= 10; ++alpha) {
    SmoothEnumerator en(alpha);
    while (auto A = en.next()) {
      CAPTURE(alpha);
      CAPTURE(A->elements());
      const PropertyReport p1 = check_p1(*A);
      const PropertyReport p2 = check_p2(*A);
      const QReport q = q_status(*A);
      // (P2) => (P1) and (P1) <=> (Q)
      if (p2.holds) CHECK(p1.holds);
      CHECK(p1.holds == q.holds);
      // family certificates
      const FamilyReport fam = classify_families(*A);
      if (fam.p2_family) CHECK(p2.holds);
      if (fam.equality_family) CHECK(q.holds);
      // every bound is a theorem
      CHECK(check_bounds(*A).all_satisfied());
    }
  }
}
