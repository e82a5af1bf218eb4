#include "monocurve/curve.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace monocurve {

GeneratorSet::GeneratorSet(Nat alpha, std::span<const Nat> elements)
    : alpha_(alpha) {
  if (alpha < 2)
    throw BadAlphaError("alpha must be at least 2, got " +
                        std::to_string(alpha));
  std::vector<Nat> elems(elements.begin(), elements.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (Nat e : elems)
    if (e > alpha)
      throw OutOfRangeError("element " + std::to_string(e) +
                            " exceeds alpha = " + std::to_string(alpha));
  for (Nat required : {Nat{0}, Nat{1}, alpha - 1, alpha})
    if (!std::binary_search(elems.begin(), elems.end(), required))
      throw NotSmoothError(
          "generator set must contain 0, 1, alpha-1 and alpha; missing " +
          std::to_string(required));
  elements_ = std::move(elems);
  indicator_ = BitPoly::from_exponents(elements_);
}

GeneratorSet::GeneratorSet(Nat alpha, std::initializer_list<Nat> elements)
    : GeneratorSet(alpha,
                   std::span<const Nat>(elements.begin(), elements.size())) {}

GeneratorSet GeneratorSet::reflected() const {
  std::vector<Nat> mirrored;
  mirrored.reserve(elements_.size());
  for (auto it = elements_.rbegin(); it != elements_.rend(); ++it)
    mirrored.push_back(alpha_ - *it);
  return GeneratorSet(alpha_, mirrored);
}

namespace {

Nat gap_total(const BitPoly& f) {
  Nat total = 0;
  for (const Gap& g : f.gaps()) total += g.length();
  return total;
}

struct WalkResult {
  Nat reg;
  Nat red;
};

// One incremental pass over the powers of the indicator, stopping once both
// the first full power (regularity) and the first stabilising step of the
// reduction recursion have been seen. The loop is capped by the gap-sum
// bound on the regularity; running past the cap means a broken invariant.
WalkResult power_walk(const GeneratorSet& A) {
  const BitPoly& f = A.indicator();
  const Nat cap = gap_total(f) + 1;
  std::optional<Nat> reg, red;
  BitPoly cur = f;  // f^m
  for (Nat m = 1;; ++m) {
    if (!reg && cur.is_full()) reg = m;
    if (reg && red) break;
    if (m > cap) {
      if (!reg)
        throw InternalInconsistencyError(
            "no power of the indicator became a complete range within the "
            "gap-sum bound " +
            std::to_string(cap));
      throw InternalInconsistencyError(
          "reduction number would exceed the regularity " +
          std::to_string(*reg));
    }
    BitPoly next = cur * f;
    if (!red && next == cur + cur.shifted(A.alpha())) red = m;
    cur = std::move(next);
  }
  if (*red > *reg)
    throw InternalInconsistencyError("reduction number " +
                                     std::to_string(*red) +
                                     " exceeds regularity " +
                                     std::to_string(*reg));
  return WalkResult{*reg, *red};
}

}  // namespace

BitPoly power_support(const GeneratorSet& A, Nat m) {
  return A.indicator().pow(m);
}

Nat regularity(const GeneratorSet& A) { return power_walk(A).reg; }

Nat reduction_number(const GeneratorSet& A) { return power_walk(A).red; }

Nat epsilon(const GeneratorSet& A) {
  const BitPoly& f = A.indicator();
  const Nat alpha = A.alpha();
  Nat e = 0;
  while (e < alpha && f.contains(e + 1) && f.contains(alpha - e - 1)) ++e;
  return e;
}

std::vector<Hole> holes(const GeneratorSet& A) {
  const Nat reg = regularity(A);
  std::vector<Hole> out;
  const BitPoly& f = A.indicator();
  BitPoly cur = f;
  for (Nat m = 1; m < reg; ++m) {
    // cur has udeg 0 and deg m*alpha, so its gaps are exactly the complement
    // of the m-fold sumset inside {0, ..., m*alpha}.
    for (const Gap& g : cur.gaps())
      for (Nat u = g.lo; u <= g.hi; ++u) out.push_back(Hole{u, m});
    cur = cur * f;
  }
  return out;
}

CohomologyTable cohomology_dims(const GeneratorSet& A, Nat h2_cutoff) {
  CohomologyTable table;
  const Nat reg = regularity(A);
  BitPoly cur = A.indicator();
  for (Nat m = 1; m < reg; ++m) {
    table.h1.emplace_back(m, m * A.alpha() + 1 - cur.support_size());
    cur = cur * A.indicator();
  }
  for (Nat m = 1; m <= h2_cutoff; ++m)
    table.h2.emplace_back(-static_cast<std::int64_t>(m), m * A.alpha() - 1);
  return table;
}

CurveInvariants invariants(const GeneratorSet& A) {
  const BitPoly& f = A.indicator();
  Nat gap_sum = 0;
  Nat lambda = 0;
  for (const Gap& g : f.gaps()) {
    gap_sum += g.length();
    lambda = std::max(lambda, g.length());
  }
  const WalkResult walk = power_walk(A);
  CurveInvariants inv;
  inv.reg = walk.reg;
  inv.r = walk.red;
  inv.epsilon = epsilon(A);
  inv.lambda = lambda;
  inv.degree = A.alpha();
  inv.codim = A.codim();
  inv.glp_bound = gap_sum + 1;
  inv.improvement_bound = lambda >= 1 ? (lambda - 1) / inv.epsilon + 2 : 1;
  return inv;
}

}  // namespace monocurve
