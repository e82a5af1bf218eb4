#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "monocurve/bitpoly.hpp"
#include "monocurve/errors.hpp"

namespace monocurve {

/// First-coordinate encoding of a smooth projective monomial curve of degree
/// alpha: the set of generator exponents A with {0, 1, alpha-1, alpha} <= A
/// <= {0, ..., alpha}. Smoothness of the curve at both torus-fixed points is
/// exactly the presence of 0, 1, alpha-1 and alpha.
class GeneratorSet {
 public:
  /// Validates and normalises (sorts, deduplicates) the element list.
  /// Throws BadAlphaError (alpha < 2), OutOfRangeError (element > alpha) or
  /// NotSmoothError (0, 1, alpha-1 or alpha absent).
  GeneratorSet(Nat alpha, std::span<const Nat> elements);
  GeneratorSet(Nat alpha, std::initializer_list<Nat> elements);

  Nat alpha() const { return alpha_; }
  /// Codimension of the curve: |A| - 2. At least 1.
  Nat codim() const { return static_cast<Nat>(elements_.size()) - 2; }
  const std::vector<Nat>& elements() const { return elements_; }

  /// Indicator polynomial of A over the boolean semiring; its m-th power has
  /// the m-fold sumset of A as support.
  const BitPoly& indicator() const { return indicator_; }

  /// The reflected set {alpha - a : a in A}; smooth whenever A is.
  GeneratorSet reflected() const;

  /// A = {0, ..., alpha}, i.e. the coordinate ring is a polynomial ring mod
  /// nothing missing: the Cohen-Macaulay case.
  bool is_full_set() const { return elements_.size() == alpha_ + 1; }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  Nat alpha_;
  std::vector<Nat> elements_;
  BitPoly indicator_;
};

/// A degree-m element of the normalisation missing from the semigroup ring:
/// the monomial with first coordinate u1 (second coordinate m*alpha - u1).
struct Hole {
  Nat u1 = 0;
  Nat degree = 0;

  friend bool operator==(const Hole&, const Hole&) = default;
};

/// Graded dimensions of the two local cohomology modules of the coordinate
/// ring. h1 lives in degrees 1..reg-1 and is finite; h2 is nonzero in every
/// negative degree, so it is reported up to a caller-chosen cutoff.
struct CohomologyTable {
  std::vector<std::pair<Nat, Nat>> h1;           // (degree m, dimension)
  std::vector<std::pair<std::int64_t, Nat>> h2;  // (degree -m, dimension)
};

struct CurveInvariants {
  Nat reg = 0;      // Castelnuovo-Mumford regularity of the coordinate ring
  Nat r = 0;        // reduction number of the semigroup ring
  Nat epsilon = 0;  // largest i with 0..i and alpha-i..alpha all present
  Nat lambda = 0;   // longest gap of the indicator polynomial
  Nat degree = 0;   // alpha
  Nat codim = 0;
  Nat glp_bound = 0;          // sum of gap lengths + 1
  Nat improvement_bound = 0;  // floor((lambda-1)/epsilon) + 2, or 1 if gapless

  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

/// Support of the m-fold sumset of A, as a bit polynomial.
BitPoly power_support(const GeneratorSet& A, Nat m);

/// Least m >= 1 such that the m-fold sumset of A is all of {0, ..., m*alpha}.
/// Equals the regularity of the coordinate ring. Never exceeds the gap-sum
/// bound; exceeding it raises InternalInconsistencyError.
Nat regularity(const GeneratorSet& A);

/// Least r >= 1 with (r+1)A = {0, alpha} + rA, encoded on supports as
/// supp(f^(r+1)) = supp(f^r) | (supp(f^r) << alpha). Always <= regularity(A);
/// a larger value raises InternalInconsistencyError.
Nat reduction_number(const GeneratorSet& A);

/// Largest i such that 0, ..., i and alpha-i, ..., alpha all lie in A.
/// At least 1 for every smooth set; equals alpha for the full set.
Nat epsilon(const GeneratorSet& A);

/// All holes, ordered by (degree, u1). Empty iff A is the full set.
std::vector<Hole> holes(const GeneratorSet& A);

/// h1 dimensions for every degree 1..reg-1 (via |{0..m*alpha}| - |mA|) and
/// h2 dimensions m*alpha - 1 for degrees -1..-h2_cutoff.
CohomologyTable cohomology_dims(const GeneratorSet& A, Nat h2_cutoff);

CurveInvariants invariants(const GeneratorSet& A);

}  // namespace monocurve
