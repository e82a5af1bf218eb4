#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "monocurve/errors.hpp"

namespace monocurve {

using Nat = std::uint64_t;

/// A maximal run of exponents missing from a support, with set exponents on
/// both sides. lo..hi inclusive.
struct Gap {
  Nat lo = 0;
  Nat hi = 0;

  Nat length() const { return hi - lo + 1; }

  friend bool operator==(const Gap&, const Gap&) = default;
};

struct Extents {
  Nat udeg = 0;  // least exponent in the support
  Nat deg = 0;   // greatest exponent in the support
};

/// Polynomial over the two-element idempotent semiring {0, 1} (1 + 1 = 1).
/// Only the support matters: addition is set union and multiplication is the
/// sumset of the two supports. Stored as a dynamic bit vector, one bit per
/// exponent, so sumsets reduce to shift-and-OR over 64-bit words.
///
/// The zero polynomial (empty support) is representable; deg/udeg/extents and
/// the gap queries throw ZeroPolynomialError for it.
class BitPoly {
 public:
  BitPoly() = default;  // zero

  static BitPoly zero() { return BitPoly(); }
  static BitPoly one() { return from_exponents({0}); }

  /// Indicator of {0, 1, ..., p}.
  static BitPoly h(Nat p);

  static BitPoly from_exponents(std::span<const Nat> exponents);
  static BitPoly from_exponents(std::initializer_list<Nat> exponents);

  bool is_zero() const { return words_.empty(); }
  bool contains(Nat e) const;
  /// True when every exponent in lo..hi (inclusive) is present.
  bool contains_range(Nat lo, Nat hi) const;

  std::size_t support_size() const;
  std::vector<Nat> exponents() const;

  Nat deg() const;   // throws ZeroPolynomialError on zero
  Nat udeg() const;  // throws ZeroPolynomialError on zero
  Extents extents() const;

  /// Support equals {0, ..., deg}: no missing exponent below the top one.
  /// The zero polynomial is not full.
  bool is_full() const;

  /// Maximal missing runs strictly between udeg and deg, in increasing order.
  std::vector<Gap> gaps() const;

  /// Length of the longest gap; 0 when the support has no gaps at all.
  Nat max_gap_length() const;

  /// Multiplication by t^k, i.e. the support shifted up by k.
  BitPoly shifted(Nat k) const;

  /// m-th power. pow(f, 0) = {0} (empty product), including for f = 0.
  /// Computed as repeated multiplication into a buffer of m*deg+1 bits that
  /// is allocated up front; throws ExponentOverflowError when m*deg wraps.
  BitPoly pow(Nat m) const;

  /// Visits every exponent of the support in increasing order.
  template <class F>
  void for_each_exponent(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(word));
        fn(static_cast<Nat>(w) * 64 + bit);
        word &= word - 1;
      }
    }
  }

  friend BitPoly operator+(const BitPoly& a, const BitPoly& b);
  friend BitPoly operator*(const BitPoly& a, const BitPoly& b);

  bool operator==(const BitPoly&) const = default;

 private:
  void require_nonzero(const char* op) const;
  void trim();

  // Bit e of words_[e / 64] is set iff e is in the support. Invariant: no
  // trailing zero words, so equality of supports is equality of the vectors.
  std::vector<std::uint64_t> words_;
};

/// Compact human-readable rendering of a support: "{0..51} \ {25}" lists the
/// covered range followed by the missing runs. Zero renders as "{}".
std::string format_support(const BitPoly& f);

}  // namespace monocurve
