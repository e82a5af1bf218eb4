#include "monocurve/bitpoly.hpp"

#include <algorithm>
#include <limits>

namespace monocurve {

namespace {

constexpr unsigned kWordBits = 64;

std::size_t words_for(Nat max_exponent) {
  return static_cast<std::size_t>(max_exponent / kWordBits) + 1;
}

std::uint64_t low_mask(unsigned top_bit) {
  // bits 0..top_bit set
  return top_bit == kWordBits - 1 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << (top_bit + 1)) - 1;
}

// dst |= src << shift. dst must already be large enough to hold every set
// bit of the result; writes that would land past dst are provably zero and
// are skipped.
void or_shifted_into(std::vector<std::uint64_t>& dst,
                     const std::vector<std::uint64_t>& src, Nat shift) {
  const std::size_t word_off = static_cast<std::size_t>(shift / kWordBits);
  const unsigned bit_off = static_cast<unsigned>(shift % kWordBits);
  const std::size_t n = dst.size();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::uint64_t w = src[i];
    if (w == 0) continue;
    const std::size_t j = i + word_off;
    if (j >= n) break;
    if (bit_off == 0) {
      dst[j] |= w;
    } else {
      dst[j] |= w << bit_off;
      if (j + 1 < n) dst[j + 1] |= w >> (kWordBits - bit_off);
    }
  }
}

void check_exponent_sum(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b)
    throw ExponentOverflowError("exponent sum overflows: " + std::to_string(a) +
                                " + " + std::to_string(b));
}

std::string range_str(Nat lo, Nat hi) {
  if (lo == hi) return std::to_string(lo);
  return std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

BitPoly BitPoly::h(Nat p) {
  BitPoly out;
  out.words_.assign(words_for(p), ~std::uint64_t{0});
  out.words_.back() = low_mask(static_cast<unsigned>(p % kWordBits));
  return out;
}

BitPoly BitPoly::from_exponents(std::span<const Nat> exponents) {
  BitPoly out;
  if (exponents.empty()) return out;
  const Nat top = *std::max_element(exponents.begin(), exponents.end());
  out.words_.assign(words_for(top), 0);
  for (Nat e : exponents)
    out.words_[e / kWordBits] |= std::uint64_t{1} << (e % kWordBits);
  return out;
}

BitPoly BitPoly::from_exponents(std::initializer_list<Nat> exponents) {
  return from_exponents(std::span<const Nat>(exponents.begin(), exponents.size()));
}

bool BitPoly::contains(Nat e) const {
  const std::size_t w = static_cast<std::size_t>(e / kWordBits);
  if (w >= words_.size()) return false;
  return (words_[w] >> (e % kWordBits)) & 1;
}

bool BitPoly::contains_range(Nat lo, Nat hi) const {
  if (lo > hi) return true;
  if (is_zero() || hi > deg()) return false;
  const std::size_t w_lo = static_cast<std::size_t>(lo / kWordBits);
  const std::size_t w_hi = static_cast<std::size_t>(hi / kWordBits);
  for (std::size_t w = w_lo; w <= w_hi; ++w) {
    std::uint64_t mask = ~std::uint64_t{0};
    if (w == w_lo) mask &= ~std::uint64_t{0} << (lo % kWordBits);
    if (w == w_hi) mask &= low_mask(static_cast<unsigned>(hi % kWordBits));
    if ((words_[w] & mask) != mask) return false;
  }
  return true;
}

std::size_t BitPoly::support_size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Nat> BitPoly::exponents() const {
  std::vector<Nat> out;
  out.reserve(support_size());
  for_each_exponent([&](Nat e) { out.push_back(e); });
  return out;
}

void BitPoly::require_nonzero(const char* op) const {
  if (is_zero())
    throw ZeroPolynomialError(std::string(op) +
                              " is undefined for the zero polynomial");
}

Nat BitPoly::deg() const {
  require_nonzero("deg");
  const std::size_t last = words_.size() - 1;
  return static_cast<Nat>(last) * kWordBits +
         static_cast<Nat>(std::bit_width(words_[last]) - 1);
}

Nat BitPoly::udeg() const {
  require_nonzero("udeg");
  for (std::size_t w = 0;; ++w)
    if (words_[w] != 0)
      return static_cast<Nat>(w) * kWordBits +
             static_cast<Nat>(std::countr_zero(words_[w]));
}

Extents BitPoly::extents() const {
  require_nonzero("extents");
  return Extents{udeg(), deg()};
}

bool BitPoly::is_full() const {
  if (is_zero()) return false;
  const Nat d = deg();
  const std::size_t last = static_cast<std::size_t>(d / kWordBits);
  for (std::size_t w = 0; w < last; ++w)
    if (words_[w] != ~std::uint64_t{0}) return false;
  return words_[last] == low_mask(static_cast<unsigned>(d % kWordBits));
}

std::vector<Gap> BitPoly::gaps() const {
  require_nonzero("gaps");
  std::vector<Gap> out;
  bool first = true;
  Nat prev = 0;
  for_each_exponent([&](Nat e) {
    if (!first && e > prev + 1) out.push_back(Gap{prev + 1, e - 1});
    prev = e;
    first = false;
  });
  return out;
}

Nat BitPoly::max_gap_length() const {
  require_nonzero("max_gap_length");
  Nat best = 0;
  bool first = true;
  Nat prev = 0;
  for_each_exponent([&](Nat e) {
    if (!first && e > prev + 1) best = std::max(best, e - prev - 1);
    prev = e;
    first = false;
  });
  return best;
}

BitPoly BitPoly::shifted(Nat k) const {
  if (is_zero()) return BitPoly();
  check_exponent_sum(deg(), k);
  BitPoly out;
  out.words_.assign(words_for(deg() + k), 0);
  or_shifted_into(out.words_, words_, k);
  return out;
}

void BitPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BitPoly operator+(const BitPoly& a, const BitPoly& b) {
  const BitPoly& big = a.words_.size() >= b.words_.size() ? a : b;
  const BitPoly& small = (&big == &a) ? b : a;
  BitPoly out = big;
  for (std::size_t i = 0; i < small.words_.size(); ++i)
    out.words_[i] |= small.words_[i];
  return out;  // big is trimmed and OR only adds bits
}

BitPoly operator*(const BitPoly& a, const BitPoly& b) {
  if (a.is_zero() || b.is_zero()) return BitPoly();
  // Iterate over the factor with the smaller support; every set exponent
  // costs one shift-and-OR pass over the other factor's words.
  const BitPoly& sparse = a.support_size() <= b.support_size() ? a : b;
  const BitPoly& dense = (&sparse == &a) ? b : a;
  const Nat da = a.deg();
  const Nat db = b.deg();
  check_exponent_sum(da, db);
  BitPoly out;
  out.words_.assign(words_for(da + db), 0);
  sparse.for_each_exponent(
      [&](Nat e) { or_shifted_into(out.words_, dense.words_, e); });
  out.trim();
  return out;
}

BitPoly BitPoly::pow(Nat m) const {
  if (m == 0) return one();
  if (is_zero()) return BitPoly();
  if (m == 1) return *this;
  const Nat d = deg();
  if (d > 0 && m > std::numeric_limits<Nat>::max() / d)
    throw ExponentOverflowError("power exponent overflows: " +
                                std::to_string(m) + " * deg " +
                                std::to_string(d));
  // Two ping-pong buffers sized for the final degree, filled by repeated
  // multiplication with *this.
  const std::size_t n = words_for(m * d);
  std::vector<std::uint64_t> cur(n, 0), next(n, 0);
  cur[0] = 1;  // t^0
  for (Nat step = 0; step < m; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for_each_exponent([&](Nat e) { or_shifted_into(next, cur, e); });
    std::swap(cur, next);
  }
  BitPoly out;
  out.words_ = std::move(cur);
  out.trim();
  return out;
}

std::string format_support(const BitPoly& f) {
  if (f.is_zero()) return "{}";
  const Extents ex = f.extents();
  std::string s = "{" + range_str(ex.udeg, ex.deg) + "}";
  const std::vector<Gap> gs = f.gaps();
  if (gs.empty()) return s;
  s += " \\ {";
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i > 0) s += ", ";
    s += range_str(gs[i].lo, gs[i].hi);
  }
  s += "}";
  return s;
}

}  // namespace monocurve
