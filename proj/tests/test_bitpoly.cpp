#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "monocurve/bitpoly.hpp"
#include "support/naive.hpp"
#include "support/poly_properties.hpp"

using monocurve::BitPoly;
using monocurve::Gap;
using monocurve::Nat;

namespace {

// The running counterexample set used throughout the suites.
const std::vector<Nat> kSet17{0, 1, 2, 5, 13, 14, 16, 17};

BitPoly poly17() { return BitPoly::from_exponents(kSet17); }

BitPoly full_except(Nat deg, std::initializer_list<Nat> missing) {
  std::vector<Nat> exps;
  for (Nat e = 0; e <= deg; ++e) {
    bool skip = false;
    for (Nat m : missing) skip = skip || m == e;
    if (!skip) exps.push_back(e);
  }
  return BitPoly::from_exponents(exps);
}

}  // namespace

TEST_CASE("construction and membership") {
  CHECK(BitPoly::zero().is_zero());
  CHECK(BitPoly::from_exponents({}).is_zero());
  CHECK(BitPoly::zero().support_size() == 0);

  const BitPoly f = BitPoly::from_exponents({5, 0, 2, 2});
  CHECK(f.exponents() == std::vector<Nat>{0, 2, 5});
  CHECK(f.support_size() == 3);
  CHECK(f.contains(0));
  CHECK(!f.contains(1));
  CHECK(!f.contains(6));
  CHECK(!f.contains(1000));

  CHECK(BitPoly::one() == BitPoly::from_exponents({0}));
  CHECK(BitPoly::h(0) == BitPoly::one());
  CHECK(BitPoly::h(5).exponents() == std::vector<Nat>{0, 1, 2, 3, 4, 5});
  // word-boundary sizes
  CHECK(BitPoly::h(63).support_size() == 64);
  CHECK(BitPoly::h(64).support_size() == 65);
  CHECK(BitPoly::h(64).deg() == 64);
}

TEST_CASE("degree queries and the zero polynomial") {
  const BitPoly f = BitPoly::from_exponents({3, 7});
  CHECK(f.udeg() == 3);
  CHECK(f.deg() == 7);
  CHECK(f.extents().udeg == 3);
  CHECK(f.extents().deg == 7);

  const BitPoly z;
  CHECK_THROWS_AS(z.deg(), monocurve::ZeroPolynomialError);
  CHECK_THROWS_AS(z.udeg(), monocurve::ZeroPolynomialError);
  CHECK_THROWS_AS(z.extents(), monocurve::ZeroPolynomialError);
  CHECK_THROWS_AS(z.gaps(), monocurve::ZeroPolynomialError);
  CHECK_THROWS_AS(z.max_gap_length(), monocurve::ZeroPolynomialError);
  CHECK(!z.is_full());
}

TEST_CASE("addition is support union") {
  const BitPoly a = BitPoly::from_exponents({0, 2});
  const BitPoly b = BitPoly::from_exponents({1, 2});
  CHECK(a + b == BitPoly::from_exponents({0, 1, 2}));
  CHECK(a + a == a);
  CHECK(a + BitPoly::zero() == a);
}

TEST_CASE("multiplication is the sumset") {
  const BitPoly a = BitPoly::from_exponents({0, 2});
  const BitPoly b = BitPoly::from_exponents({0, 3});
  CHECK(a * b == BitPoly::from_exponents({0, 2, 3, 5}));
  CHECK(BitPoly::h(1) * BitPoly::h(1) == BitPoly::h(2));
  CHECK(a * BitPoly::one() == a);
  CHECK((a * BitPoly::zero()).is_zero());
  // shifts across the 64-bit word boundary
  CHECK(BitPoly::from_exponents({0, 63}) * BitPoly::from_exponents({0, 1}) ==
        BitPoly::from_exponents({0, 1, 63, 64}));
  CHECK(BitPoly::from_exponents({0, 64}) * BitPoly::from_exponents({0, 64}) ==
        BitPoly::from_exponents({0, 64, 128}));
}

TEST_CASE("powers") {
  CHECK(BitPoly::zero().pow(0) == BitPoly::one());
  CHECK(BitPoly::zero().pow(3).is_zero());
  CHECK(poly17().pow(0) == BitPoly::one());
  CHECK(poly17().pow(1) == poly17());
  CHECK(BitPoly::h(3).pow(4) == BitPoly::h(12));

  // the third power of the counterexample indicator misses exactly 25
  const BitPoly cube = poly17().pow(3);
  CHECK(cube == full_except(51, {25}));
  CHECK(cube.gaps() == std::vector<Gap>{{25, 25}});
  CHECK(!cube.is_full());
  CHECK(poly17().pow(4).is_full());

  CHECK_THROWS_AS(BitPoly::from_exponents({0, 2}).pow(Nat{1} << 63),
                  monocurve::ExponentOverflowError);
}

TEST_CASE("powers of initial segments") {
  for (Nat p = 0; p <= 10; ++p)
    for (Nat i = 0; i <= 10; ++i)
      CHECK(BitPoly::h(p).pow(i) == BitPoly::h(i * p));
}

TEST_CASE("gap scan") {
  const BitPoly f = poly17();
  CHECK(f.gaps() == std::vector<Gap>{{3, 4}, {6, 12}, {15, 15}});
  CHECK(f.max_gap_length() == 7);

  CHECK(BitPoly::h(5).gaps().empty());
  CHECK(BitPoly::h(5).max_gap_length() == 0);

  const BitPoly wide = BitPoly::from_exponents({0, 9});
  CHECK(wide.gaps() == std::vector<Gap>{{1, 8}});
  CHECK(wide.max_gap_length() == 8);
  // multiplying by an initial segment of length p shrinks every gap by p
  CHECK((BitPoly::h(3) * wide).max_gap_length() == 5);

  // gaps are measured strictly between udeg and deg
  const BitPoly off = BitPoly::from_exponents({4, 5, 9});
  CHECK(off.gaps() == std::vector<Gap>{{6, 8}});
}

TEST_CASE("fullness") {
  CHECK(BitPoly::h(0).is_full());
  CHECK(BitPoly::h(200).is_full());
  CHECK(!BitPoly::from_exponents({0, 2}).is_full());
  CHECK(!BitPoly::from_exponents({1, 2, 3}).is_full());  // 0 missing
  CHECK(full_except(51, {}).is_full());
  CHECK(!full_except(51, {25}).is_full());
  CHECK(!full_except(130, {64}).is_full());  // hole exactly at a word seam
}

TEST_CASE("shifts") {
  const BitPoly f = BitPoly::from_exponents({0, 3});
  CHECK(f.shifted(5) == BitPoly::from_exponents({5, 8}));
  CHECK(f.shifted(0) == f);
  CHECK(BitPoly::zero().shifted(7).is_zero());
  CHECK_THROWS_AS(f.shifted(~Nat{0}), monocurve::ExponentOverflowError);
}

TEST_CASE("contains_range") {
  const BitPoly f = full_except(10, {5});
  CHECK(f.contains_range(0, 4));
  CHECK(f.contains_range(6, 10));
  CHECK(!f.contains_range(0, 10));
  CHECK(!f.contains_range(4, 6));
  CHECK(!f.contains_range(0, 11));  // beyond deg
  CHECK(f.contains_range(7, 7));
  CHECK(BitPoly::h(200).contains_range(63, 129));
}

TEST_CASE("support formatting") {
  CHECK(monocurve::format_support(BitPoly::zero()) == "{}");
  CHECK(monocurve::format_support(BitPoly::one()) == "{0}");
  CHECK(monocurve::format_support(BitPoly::h(5)) == "{0..5}");
  CHECK(monocurve::format_support(BitPoly::from_exponents({2, 3, 4})) ==
        "{2..4}");
  CHECK(monocurve::format_support(poly17()) ==
        "{0..17} \\ {3..4, 6..12, 15}");
  CHECK(monocurve::format_support(poly17().pow(3)) == "{0..51} \\ {25}");
}

TEST_CASE("randomised semiring and gap-calculus checks") {
  const battery::Result res = battery::run(/*seed=*/0x5eed1e55u, /*iterations=*/250);
  CHECK(res.cases > 3000);
  for (const std::string& failure : res.failures) FAIL_CHECK(failure);
  CHECK(res.failures.empty());
}
