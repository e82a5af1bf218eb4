#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monocurve/curve.hpp"
#include "monocurve/properties.hpp"

namespace monocurve {

/// Smooth generator sets of degree alpha are {0, 1, alpha-1, alpha} plus an
/// arbitrary subset of {2, ..., alpha-2}: exactly one set for alpha = 2, 3
/// and 2^(alpha-3) sets for alpha >= 4. smooth_set maps a bitmask over the
/// free part (bit i <=> element 2 + i) to the corresponding set; enumeration
/// order is increasing mask order.
std::uint64_t smooth_count(Nat alpha);
std::uint64_t smooth_count_range(Nat alpha_lo, Nat alpha_hi);
GeneratorSet smooth_set(Nat alpha, std::uint64_t mask);

class SmoothEnumerator {
 public:
  explicit SmoothEnumerator(Nat alpha)
      : alpha_(alpha), count_(smooth_count(alpha)) {}

  std::uint64_t count() const { return count_; }

  /// Next set in mask order, or nullopt when exhausted.
  std::optional<GeneratorSet> next() {
    if (next_ == count_) return std::nullopt;
    return smooth_set(alpha_, next_++);
  }

 private:
  Nat alpha_;
  std::uint64_t next_ = 0;
  std::uint64_t count_;
};

enum class ScanMode {
  QCounterexample,  // reduction number strictly below the regularity
  P1Violation,
  P2Violation,
};

std::string_view to_string(ScanMode mode);
std::optional<ScanMode> scan_mode_from_string(std::string_view name);

struct Finding {
  Nat alpha = 0;
  std::uint64_t mask = 0;
  std::vector<Nat> elements;
  CurveInvariants inv;
  std::optional<Witness> witness;  // present for the violation modes
  /// Lexicographically smaller of the element list and its reflection; scans
  /// enumerate both orientations, this tags the class representative.
  std::vector<Nat> canonical;
};

struct ScanReport {
  Nat alpha_lo = 0;
  Nat alpha_hi = 0;
  ScanMode mode = ScanMode::QCounterexample;
  std::optional<Nat> m_restrict;  // violation modes: check only this m
  std::uint64_t total_sets = 0;
  std::vector<Finding> findings;  // sorted by (alpha, mask)
  double elapsed_seconds = 0.0;   // informational; not part of serialised reports
};

/// Exhaustive scan over every smooth set with alpha in [alpha_lo, alpha_hi].
/// The mask space is split into contiguous chunks, one worker thread per
/// chunk, and the per-chunk findings are concatenated in chunk order, so the
/// report is identical for every worker count.
ScanReport scan(Nat alpha_lo, Nat alpha_hi, ScanMode mode,
                std::optional<Nat> m_restrict, unsigned workers);

/// Scans covering more sets than this should be confirmed explicitly by the
/// caller (the CLI demands a flag and prints the cost first).
constexpr std::uint64_t kLargeScanSetLimit = std::uint64_t{1} << 25;

struct CheckCounter {
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
};

struct VerifyFailure {
  Nat alpha = 0;
  std::vector<Nat> elements;
  std::string check;
  std::string detail;
};

struct VerifyReport {
  Nat alpha_lo = 0;
  Nat alpha_hi = 0;
  std::uint64_t total_sets = 0;
  /// One counter per check, in the fixed order of verify_check_names().
  std::vector<std::pair<std::string, CheckCounter>> checks;
  std::vector<VerifyFailure> failures;
  double elapsed_seconds = 0.0;

  bool clean() const { return failures.empty(); }
};

/// Names of the per-set checks run by verify_suite, in report order:
/// regularity-hole-crosscheck (greatest hole degree + 1 = reg),
/// reduction-sandwich (r <= reg <= 2r-2, with the small-value collapses),
/// cm-characterization (no holes <=> full set <=> reg = 1),
/// property-equivalence ((P2) => (P1) and (P1) <=> r = reg),
/// bounds (every BoundCheck satisfied),
/// p2-family / equality-family / reduction-formula (family certificates
/// against the computed invariants).
const std::vector<std::string>& verify_check_names();

/// Runs every check on every smooth set in the range, in parallel chunks
/// merged deterministically.
VerifyReport verify_suite(Nat alpha_lo, Nat alpha_hi, unsigned workers);

unsigned default_workers();

}  // namespace monocurve
