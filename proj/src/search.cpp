#include "monocurve/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <thread>

namespace monocurve {

std::uint64_t smooth_count(Nat alpha) {
  if (alpha < 2)
    throw BadAlphaError("enumeration needs alpha >= 2, got " +
                        std::to_string(alpha));
  if (alpha <= 3) return 1;
  const Nat free_bits = alpha - 3;
  if (free_bits > 63)
    throw ExponentOverflowError(
        "enumeration over alpha > 66 would overflow the 64-bit mask space");
  return std::uint64_t{1} << free_bits;
}

std::uint64_t smooth_count_range(Nat alpha_lo, Nat alpha_hi) {
  std::uint64_t total = 0;
  for (Nat alpha = alpha_lo; alpha <= alpha_hi; ++alpha)
    total += smooth_count(alpha);
  return total;
}

GeneratorSet smooth_set(Nat alpha, std::uint64_t mask) {
  if (mask >= smooth_count(alpha))
    throw OutOfRangeError("mask " + std::to_string(mask) +
                          " out of range for alpha = " + std::to_string(alpha));
  std::vector<Nat> elems{0, 1, alpha - 1, alpha};
  const Nat free_bits = alpha >= 4 ? alpha - 3 : 0;
  for (Nat i = 0; i < free_bits; ++i)
    if ((mask >> i) & 1) elems.push_back(2 + i);
  return GeneratorSet(alpha, elems);
}

std::string_view to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::QCounterexample:
      return "q-counterexample";
    case ScanMode::P1Violation:
      return "p1-violation";
    case ScanMode::P2Violation:
      return "p2-violation";
  }
  return "q-counterexample";
}

std::optional<ScanMode> scan_mode_from_string(std::string_view name) {
  if (name == "q-counterexample") return ScanMode::QCounterexample;
  if (name == "p1-violation") return ScanMode::P1Violation;
  if (name == "p2-violation") return ScanMode::P2Violation;
  return std::nullopt;
}

namespace {

std::vector<Nat> canonical_elements(const GeneratorSet& A) {
  const std::vector<Nat>& own = A.elements();
  const std::vector<Nat> mirrored = A.reflected().elements();
  return std::min(own, mirrored);
}

std::optional<Finding> evaluate_set(const GeneratorSet& A, std::uint64_t mask,
                                    ScanMode mode,
                                    std::optional<Nat> m_restrict) {
  std::optional<Witness> witness;
  switch (mode) {
    case ScanMode::QCounterexample: {
      const QReport q = q_status(A);
      if (q.holds) return std::nullopt;
      break;
    }
    case ScanMode::P1Violation: {
      if (m_restrict) {
        witness = p1_violation_at(A, *m_restrict);
      } else {
        PropertyReport rep = check_p1(A);
        if (!rep.holds) witness = std::move(rep.witness);
      }
      if (!witness) return std::nullopt;
      break;
    }
    case ScanMode::P2Violation: {
      if (m_restrict) {
        witness = p2_violation_at(A, *m_restrict);
      } else {
        PropertyReport rep = check_p2(A);
        if (!rep.holds) witness = std::move(rep.witness);
      }
      if (!witness) return std::nullopt;
      break;
    }
  }
  Finding f;
  f.alpha = A.alpha();
  f.mask = mask;
  f.elements = A.elements();
  f.inv = invariants(A);
  f.witness = std::move(witness);
  f.canonical = canonical_elements(A);
  return f;
}

// Splits [0, n) into `parts` contiguous ranges and runs fn(part, begin, end)
// on its own thread per part (inline when only one part is needed).
template <class Fn>
void run_chunked(std::uint64_t n, unsigned parts, Fn&& fn) {
  if (n == 0) return;
  const std::uint64_t want = std::min<std::uint64_t>(parts ? parts : 1, n);
  const unsigned w = static_cast<unsigned>(want);
  if (w == 1) {
    fn(0u, std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(w);
  const std::uint64_t base = n / w;
  const std::uint64_t extra = n % w;
  std::uint64_t begin = 0;
  for (unsigned c = 0; c < w; ++c) {
    const std::uint64_t len = base + (c < extra ? 1 : 0);
    threads.emplace_back(
        [&fn, c, begin, len] { fn(c, begin, begin + len); });
    begin += len;
  }
  for (std::thread& t : threads) t.join();
}

}  // namespace

ScanReport scan(Nat alpha_lo, Nat alpha_hi, ScanMode mode,
                std::optional<Nat> m_restrict, unsigned workers) {
  if (alpha_lo < 2 || alpha_lo > alpha_hi)
    throw BadAlphaError("scan range must satisfy 2 <= lo <= hi");
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.alpha_lo = alpha_lo;
  rep.alpha_hi = alpha_hi;
  rep.mode = mode;
  rep.m_restrict = m_restrict;
  for (Nat alpha = alpha_lo; alpha <= alpha_hi; ++alpha) {
    const std::uint64_t n = smooth_count(alpha);
    rep.total_sets += n;
    const unsigned parts =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), n));
    std::vector<std::vector<Finding>> chunks(parts);
    run_chunked(n, parts,
                [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
                  for (std::uint64_t mask = begin; mask < end; ++mask) {
                    const GeneratorSet A = smooth_set(alpha, mask);
                    if (auto f = evaluate_set(A, mask, mode, m_restrict))
                      chunks[c].push_back(std::move(*f));
                  }
                });
    for (std::vector<Finding>& chunk : chunks)
      for (Finding& f : chunk) rep.findings.push_back(std::move(f));
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

namespace {

constexpr std::size_t kNumChecks = 8;

const std::array<const char*, kNumChecks> kCheckNames = {
    "regularity-hole-crosscheck",
    "reduction-sandwich",
    "cm-characterization",
    "property-equivalence",
    "bounds",
    "p2-family",
    "equality-family",
    "reduction-formula",
};

struct ChunkVerdict {
  std::array<CheckCounter, kNumChecks> counters{};
  std::vector<VerifyFailure> failures;
};

std::string join(const std::vector<Nat>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

void verify_one(const GeneratorSet& A, ChunkVerdict& verdict) {
  const CurveInvariants inv = invariants(A);
  const std::vector<Hole> hs = holes(A);
  const PropertyReport p1 = check_p1(A);
  const PropertyReport p2 = check_p2(A);
  const bool q = inv.r == inv.reg;
  const BoundReport bounds = check_bounds(A);
  const FamilyReport fam = classify_families(A);

  auto record = [&](std::size_t idx, bool ok, const std::string& detail) {
    if (ok) {
      ++verdict.counters[idx].passes;
    } else {
      ++verdict.counters[idx].failures;
      verdict.failures.push_back(VerifyFailure{
          A.alpha(), A.elements(), kCheckNames[idx], detail});
    }
  };

  const std::string id =
      "A={" + join(A.elements()) + "} r=" + std::to_string(inv.r) +
      " reg=" + std::to_string(inv.reg);

  // Greatest hole degree + 1 must recover the regularity.
  const bool crosscheck =
      hs.empty() ? inv.reg == 1 : hs.back().degree + 1 == inv.reg;
  record(0, crosscheck,
         id + " max hole degree " +
             (hs.empty() ? std::string("none")
                         : std::to_string(hs.back().degree)));

  const bool sandwich = inv.r <= inv.reg &&
                        (inv.r >= 2 ? inv.reg <= 2 * inv.r - 2
                                    : inv.reg == 1) &&
                        (!(inv.r <= 2 || inv.reg <= 3) || inv.r == inv.reg);
  record(1, sandwich, id);

  const bool cm = (hs.empty() == A.is_full_set()) &&
                  ((inv.reg == 1) == hs.empty());
  record(2, cm, id + " holes=" + std::to_string(hs.size()));

  const bool equivalence = (!p2.holds || p1.holds) && (p1.holds == q);
  record(3, equivalence,
         id + " p1=" + (p1.holds ? "holds" : "violated") + " p2=" +
             (p2.holds ? "holds" : "violated"));

  std::string bad_bound;
  for (const BoundCheck& c : bounds.checks)
    if (!c.satisfied)
      bad_bound += " " + c.name + " " + std::to_string(c.lhs) + ">!" +
                   std::to_string(c.rhs);
  record(4, bounds.all_satisfied(), id + bad_bound);

  record(5, !fam.p2_family || p2.holds, id + " family certificate for (P2)");

  record(6, !fam.equality_family || q, id + " family certificate for r=reg");

  bool formula_ok = true;
  std::string formula_detail = id;
  if (fam.reduction_formula) {
    const ReductionFormulaMatch& m = *fam.reduction_formula;
    formula_ok = m.lower_bound <= inv.r;
    if (m.exact)
      formula_ok = formula_ok && q && inv.reg == m.predicted;
    formula_detail += " lower=" + std::to_string(m.lower_bound) +
                      (m.exact ? " exact predicted=" + std::to_string(m.predicted)
                               : "");
  }
  record(7, formula_ok, formula_detail);
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names(kCheckNames.begin(),
                                              kCheckNames.end());
  return names;
}

VerifyReport verify_suite(Nat alpha_lo, Nat alpha_hi, unsigned workers) {
  if (alpha_lo < 2 || alpha_lo > alpha_hi)
    throw BadAlphaError("verify range must satisfy 2 <= lo <= hi");
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.alpha_lo = alpha_lo;
  rep.alpha_hi = alpha_hi;
  std::array<CheckCounter, kNumChecks> totals{};
  for (Nat alpha = alpha_lo; alpha <= alpha_hi; ++alpha) {
    const std::uint64_t n = smooth_count(alpha);
    rep.total_sets += n;
    const unsigned parts =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), n));
    std::vector<ChunkVerdict> chunks(parts);
    run_chunked(n, parts,
                [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
                  for (std::uint64_t mask = begin; mask < end; ++mask)
                    verify_one(smooth_set(alpha, mask), chunks[c]);
                });
    for (const ChunkVerdict& chunk : chunks) {
      for (std::size_t i = 0; i < kNumChecks; ++i) {
        totals[i].passes += chunk.counters[i].passes;
        totals[i].failures += chunk.counters[i].failures;
      }
      for (const VerifyFailure& f : chunk.failures) rep.failures.push_back(f);
    }
  }
  for (std::size_t i = 0; i < kNumChecks; ++i)
    rep.checks.emplace_back(kCheckNames[i], totals[i]);
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace monocurve
