#include "monocurve/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "monocurve/json_io.hpp"
#include "monocurve/search.hpp"

namespace monocurve::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- parsing

Nat parse_nat(const std::string& token) {
  if (token.empty() ||
      token.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("expected a natural number, got '" + token + "'");
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw UsageError("number out of range: '" + token + "'");
  }
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<Nat> parse_set_list(const std::string& text) {
  std::vector<Nat> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(parse_nat(trimmed(token)));
  if (out.empty()) throw UsageError("--set needs at least one element");
  std::vector<Nat> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw UsageError("--set elements must be distinct");
  return out;
}

std::vector<std::pair<Nat, Nat>> parse_pairs(const std::string& text) {
  std::vector<std::pair<Nat, Nat>> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw UsageError(std::string("--pairs: expected '") + c +
                       "' at position " + std::to_string(i) + " of '" + text +
                       "'");
    ++i;
  };
  auto number = [&]() -> Nat {
    skip_ws();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i)
      throw UsageError("--pairs: expected a number at position " +
                       std::to_string(i) + " of '" + text + "'");
    return parse_nat(text.substr(start, i - start));
  };
  while (true) {
    expect('(');
    const Nat a = number();
    expect(',');
    const Nat b = number();
    expect(')');
    out.emplace_back(a, b);
    skip_ws();
    if (i == text.size()) break;
    expect(',');
  }
  return out;
}

std::pair<Nat, Nat> parse_alpha_range(const std::string& text) {
  const std::size_t pos = text.find("..");
  Nat lo, hi;
  if (pos == std::string::npos) {
    lo = hi = parse_nat(trimmed(text));
  } else {
    lo = parse_nat(trimmed(text.substr(0, pos)));
    hi = parse_nat(trimmed(text.substr(pos + 2)));
  }
  if (lo < 2 || lo > hi)
    throw UsageError("--alpha range must satisfy 2 <= lo <= hi, got '" + text +
                     "'");
  return {lo, hi};
}

struct SetInput {
  std::string set_text;
  std::string pairs_text;
  Nat alpha = 0;
  bool alpha_given = false;
};

GeneratorSet build_generator_set(const SetInput& in) {
  if (!in.set_text.empty() && !in.pairs_text.empty())
    throw UsageError("--set and --pairs are mutually exclusive");
  if (in.set_text.empty() && in.pairs_text.empty())
    throw UsageError("one of --set or --pairs is required");
  std::vector<Nat> elems;
  Nat alpha;
  if (!in.pairs_text.empty()) {
    const auto pairs = parse_pairs(in.pairs_text);
    alpha = pairs.front().first + pairs.front().second;
    for (const auto& [a, b] : pairs) {
      if (a + b != alpha)
        throw UsageError("every pair must sum to the same degree: (" +
                         std::to_string(a) + "," + std::to_string(b) +
                         ") does not sum to " + std::to_string(alpha));
      elems.push_back(a);
    }
    std::vector<Nat> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw UsageError("--pairs entries must be distinct");
    if (in.alpha_given && in.alpha != alpha)
      throw UsageError("--alpha " + std::to_string(in.alpha) +
                       " disagrees with the pair sum " + std::to_string(alpha));
  } else {
    elems = parse_set_list(in.set_text);
    alpha = in.alpha_given ? in.alpha
                           : *std::max_element(elems.begin(), elems.end());
  }
  return GeneratorSet(alpha, elems);
}

// ----------------------------------------------------------------- output

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + out_path + "'");
  file << text;
}

void require_format(const std::string& format, bool csv_ok) {
  if (format == "csv" && !csv_ok)
    throw UsageError("csv output is only available for scan and verify");
}

std::string join(const std::vector<Nat>& xs, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string human_set_header(const GeneratorSet& A) {
  std::ostringstream os;
  os << "generator set  alpha=" << A.alpha() << "  codim=" << A.codim()
     << "\n"
     << "  elements   {" << join(A.elements()) << "}\n"
     << "  indicator  " << format_support(A.indicator()) << "\n";
  return os.str();
}

std::string human_invariants(const CurveInvariants& inv) {
  std::ostringstream os;
  os << "invariants\n"
     << "  reg                " << inv.reg << "\n"
     << "  r                  " << inv.r << "\n"
     << "  epsilon            " << inv.epsilon << "\n"
     << "  lambda             " << inv.lambda << "\n"
     << "  degree             " << inv.degree << "\n"
     << "  codim              " << inv.codim << "\n"
     << "  glp_bound          " << inv.glp_bound << "\n"
     << "  improvement_bound  " << inv.improvement_bound << "\n";
  return os.str();
}

void append_property(std::ostringstream& os, const char* name,
                     const PropertyReport& rep) {
  os << "property " << name << ": ";
  if (rep.holds) {
    os << "holds";
    if (rep.scanned_m_max >= 1)
      os << "  (checked m=1.." << rep.scanned_m_max
         << "; every higher power is a complete range)";
    else
      os << "  (vacuous: every power is a complete range)";
  } else {
    os << "violated at m=" << rep.witness->m << "\n    " << rep.witness->detail;
  }
  os << "\n";
}

std::string human_analyze(const GeneratorSet& A, const CurveInvariants& inv,
                          const QReport& q, const PropertyReport& p1,
                          const PropertyReport& p2, const BoundReport& bounds,
                          const FamilyReport& fam) {
  std::ostringstream os;
  os << human_set_header(A) << "\n" << human_invariants(inv) << "\n";
  os << "question (Q): r = reg?  " << (q.holds ? "yes" : "no") << "  (r="
     << q.r << ", reg=" << q.reg << ")\n";
  append_property(os, "(P1)", p1);
  append_property(os, "(P2)", p2);
  os << "\nbounds\n";
  for (const BoundCheck& c : bounds.checks)
    os << "  " << (c.satisfied ? "ok  " : "FAIL") << " " << std::left
       << std::setw(26) << c.name << std::right << " " << c.lhs
       << " <= " << c.rhs << "\n";
  os << "\nfamilies\n";
  os << "  p2_family          ";
  if (fam.p2_family) {
    os << "member  p=" << fam.p2_family->p << " q=" << fam.p2_family->q
       << " l=" << fam.p2_family->l
       << (fam.p2_family->mirrored ? "  (mirrored)" : "");
  } else {
    os << "no";
  }
  os << "\n  equality_family    " << (fam.equality_family ? "member" : "no");
  os << "\n  reduction_formula  ";
  if (fam.reduction_formula) {
    const ReductionFormulaMatch& m = *fam.reduction_formula;
    os << "member  epsilon=" << m.epsilon << " p1=" << m.p1
       << " delta=" << m.delta << " lower_bound=" << m.lower_bound;
    if (m.exact) os << "  exact: r = reg = " << m.predicted;
  } else {
    os << "no";
  }
  os << "\n";
  return os.str();
}

std::string human_sumset(const GeneratorSet& A, Nat m, const BitPoly& power) {
  std::ostringstream os;
  os << "sumset  m=" << m << "  alpha=" << A.alpha() << "\n"
     << "  A        {" << join(A.elements()) << "}\n"
     << "  support  " << format_support(power) << "\n"
     << "  size     " << power.support_size() << "\n"
     << "  full     " << (power.is_full() ? "yes" : "no") << "\n";
  return os.str();
}

std::string human_holes(const GeneratorSet& A, Nat reg,
                        const std::vector<Hole>& hs,
                        const CohomologyTable& table) {
  std::ostringstream os;
  os << human_set_header(A);
  os << "reg " << reg << "\n";
  if (hs.empty()) {
    os << "no holes: the semigroup ring is its own normalisation\n";
  } else {
    os << "holes by degree (u1 values; the lattice point is (u1, m*alpha-u1))\n";
    for (const auto& [m, dim] : table.h1) {
      os << "  m=" << m << "  h1=" << dim << "  u1 in {";
      bool first = true;
      for (const Hole& h : hs)
        if (h.degree == m) {
          if (!first) os << ", ";
          os << h.u1;
          first = false;
        }
      os << "}\n";
    }
  }
  os << "h2 dimensions:";
  for (const auto& [degree, dim] : table.h2)
    os << "  [" << degree << "] " << dim;
  os << "\n";
  return os.str();
}

std::string human_scan(const ScanReport& rep) {
  std::ostringstream os;
  os << "scan alpha " << rep.alpha_lo << ".." << rep.alpha_hi << "  mode "
     << to_string(rep.mode);
  if (rep.m_restrict) os << "  m=" << *rep.m_restrict;
  os << "\n";
  os << "total sets  " << rep.total_sets << "\n";
  os << "findings    " << rep.findings.size() << "\n";
  for (const Finding& f : rep.findings) {
    os << "  alpha=" << f.alpha << "  A={" << join(f.elements)
       << "}  reg=" << f.inv.reg << "  r=" << f.inv.r;
    if (f.witness)
      os << "  witness m=" << f.witness->m << " missing={"
         << join(f.witness->missing) << "}";
    if (f.canonical != f.elements)
      os << "  canonical={" << join(f.canonical) << "}";
    os << "\n";
  }
  os << "elapsed     " << std::fixed << std::setprecision(3)
     << rep.elapsed_seconds << " s\n";
  return os.str();
}

std::string human_verify(const VerifyReport& rep) {
  std::ostringstream os;
  os << "verify alpha " << rep.alpha_lo << ".." << rep.alpha_hi << "\n";
  os << "total sets  " << rep.total_sets << "\n";
  for (const auto& [name, counter] : rep.checks)
    os << "  " << std::left << std::setw(28) << name << std::right << " "
       << counter.passes << " pass  " << counter.failures << " fail\n";
  for (const VerifyFailure& f : rep.failures)
    os << "  FAILURE alpha=" << f.alpha << " A={" << join(f.elements) << "} "
       << f.check << ": " << f.detail << "\n";
  os << (rep.clean() ? "all checks passed" : "CHECKS FAILED") << "\n";
  os << "elapsed     " << std::fixed << std::setprecision(3)
     << rep.elapsed_seconds << " s\n";
  return os.str();
}

// --------------------------------------------------------------- commands

int run_analyze(const SetInput& si, const std::string& format,
                const std::string& out_path, std::ostream& out) {
  require_format(format, false);
  const GeneratorSet A = build_generator_set(si);
  const CurveInvariants inv = invariants(A);
  const QReport q = q_status(A);
  const PropertyReport p1 = check_p1(A);
  const PropertyReport p2 = check_p2(A);
  const BoundReport bounds = check_bounds(A);
  const FamilyReport fam = classify_families(A);
  const std::string text =
      format == "json"
          ? reports::render(
                reports::analyze_payload(A, inv, q, p1, p2, bounds, fam))
          : human_analyze(A, inv, q, p1, p2, bounds, fam);
  emit(text, out_path, out);
  return 0;
}

int run_sumset(const SetInput& si, Nat m, const std::string& format,
               const std::string& out_path, std::ostream& out) {
  require_format(format, false);
  const GeneratorSet A = build_generator_set(si);
  const BitPoly power = power_support(A, m);
  const std::string text =
      format == "json" ? reports::render(reports::sumset_payload(A, m, power))
                       : human_sumset(A, m, power);
  emit(text, out_path, out);
  return 0;
}

int run_holes(const SetInput& si, Nat h2_cutoff, const std::string& format,
              const std::string& out_path, std::ostream& out) {
  require_format(format, false);
  const GeneratorSet A = build_generator_set(si);
  const Nat reg = regularity(A);
  const std::vector<Hole> hs = holes(A);
  const CohomologyTable table = cohomology_dims(A, h2_cutoff);
  const std::string text =
      format == "json"
          ? reports::render(reports::holes_payload(A, reg, hs, table))
          : human_holes(A, reg, hs, table);
  emit(text, out_path, out);
  return 0;
}

int run_scan(const std::string& alpha_range, const std::string& mode_name,
             std::optional<Nat> m_restrict, unsigned workers, bool allow_large,
             const std::string& format, const std::string& out_path,
             std::ostream& out) {
  const auto [lo, hi] = parse_alpha_range(alpha_range);
  const auto mode = scan_mode_from_string(mode_name);
  if (!mode) throw UsageError("unknown scan mode '" + mode_name + "'");
  const std::uint64_t cost = smooth_count_range(lo, hi);
  if (cost > kLargeScanSetLimit) {
    if (!allow_large)
      throw UsageError("scan would enumerate " + std::to_string(cost) +
                       " sets (limit " + std::to_string(kLargeScanSetLimit) +
                       "); pass --allow-large to confirm");
    out << "large scan confirmed: " << cost << " sets\n";
  }
  const ScanReport rep = scan(lo, hi, *mode, m_restrict, workers);
  std::string text;
  if (format == "json")
    text = reports::render(reports::scan_payload(rep));
  else if (format == "csv")
    text = reports::scan_csv(rep);
  else
    text = human_scan(rep);
  emit(text, out_path, out);
  return rep.findings.empty() ? 0 : 1;
}

int run_verify(const std::string& alpha_range, unsigned workers,
               const std::string& format, const std::string& out_path,
               std::ostream& out) {
  const auto [lo, hi] = parse_alpha_range(alpha_range);
  const VerifyReport rep = verify_suite(lo, hi, workers);
  std::string text;
  if (format == "json")
    text = reports::render(reports::verify_payload(rep));
  else if (format == "csv")
    text = reports::verify_csv(rep);
  else
    text = human_verify(rep);
  emit(text, out_path, out);
  return rep.clean() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "invariants of smooth projective monomial curves: regularity, "
      "reduction numbers, holes, bounds and exhaustive counterexample scans"};
  app.require_subcommand(1);

  SetInput si;
  std::string format = "human";
  std::string out_path;
  std::string alpha_range;
  std::string mode_name = "q-counterexample";
  Nat m = 0;
  Nat h2_cutoff = 3;
  unsigned workers = default_workers();
  bool allow_large = false;

  std::vector<CLI::Option*> alpha_opts;
  auto add_set_opts = [&](CLI::App* cmd) {
    cmd->add_option("--set", si.set_text,
                    "comma-separated generator exponents, e.g. "
                    "0,1,2,5,13,14,16,17");
    cmd->add_option("--pairs", si.pairs_text,
                    "generator pairs with constant sum alpha, e.g. "
                    "\"(17,0),(16,1),(15,2),(12,5),(4,13),(3,14),(1,16),"
                    "(0,17)\"");
    alpha_opts.push_back(cmd->add_option(
        "--alpha", si.alpha, "degree of the curve; defaults to max(set)"));
  };
  auto add_io_opts = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "human | json | csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze",
      "invariants, properties, bounds and family certificates for one set");
  add_set_opts(analyze);
  add_io_opts(analyze);

  CLI::App* sumset = app.add_subcommand(
      "sumset", "support of the m-fold sumset of a generator set");
  add_set_opts(sumset);
  add_io_opts(sumset);
  sumset->add_option("--m", m, "which power to compute")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* holes_cmd = app.add_subcommand(
      "holes", "normalisation holes and local cohomology dimensions");
  add_set_opts(holes_cmd);
  add_io_opts(holes_cmd);
  holes_cmd
      ->add_option("--h2-cutoff", h2_cutoff,
                   "report h2 in degrees -1..-cutoff (default 3)")
      ->check(CLI::PositiveNumber);

  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "exhaustive scan over every smooth set in an alpha range");
  scan_cmd
      ->add_option("--alpha", alpha_range,
                   "alpha range, e.g. 2..16 or a single value")
      ->required();
  scan_cmd
      ->add_option("--mode", mode_name,
                   "q-counterexample | p1-violation | p2-violation")
      ->check(CLI::IsMember(
          {"q-counterexample", "p1-violation", "p2-violation"}));
  CLI::Option* m_opt =
      scan_cmd
          ->add_option("--m", m,
                       "restrict the violation check to this power only")
          ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--workers", workers,
                       "worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--allow-large", allow_large,
                     "confirm scans beyond 2^25 sets");
  add_io_opts(scan_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "run the whole invariant/bound/family check battery on every smooth "
      "set in an alpha range");
  verify_cmd
      ->add_option("--alpha", alpha_range,
                   "alpha range, e.g. 2..14 or a single value")
      ->required();
  verify_cmd
      ->add_option("--workers", workers,
                   "worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
  add_io_opts(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  si.alpha_given = std::any_of(alpha_opts.begin(), alpha_opts.end(),
                               [](CLI::Option* o) { return o->count() > 0; });

  try {
    if (analyze->parsed()) return run_analyze(si, format, out_path, out);
    if (sumset->parsed()) return run_sumset(si, m, format, out_path, out);
    if (holes_cmd->parsed())
      return run_holes(si, h2_cutoff, format, out_path, out);
    if (scan_cmd->parsed()) {
      std::optional<Nat> m_restrict;
      if (m_opt->count() > 0) m_restrict = m;
      return run_scan(alpha_range, mode_name, m_restrict, workers, allow_large,
                      format, out_path, out);
    }
    if (verify_cmd->parsed())
      return run_verify(alpha_range, workers, format, out_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace monocurve::cli
