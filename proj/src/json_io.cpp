#include "monocurve/json_io.hpp"

namespace monocurve::reports {

ojson json_of(const GeneratorSet& A) {
  return ojson{{"alpha", A.alpha()}, {"elements", A.elements()}};
}

ojson json_of(const CurveInvariants& inv) {
  return ojson{
      {"reg", inv.reg},
      {"r", inv.r},
      {"epsilon", inv.epsilon},
      {"lambda", inv.lambda},
      {"degree", inv.degree},
      {"codim", inv.codim},
      {"glp_bound", inv.glp_bound},
      {"improvement_bound", inv.improvement_bound},
  };
}

ojson json_of(const Witness& w) {
  return ojson{{"m", w.m}, {"missing", w.missing}, {"detail", w.detail}};
}

ojson json_of(const PropertyReport& rep) {
  ojson j{{"holds", rep.holds}, {"scanned_m_max", rep.scanned_m_max}};
  j["witness"] = rep.witness ? json_of(*rep.witness) : ojson(nullptr);
  return j;
}

ojson json_of(const QReport& rep) {
  return ojson{{"holds", rep.holds}, {"r", rep.r}, {"reg", rep.reg}};
}

ojson json_of(const BoundReport& rep) {
  ojson arr = ojson::array();
  for (const BoundCheck& c : rep.checks)
    arr.push_back(ojson{{"name", c.name},
                        {"lhs", c.lhs},
                        {"rhs", c.rhs},
                        {"satisfied", c.satisfied}});
  return arr;
}

ojson json_of(const FamilyReport& rep) {
  ojson j;
  if (rep.p2_family) {
    j["p2_family"] = ojson{{"member", true},
                           {"p", rep.p2_family->p},
                           {"q", rep.p2_family->q},
                           {"l", rep.p2_family->l},
                           {"mirrored", rep.p2_family->mirrored}};
  } else {
    j["p2_family"] = ojson{{"member", false}};
  }
  j["equality_family"] = ojson{{"member", rep.equality_family}};
  if (rep.reduction_formula) {
    const ReductionFormulaMatch& m = *rep.reduction_formula;
    j["reduction_formula"] = ojson{{"member", true},
                                   {"epsilon", m.epsilon},
                                   {"p1", m.p1},
                                   {"p_last", m.p_last},
                                   {"delta", m.delta},
                                   {"gamma", m.gamma},
                                   {"lower_bound", m.lower_bound},
                                   {"exact", m.exact},
                                   {"predicted", m.predicted}};
  } else {
    j["reduction_formula"] = ojson{{"member", false}};
  }
  return j;
}

ojson json_of(const std::vector<Hole>& holes) {
  ojson arr = ojson::array();
  for (const Hole& h : holes)
    arr.push_back(ojson{{"u1", h.u1}, {"degree", h.degree}});
  return arr;
}

ojson json_of(const CohomologyTable& table) {
  ojson h1 = ojson::array();
  for (const auto& [degree, dim] : table.h1)
    h1.push_back(ojson{{"degree", degree}, {"dim", dim}});
  ojson h2 = ojson::array();
  for (const auto& [degree, dim] : table.h2)
    h2.push_back(ojson{{"degree", degree}, {"dim", dim}});
  return ojson{{"h1", h1}, {"h2", h2}};
}

ojson support_json(const BitPoly& f) {
  const Extents ex = f.extents();
  ojson gaps = ojson::array();
  for (const Gap& g : f.gaps())
    gaps.push_back(ojson{{"lo", g.lo}, {"hi", g.hi}});
  return ojson{{"udeg", ex.udeg},
               {"deg", ex.deg},
               {"size", f.support_size()},
               {"full", f.is_full()},
               {"gaps", gaps}};
}

namespace {

ojson payload_head(const char* command) {
  return ojson{{"schema_version", kSchemaVersion}, {"command", command}};
}

}  // namespace

ojson analyze_payload(const GeneratorSet& A, const CurveInvariants& inv,
                      const QReport& q, const PropertyReport& p1,
                      const PropertyReport& p2, const BoundReport& bounds,
                      const FamilyReport& families) {
  ojson j = payload_head("analyze");
  j["generator_set"] = json_of(A);
  j["invariants"] = json_of(inv);
  j["q"] = json_of(q);
  j["p1"] = json_of(p1);
  j["p2"] = json_of(p2);
  j["bounds"] = json_of(bounds);
  j["families"] = json_of(families);
  return j;
}

ojson sumset_payload(const GeneratorSet& A, Nat m, const BitPoly& power) {
  ojson j = payload_head("sumset");
  j["generator_set"] = json_of(A);
  j["m"] = m;
  j["support"] = support_json(power);
  return j;
}

ojson holes_payload(const GeneratorSet& A, Nat reg,
                    const std::vector<Hole>& holes,
                    const CohomologyTable& table) {
  ojson j = payload_head("holes");
  j["generator_set"] = json_of(A);
  j["reg"] = reg;
  j["holes"] = json_of(holes);
  const ojson cohomology = json_of(table);
  j["h1"] = cohomology["h1"];
  j["h2"] = cohomology["h2"];
  return j;
}

ojson scan_payload(const ScanReport& rep) {
  ojson j = payload_head("scan");
  j["alpha_lo"] = rep.alpha_lo;
  j["alpha_hi"] = rep.alpha_hi;
  j["mode"] = std::string(to_string(rep.mode));
  j["m"] = rep.m_restrict ? ojson(*rep.m_restrict) : ojson(nullptr);
  j["total_sets"] = rep.total_sets;
  ojson findings = ojson::array();
  for (const Finding& f : rep.findings) {
    ojson jf{{"generator_set",
              ojson{{"alpha", f.alpha}, {"elements", f.elements}}},
             {"invariants", json_of(f.inv)}};
    jf["witness"] = f.witness ? json_of(*f.witness) : ojson(nullptr);
    jf["canonical"] = f.canonical;
    findings.push_back(std::move(jf));
  }
  j["findings"] = std::move(findings);
  return j;
}

ojson verify_payload(const VerifyReport& rep) {
  ojson j = payload_head("verify");
  j["alpha_lo"] = rep.alpha_lo;
  j["alpha_hi"] = rep.alpha_hi;
  j["total_sets"] = rep.total_sets;
  ojson checks = ojson::array();
  for (const auto& [name, counter] : rep.checks)
    checks.push_back(ojson{{"name", name},
                           {"passes", counter.passes},
                           {"failures", counter.failures}});
  j["checks"] = std::move(checks);
  ojson failures = ojson::array();
  for (const VerifyFailure& f : rep.failures)
    failures.push_back(
        ojson{{"generator_set",
               ojson{{"alpha", f.alpha}, {"elements", f.elements}}},
              {"check", f.check},
              {"detail", f.detail}});
  j["failures"] = std::move(failures);
  return j;
}

std::string render(const ojson& payload) { return payload.dump(2) + "\n"; }

namespace {

std::string join_space(const std::vector<Nat>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

std::string scan_csv(const ScanReport& rep) {
  std::string out = "alpha,elements,reg,r,witness_m,missing,canonical\n";
  for (const Finding& f : rep.findings) {
    out += std::to_string(f.alpha) + "," + join_space(f.elements) + "," +
           std::to_string(f.inv.reg) + "," + std::to_string(f.inv.r) + ",";
    if (f.witness) {
      out += std::to_string(f.witness->m) + "," +
             join_space(f.witness->missing);
    } else {
      out += ",";
    }
    out += "," + join_space(f.canonical) + "\n";
  }
  return out;
}

std::string verify_csv(const VerifyReport& rep) {
  std::string out = "check,passes,failures\n";
  for (const auto& [name, counter] : rep.checks)
    out += name + "," + std::to_string(counter.passes) + "," +
           std::to_string(counter.failures) + "\n";
  return out;
}

}  // namespace monocurve::reports
