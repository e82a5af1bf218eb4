#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "monocurve/curve.hpp"
#include "monocurve/properties.hpp"
#include "monocurve/search.hpp"

namespace monocurve::reports {

// All machine-readable output is built here so the CLI and the tests share
// byte-identical serialisation. ordered_json keeps insertion order, which
// makes the field order stable and lets reports round-trip byte-for-byte.
// Timing fields are deliberately left out: reports must not depend on the
// worker count or the clock.

using ojson = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

ojson json_of(const GeneratorSet& A);
ojson json_of(const CurveInvariants& inv);
ojson json_of(const Witness& w);
ojson json_of(const PropertyReport& rep);
ojson json_of(const QReport& rep);
ojson json_of(const BoundReport& rep);
ojson json_of(const FamilyReport& rep);
ojson json_of(const std::vector<Hole>& holes);
ojson json_of(const CohomologyTable& table);
/// Lossless description of a support: extents, size, fullness and gaps.
ojson support_json(const BitPoly& f);

// Complete CLI payloads, schema_version and command first.
ojson analyze_payload(const GeneratorSet& A, const CurveInvariants& inv,
                      const QReport& q, const PropertyReport& p1,
                      const PropertyReport& p2, const BoundReport& bounds,
                      const FamilyReport& families);
ojson sumset_payload(const GeneratorSet& A, Nat m, const BitPoly& power);
ojson holes_payload(const GeneratorSet& A, Nat reg,
                    const std::vector<Hole>& holes,
                    const CohomologyTable& table);
ojson scan_payload(const ScanReport& rep);
ojson verify_payload(const VerifyReport& rep);

/// The one serialisation used everywhere: two-space indent plus newline.
std::string render(const ojson& payload);

std::string scan_csv(const ScanReport& rep);
std::string verify_csv(const VerifyReport& rep);

}  // namespace monocurve::reports
