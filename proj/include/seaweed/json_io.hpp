#pragma once

#include <json.hpp>

#include "seaweed/meander.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/spectrum.hpp"
#include "seaweed/verify.hpp"
#include "seaweed/winding.hpp"

namespace seaweed {

// Payload builders shared by the CLI and its tests. Field order is fixed
// (ordered_json) so identical invocations emit identical bytes. "schema"
// names the payload version documented in docs/schema.md.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "seaweed/v1";

Json json_spectrum(const SpectrumMultiset& s);
Json json_rationals(const std::vector<Rational>& values);

Json parse_payload(const SeaweedType& t);
Json meander_payload(const Meander& m);
Json index_payload(const SeaweedType& t);
Json frobenius_payload(const SeaweedType& t);
Json spectrum_payload(const SeaweedType& t);
Json principal_payload(const SeaweedType& t, int reference_vertex);
Json blocks_payload(const SeaweedType& t);
Json simple_payload(const SeaweedType& t);
Json windup_payload(const SeaweedType& t, MoveKind move);
Json oracle_payload(const SeaweedType& t);
Json theorem_payload(const TheoremReport& report);
Json windup_report_payload(const WindupReport& report);
Json sweep_payload(const std::vector<SweepSummary>& summaries);

// wind-down emits JSON lines rather than one document.
std::string winddown_lines(const WindingTrace& trace);

// One row per composition pair: n,type,frobenius,index,min,max,unbroken,
// symmetric,unimodal (spectral columns blank for non-Frobenius or n < 2).
std::string sweep_csv(int n_min, int n_max);

Json error_payload(const std::string& kind, const std::string& message);

}  // namespace seaweed
