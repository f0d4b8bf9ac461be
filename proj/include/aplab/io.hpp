#pragma once

#include <json.hpp>

#include <string>

#include "aplab/construction.hpp"
#include "aplab/cyclic.hpp"
#include "aplab/diagnostics.hpp"
#include "aplab/interval.hpp"
#include "aplab/structure_checks.hpp"

namespace aplab {

using Json = nlohmann::json;

// Rationals serialize as "num/den" ("n" for integers); colours and interval
// kinds as lowercase words; directions as +1/-1 integers.

Json interval_to_json(const Interval& iv);
Json config_to_json(const Configuration& c);
// Columns: start,end,kind,colour,ivl_type,direction. Inapplicable cells empty.
std::string config_to_csv(const Configuration& c);

Json witness_to_json(const APWitness& w);
Json certificate_to_json(const SearchCertificate& cert);
Json report_to_json(const StructureReport& report);
Json measures_to_json(const LevelMeasures& m);
Json ladder_to_json(const Ladder& ladder);
Json findability_to_json(const FindabilityReport& report);

Json colouring_to_json(const CyclicColouring& c);
Json colouring_to_json(const PartialCyclicColouring& c);

// Two lines: the modulus, then a length-p string over {R, B, U}.
std::string colouring_to_text(const CyclicColouring& c);
std::string colouring_to_text(const PartialCyclicColouring& c);
// Inverse; meta.source becomes "external". Throws InvalidParameter.
PartialCyclicColouring parse_colouring_text(const std::string& text);
// Partial colouring with no unresolved cells, as a total one.
CyclicColouring as_total(const PartialCyclicColouring& partial);

}  // namespace aplab
