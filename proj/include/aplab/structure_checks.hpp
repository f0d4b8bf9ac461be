#pragma once

#include <string>
#include <vector>

#include "aplab/construction.hpp"
#include "aplab/interval.hpp"

namespace aplab {

struct CheckResult {
  std::string name;
  bool pass = false;
  // First offending interval, or a short note ("62 intervals checked",
  // "vacuous").
  std::string detail;
};

struct StructureReport {
  int level = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Band layout of an ap1414 configuration at level k: closed and open
// intervals alternate, colours alternate around the circle, every open band
// has width exactly 1/(4*5^k), every closed band at least that, and of any two
// closed bands separated by one open band at least one has exactly that width.
// Mismatched (config, k) pairs fail the width checks rather than throwing.
StructureReport verify_band_structure(const Configuration& c, int k);

// Neighbourhood guarantees of the ap3x30000 construction at level k, relative
// to each open interval's direction (length l):
//   TypeI:  rear closed blue >= 11/24*l, front closed blue >= 3*l, and a red
//           interval of c_{k+1} of length >= l/48 within 25/24*l behind the
//           rear end.
//   TypeII: rear closed red >= 6*l, front closed blue >= 6*l; those arising
//           from a TypeI parent also have a red interval of c_{k+1} of length
//           >= 4*l within 300*l beyond the front end.
// Throws InvalidParameter for constructions without these guarantees.
StructureReport verify_flanking_properties(ConstructionId id, int k);

}  // namespace aplab
