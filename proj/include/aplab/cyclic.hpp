#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aplab/construction.hpp"
#include "aplab/interval.hpp"

namespace aplab {

// A pattern of length a+b in an arithmetic progression: the first a elements
// red, the last b blue. On partial colourings the semantics relax to "first a
// not blue, last b not red". a, b >= 0 and a+b >= 1.
struct PatternSpec {
  long a = 0;
  long b = 0;
};

// How a cyclic colouring was produced.
struct ColouringMeta {
  std::string source;  // "ap1414", "ap3x30000", "random", "external"
  int depth = 0;
  std::optional<Colour> fill;
  long unresolved_count = 0;
};

struct CyclicColouring {
  long p = 0;
  std::vector<Colour> colours;
  ColouringMeta meta;
};

struct PartialCyclicColouring {
  long p = 0;
  std::vector<PointColour> colours;
  ColouringMeta meta;
};

// Witness of an occurrence: the progression start, start+d, ..., start+(a+b-1)d
// taken mod p matches the pattern. Canonical witness: smallest d, then
// smallest start.
struct APWitness {
  long start = 0;
  long d = 0;
  PatternSpec pattern;
};

// Colour of residue i is the colour of the point i/p after `depth`
// refinements. Unresolved points stay unresolved in the partial variant and
// take `fill` in the total one.
PartialCyclicColouring induce_partial(ConstructionId id, long p, int depth);
CyclicColouring induce(ConstructionId id, long p, int depth, Colour fill);
CyclicColouring complete(const PartialCyclicColouring& partial, Colour fill);

bool is_witness(const CyclicColouring& c, PatternSpec spec, long start, long d);
bool is_witness(const PartialCyclicColouring& c, PatternSpec spec, long start, long d);

// Reference engine: scans every (d, start) pair directly. Serial.
std::optional<APWitness> find_pattern_naive(const CyclicColouring& c, PatternSpec spec);

// Run-length engine: for each difference d walks the orbits of +d, splits the
// colour word into maximal runs and reads occurrences off red-run/blue-run
// boundaries. Equivalent to the naive engine, far fewer colour lookups.
std::optional<APWitness> find_pattern_orbit(const CyclicColouring& c, PatternSpec spec);

// Naive scan under the relaxed partial semantics.
std::optional<APWitness> find_pattern_partial(const PartialCyclicColouring& c, PatternSpec spec);

// Exhaustive absence check over all differences, parallel across d. The
// counterexample, if any, is canonical regardless of thread count.
struct SearchCertificate {
  bool verified = false;
  std::optional<APWitness> counterexample;
  long long pairs_scanned = 0;
};
SearchCertificate verify_no_pattern(const CyclicColouring& c, PatternSpec spec);

// Random two-colourings with both classes of size >= ceil(delta*p), searched
// for the pattern. Witness-free colourings are returned in full so callers can
// dump them. Reproducible: a single mt19937_64 stream drawn in listing order.
struct FindabilityReport {
  struct PerPrime {
    long p = 0;
    long trials = 0;
    long with_witness = 0;
    std::vector<CyclicColouring> witness_free;
  };
  PatternSpec pattern;
  double delta = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<PerPrime> per_prime;
};
FindabilityReport survey_random_colourings(const std::vector<long>& primes, PatternSpec spec,
                                           long trials, double delta, std::uint64_t seed);

// Primes in [2, n], ascending.
std::vector<long> primes_up_to(long n);

}  // namespace aplab
