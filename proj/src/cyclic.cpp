#include "aplab/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aplab/errors.hpp"

namespace aplab {

namespace {

void check_pattern(PatternSpec spec) {
  if (spec.a < 0 || spec.b < 0 || spec.a + spec.b < 1)
    throw InvalidParameter("pattern: need a, b >= 0 and a + b >= 1");
}

void check_modulus(long p) {
  if (p < 2) throw InvalidParameter("modulus must be >= 2");
}

}  // namespace

PartialCyclicColouring induce_partial(ConstructionId id, long p, int depth) {
  check_modulus(p);
  if (depth < 0) throw InvalidParameter("induce: depth must be >= 0");
  PartialCyclicColouring out;
  out.p = p;
  out.colours.assign(static_cast<std::size_t>(p), PointColour::Unresolved);
  out.meta.source = to_string(id);
  out.meta.depth = depth;
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < p; ++i) {
    Rational x(i, p);
    x.canonicalize();
    out.colours[static_cast<std::size_t>(i)] = colour_at(id, x, depth);
  }
  long unresolved = 0;
  for (const auto c : out.colours)
    if (c == PointColour::Unresolved) ++unresolved;
  out.meta.unresolved_count = unresolved;
  return out;
}

CyclicColouring complete(const PartialCyclicColouring& partial, Colour fill) {
  CyclicColouring out;
  out.p = partial.p;
  out.meta = partial.meta;
  out.meta.fill = fill;
  out.colours.reserve(partial.colours.size());
  for (const auto c : partial.colours) {
    if (c == PointColour::Red)
      out.colours.push_back(Colour::Red);
    else if (c == PointColour::Blue)
      out.colours.push_back(Colour::Blue);
    else
      out.colours.push_back(fill);
  }
  return out;
}

CyclicColouring induce(ConstructionId id, long p, int depth, Colour fill) {
  return complete(induce_partial(id, p, depth), fill);
}

bool is_witness(const CyclicColouring& c, PatternSpec spec, long start, long d) {
  check_pattern(spec);
  long idx = ((start % c.p) + c.p) % c.p;
  const long dd = ((d % c.p) + c.p) % c.p;
  for (long i = 0; i < spec.a; ++i) {
    if (c.colours[static_cast<std::size_t>(idx)] != Colour::Red) return false;
    idx += dd;
    if (idx >= c.p) idx -= c.p;
  }
  for (long i = 0; i < spec.b; ++i) {
    if (c.colours[static_cast<std::size_t>(idx)] != Colour::Blue) return false;
    idx += dd;
    if (idx >= c.p) idx -= c.p;
  }
  return true;
}

bool is_witness(const PartialCyclicColouring& c, PatternSpec spec, long start, long d) {
  check_pattern(spec);
  long idx = ((start % c.p) + c.p) % c.p;
  const long dd = ((d % c.p) + c.p) % c.p;
  for (long i = 0; i < spec.a; ++i) {
    if (c.colours[static_cast<std::size_t>(idx)] == PointColour::Blue) return false;
    idx += dd;
    if (idx >= c.p) idx -= c.p;
  }
  for (long i = 0; i < spec.b; ++i) {
    if (c.colours[static_cast<std::size_t>(idx)] == PointColour::Red) return false;
    idx += dd;
    if (idx >= c.p) idx -= c.p;
  }
  return true;
}

std::optional<APWitness> find_pattern_naive(const CyclicColouring& c, PatternSpec spec) {
  check_pattern(spec);
  check_modulus(c.p);
  const long p = c.p;
  for (long d = 1; d < p; ++d) {
    for (long s = 0; s < p; ++s) {
      long idx = s;
      bool ok = true;
      for (long i = 0; i < spec.a && ok; ++i) {
        if (c.colours[static_cast<std::size_t>(idx)] != Colour::Red) ok = false;
        idx += d;
        if (idx >= p) idx -= p;
      }
      for (long i = 0; i < spec.b && ok; ++i) {
        if (c.colours[static_cast<std::size_t>(idx)] != Colour::Blue) ok = false;
        idx += d;
        if (idx >= p) idx -= p;
      }
      if (ok) return APWitness{s, d, spec};
    }
  }
  return std::nullopt;
}

std::optional<APWitness> find_pattern_partial(const PartialCyclicColouring& c, PatternSpec spec) {
  check_pattern(spec);
  check_modulus(c.p);
  const long p = c.p;
  for (long d = 1; d < p; ++d) {
    for (long s = 0; s < p; ++s) {
      if (is_witness(c, spec, s, d)) return APWitness{s, d, spec};
    }
  }
  return std::nullopt;
}

namespace {

// Smallest start residue of an occurrence with difference d, or -1. Walks the
// gcd(d,p) orbits of +d, cuts each colour word into maximal cyclic runs and
// reads occurrences off the run boundaries.
long orbit_min_start(const std::vector<Colour>& col, long p, PatternSpec spec, long d,
                     std::vector<std::uint8_t>& word) {
  const long g = std::gcd(d, p);
  const long len = p / g;
  const long a = spec.a, b = spec.b;
  long best = -1;
  word.resize(static_cast<std::size_t>(len));
  for (long cls = 0; cls < g; ++cls) {
    long idx = cls;
    for (long t = 0; t < len; ++t) {
      word[static_cast<std::size_t>(t)] = col[static_cast<std::size_t>(idx)] == Colour::Blue;
      idx += d;
      if (idx >= p) idx -= p;
    }
    const auto consider = [&](long j) {
      const long s = (cls + j % len * d % p) % p;
      if (best < 0 || s < best) best = s;
    };
    bool all_same = true;
    for (long t = 1; t < len; ++t) {
      if (word[static_cast<std::size_t>(t)] != word[0]) {
        all_same = false;
        break;
      }
    }
    if (all_same) {
      // A single-colour orbit matches iff the pattern needs only that colour.
      const bool blue = word[0] != 0;
      if ((blue && a == 0) || (!blue && b == 0))
        for (long j = 0; j < len; ++j) consider(j);
      continue;
    }
    // First index opening a run.
    long first = 0;
    for (long t = 0; t < len; ++t) {
      if (word[static_cast<std::size_t>(t)] != word[static_cast<std::size_t>((t + len - 1) % len)]) {
        first = t;
        break;
      }
    }
    // Maximal cyclic runs, in order, starting at `first`.
    struct Run {
      long start, length;
      bool blue;
    };
    std::vector<Run> runs;
    long covered = 0;
    long cur = first;
    while (covered < len) {
      const bool colour = word[static_cast<std::size_t>(cur)] != 0;
      long rl = 1;
      while (rl < len - covered &&
             word[static_cast<std::size_t>((cur + rl) % len)] == (colour ? 1 : 0))
        ++rl;
      runs.push_back(Run{cur, rl, colour});
      covered += rl;
      cur = (cur + rl) % len;
    }
    if (a == 0) {
      for (const Run& r : runs)
        if (r.blue && r.length >= b)
          for (long off = 0; off + b <= r.length; ++off) consider((r.start + off) % len);
    } else if (b == 0) {
      for (const Run& r : runs)
        if (!r.blue && r.length >= a)
          for (long off = 0; off + a <= r.length; ++off) consider((r.start + off) % len);
    } else {
      for (std::size_t ri = 0; ri < runs.size(); ++ri) {
        const Run& red = runs[ri];
        const Run& nxt = runs[(ri + 1) % runs.size()];
        if (!red.blue && nxt.blue && red.length >= a && nxt.length >= b) {
          const long e = (red.start + red.length - 1) % len;
          consider(((e - a + 1) % len + len) % len);
        }
      }
    }
  }
  return best;
}

}  // namespace

std::optional<APWitness> find_pattern_orbit(const CyclicColouring& c, PatternSpec spec) {
  check_pattern(spec);
  check_modulus(c.p);
  std::vector<std::uint8_t> word;
  for (long d = 1; d < c.p; ++d) {
    const long s = orbit_min_start(c.colours, c.p, spec, d, word);
    if (s >= 0) return APWitness{s, d, spec};
  }
  return std::nullopt;
}

SearchCertificate verify_no_pattern(const CyclicColouring& c, PatternSpec spec) {
  check_pattern(spec);
  check_modulus(c.p);
  const long p = c.p;
  std::vector<long> starts(static_cast<std::size_t>(p), -1);
#pragma omp parallel
  {
    std::vector<std::uint8_t> word;
#pragma omp for schedule(dynamic, 8)
    for (long d = 1; d < p; ++d)
      starts[static_cast<std::size_t>(d)] = orbit_min_start(c.colours, p, spec, d, word);
  }
  SearchCertificate cert;
  cert.pairs_scanned = static_cast<long long>(p - 1) * p;
  for (long d = 1; d < p; ++d) {
    if (starts[static_cast<std::size_t>(d)] >= 0) {
      cert.counterexample = APWitness{starts[static_cast<std::size_t>(d)], d, spec};
      return cert;
    }
  }
  cert.verified = true;
  return cert;
}

FindabilityReport survey_random_colourings(const std::vector<long>& primes, PatternSpec spec,
                                           long trials, double delta, std::uint64_t seed) {
  check_pattern(spec);
  if (trials < 1) throw InvalidParameter("survey: trials must be >= 1");
  if (!(delta > 0.0) || delta > 0.5)
    throw InvalidParameter("survey: delta must lie in (0, 1/2]");
  for (const long p : primes) {
    check_modulus(p);
    const double dp = delta * static_cast<double>(p);
    if (dp < 1.0) throw InvalidParameter("survey: delta*p must be >= 1");
    const long thr = static_cast<long>(std::ceil(dp));
    if (2 * thr > p)
      throw InvalidParameter("survey: both colour classes cannot reach ceil(delta*p)");
  }
  FindabilityReport report;
  report.pattern = spec;
  report.delta = delta;
  report.trials = trials;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (const long p : primes) {
    const long thr = static_cast<long>(std::ceil(delta * static_cast<double>(p)));
    FindabilityReport::PerPrime row;
    row.p = p;
    row.trials = trials;
    for (long t = 0; t < trials; ++t) {
      CyclicColouring c;
      c.p = p;
      c.meta.source = "random";
      c.colours.resize(static_cast<std::size_t>(p));
      for (;;) {
        long reds = 0;
        for (long i = 0; i < p; ++i) {
          const bool blue = (rng() & 1) != 0;
          c.colours[static_cast<std::size_t>(i)] = blue ? Colour::Blue : Colour::Red;
          if (!blue) ++reds;
        }
        if (reds >= thr && p - reds >= thr) break;
      }
      if (find_pattern_orbit(c, spec).has_value())
        ++row.with_witness;
      else
        row.witness_free.push_back(std::move(c));
    }
    report.per_prime.push_back(std::move(row));
  }
  return report;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
  for (long i = 2; i <= n; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

}  // namespace aplab
