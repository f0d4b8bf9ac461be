#pragma once

#include <set>
#include <vector>

#include "aplab/interval.hpp"
#include "aplab/rational.hpp"

namespace aplab {

// A two-colouring of the integers, periodic with period p.
struct PeriodicZColouring {
  long p = 0;
  std::vector<Colour> colours;
  Colour at(long long n) const;
};

// A maximal stretch between consecutive red integers inside a window: both
// endpoints red, interior (possibly empty) all blue.
struct Gap {
  long long start = 0;
  long long end = 0;
  bool operator==(const Gap&) const = default;
};

// All gaps with both endpoints in [window_lo, window_hi].
std::vector<Gap> find_gaps(const PeriodicZColouring& c, long long window_lo, long long window_hi);

// Is the progression {-ell*d, ..., 0, ..., m*d} a table: both endpoints red
// and no two consecutive red multiples further apart than (m+ell)/(k+1) steps?
// `reds` holds the red integers. All parameters must be positive.
bool is_table(const std::set<long long>& reds, long long d, long long ell, long long m, long long k);

// Largest number of red multiples a table with parameters (m, k) can force:
// 3*(k+1)^c - 1 where c is the least exponent with m <= ((k+1)/k)^c. Exact.
BigInt red_count_bound(long long m, long long k);

// A ladder: finitely many non-decreasing terms spanning exactly 1, with
// consecutive differences at most 1/4. Such a sequence must visit every
// closed arc of length 1/4 on the circle, in particular [1/2, 3/4].
struct Ladder {
  int case_id = 0;
  Rational anchor;
  Rational diff;
  std::vector<Rational> terms;
};

// The supported difference bands. Throws InvalidParameter for unknown ids.
//   case 2: d in [1/4, 5/16]   case 3: d in [5/16, 7/20]   case 4: d in [7/20, 2/5]
std::pair<Rational, Rational> ladder_case_range(int case_id);

// Builds the ladder for the given band. Throws OutOfRange when d is outside
// the band's closed range.
Ladder build_ladder(int case_id, const Rational& anchor, const Rational& d);

// Checks the three ladder axioms on an arbitrary term list.
bool verify_ladder(const std::vector<Rational>& terms);

// Does some term land in [1/2, 3/4] modulo 1?
bool ladder_hits_blue_arc(const std::vector<Rational>& terms);

}  // namespace aplab
