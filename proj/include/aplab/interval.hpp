#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aplab/rational.hpp"

namespace aplab {

enum class Colour { Red, Blue };

Colour opposite(Colour c);
const char* to_string(Colour c);

// Uncoloured intervals carry a replacement-rule tag. The ap1414 construction
// uses TypeI only; ap3x30000 mixes both.
enum class IvlType { TypeI, TypeII };

const char* to_string(IvlType t);

// Payload of one interval: either a colour (closed interval) or a rule tag
// plus direction (open interval, direction +1 or -1).
class IntervalBody {
 public:
  static IntervalBody coloured(Colour c);
  static IntervalBody uncoloured(IvlType t, int direction);

  bool is_coloured() const { return coloured_; }
  Colour colour() const;
  IvlType ivl_type() const;
  int direction() const;

  IntervalBody with_colour(Colour c) const;
  IntervalBody with_direction(int direction) const;

  bool operator==(const IntervalBody& other) const;

 private:
  IntervalBody() = default;
  bool coloured_ = true;
  Colour colour_ = Colour::Red;
  IvlType type_ = IvlType::TypeI;
  int direction_ = +1;
};

// One interval of a configuration. Coloured intervals are closed [start,end],
// uncoloured ones open (start,end); 0 < end - start always.
struct Interval {
  Rational start;
  Rational end;
  IntervalBody body;

  Rational length() const { return end - start; }
  // Membership under the closed/open convention.
  bool contains(const Rational& x) const;

  bool operator==(const Interval& other) const;
};

enum class ConstructionId { Ap1414, Ap3x30000 };

// Accepts "ap1414" / "ap3x30000"; throws UnknownConstruction otherwise.
ConstructionId parse_construction(const std::string& name);
const char* to_string(ConstructionId id);

// An exact partition of the circle [0,1) into closed coloured and open
// uncoloured intervals, listed in increasing position. Closed intervals own
// their endpoints; the point 0 is owned by a closed interval ending at 1 when
// the first interval is open at 0.
struct Configuration {
  ConstructionId construction = ConstructionId::Ap1414;
  int level = 0;
  std::vector<Interval> intervals;

  // Index of the interval owning x (x is reduced mod 1 first).
  std::size_t locate_index(const Rational& x) const;
  const Interval& locate(const Rational& x) const;

  Rational measure(Colour c) const;
  Rational uncoloured_measure() const;

  // Checks the partition invariants: coverage, ordering, boundary ownership,
  // no two adjacent open intervals, point 0 owned. Throws std::logic_error.
  void validate() const;

  bool operator==(const Configuration& other) const;
};

}  // namespace aplab
