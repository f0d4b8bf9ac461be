#include "aplab/interval.hpp"

#include <algorithm>
#include <stdexcept>

#include "aplab/errors.hpp"

namespace aplab {

Colour opposite(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }

const char* to_string(Colour c) { return c == Colour::Red ? "red" : "blue"; }

const char* to_string(IvlType t) { return t == IvlType::TypeI ? "I" : "II"; }

IntervalBody IntervalBody::coloured(Colour c) {
  IntervalBody b;
  b.coloured_ = true;
  b.colour_ = c;
  return b;
}

IntervalBody IntervalBody::uncoloured(IvlType t, int direction) {
  if (direction != +1 && direction != -1)
    throw InvalidParameter("IntervalBody: direction must be +1 or -1");
  IntervalBody b;
  b.coloured_ = false;
  b.type_ = t;
  b.direction_ = direction;
  return b;
}

Colour IntervalBody::colour() const {
  if (!coloured_) throw std::logic_error("IntervalBody: uncoloured interval has no colour");
  return colour_;
}

IvlType IntervalBody::ivl_type() const {
  if (coloured_) throw std::logic_error("IntervalBody: coloured interval has no type tag");
  return type_;
}

int IntervalBody::direction() const {
  if (coloured_) throw std::logic_error("IntervalBody: coloured interval has no direction");
  return direction_;
}

IntervalBody IntervalBody::with_colour(Colour c) const {
  IntervalBody b = *this;
  if (b.coloured_) b.colour_ = c;
  return b;
}

IntervalBody IntervalBody::with_direction(int direction) const {
  if (direction != +1 && direction != -1)
    throw InvalidParameter("IntervalBody: direction must be +1 or -1");
  IntervalBody b = *this;
  if (!b.coloured_) b.direction_ = direction;
  return b;
}

bool IntervalBody::operator==(const IntervalBody& other) const {
  if (coloured_ != other.coloured_) return false;
  if (coloured_) return colour_ == other.colour_;
  return type_ == other.type_ && direction_ == other.direction_;
}

bool Interval::contains(const Rational& x) const {
  if (body.is_coloured()) return start <= x && x <= end;
  return start < x && x < end;
}

bool Interval::operator==(const Interval& other) const {
  return start == other.start && end == other.end && body == other.body;
}

ConstructionId parse_construction(const std::string& name) {
  if (name == "ap1414") return ConstructionId::Ap1414;
  if (name == "ap3x30000") return ConstructionId::Ap3x30000;
  throw UnknownConstruction("unknown construction '" + name + "'");
}

const char* to_string(ConstructionId id) {
  return id == ConstructionId::Ap1414 ? "ap1414" : "ap3x30000";
}

std::size_t Configuration::locate_index(const Rational& x) const {
  if (intervals.empty()) throw std::logic_error("locate: empty configuration");
  const Rational xr = normalize_mod1(x);
  // Last interval with start <= xr; exists because the list starts at 0.
  auto it = std::upper_bound(intervals.begin(), intervals.end(), xr,
                             [](const Rational& v, const Interval& iv) { return v < iv.start; });
  if (it == intervals.begin()) throw std::logic_error("locate: configuration does not start at 0");
  const std::size_t i = static_cast<std::size_t>(it - intervals.begin()) - 1;
  if (intervals[i].contains(xr)) return i;
  // xr is the left endpoint of an open interval; the closed predecessor owns
  // it. For xr == 0 the predecessor is the last interval, ending at 1 ~ 0.
  const std::size_t prev = (i + intervals.size() - 1) % intervals.size();
  const Interval& p = intervals[prev];
  if (p.body.is_coloured() && (p.end == xr || (xr == 0 && p.end == 1))) return prev;
  throw std::logic_error("locate: point " + fraction_str(xr) + " not owned by any interval");
}

const Interval& Configuration::locate(const Rational& x) const { return intervals[locate_index(x)]; }

Rational Configuration::measure(Colour c) const {
  Rational total(0);
  for (const auto& iv : intervals)
    if (iv.body.is_coloured() && iv.body.colour() == c) total += iv.length();
  return total;
}

Rational Configuration::uncoloured_measure() const {
  Rational total(0);
  for (const auto& iv : intervals)
    if (!iv.body.is_coloured()) total += iv.length();
  return total;
}

void Configuration::validate() const {
  if (intervals.empty()) throw std::logic_error("validate: empty configuration");
  if (intervals.front().start != 0) throw std::logic_error("validate: does not start at 0");
  if (intervals.back().end != 1) throw std::logic_error("validate: does not end at 1");
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const Interval& iv = intervals[i];
    if (!(iv.start < iv.end)) throw std::logic_error("validate: empty or reversed interval");
    if (i + 1 < intervals.size() && intervals[i + 1].start != iv.end)
      throw std::logic_error("validate: gap or overlap at " + fraction_str(iv.end));
  }
  // Every boundary point needs a closed owner, including 0 ~ 1 across the cut.
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    if (!intervals[i].body.is_coloured() && !intervals[i + 1].body.is_coloured())
      throw std::logic_error("validate: adjacent open intervals at " + fraction_str(intervals[i].end));
  }
  if (!intervals.front().body.is_coloured() && !intervals.back().body.is_coloured())
    throw std::logic_error("validate: point 0 not owned by any closed interval");
  // Adjacent closed intervals sharing an endpoint must agree there.
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const std::size_t j = (i + 1) % intervals.size();
    const Interval& a = intervals[i];
    const Interval& b = intervals[j];
    if (a.body.is_coloured() && b.body.is_coloured() &&
        a.body.colour() != b.body.colour())
      throw std::logic_error("validate: conflicting colours at " + fraction_str(a.end));
  }
}

bool Configuration::operator==(const Configuration& other) const {
  return construction == other.construction && level == other.level && intervals == other.intervals;
}

}  // namespace aplab
