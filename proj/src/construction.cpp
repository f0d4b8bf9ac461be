#include "aplab/construction.hpp"

#include <algorithm>
#include <stdexcept>

#include "aplab/errors.hpp"

namespace aplab {

namespace {

// One entry of a replacement rule, in direction-local coordinates: the parent
// is rescaled to (0,1) with its direction pointing towards 1. rel_dir is the
// child's direction relative to the parent's.
struct RuleChild {
  Rational lo, hi;
  bool coloured;
  Colour colour = Colour::Red;
  IvlType type = IvlType::TypeI;
  int rel_dir = +1;
};

RuleChild open_child(long lo_n, long lo_d, long hi_n, long hi_d, IvlType t, int rel_dir) {
  return RuleChild{make_rational(lo_n, lo_d), make_rational(hi_n, hi_d), false, Colour::Red, t, rel_dir};
}

RuleChild closed_child(long lo_n, long lo_d, long hi_n, long hi_d, Colour c) {
  return RuleChild{make_rational(lo_n, lo_d), make_rational(hi_n, hi_d), true, c, IvlType::TypeI, +1};
}

const std::vector<RuleChild>& rule_for(ConstructionId id, IvlType t) {
  // ap1414: five equal parts. Blue sits nearer the rear end, red nearer the
  // front end; the middle open child runs against the parent.
  static const std::vector<RuleChild> ap1414_rule = {
      open_child(0, 1, 1, 5, IvlType::TypeI, +1),
      closed_child(1, 5, 2, 5, Colour::Blue),
      open_child(2, 5, 3, 5, IvlType::TypeI, -1),
      closed_child(3, 5, 4, 5, Colour::Red),
      open_child(4, 5, 1, 1, IvlType::TypeI, +1),
  };
  // ap3x30000 TypeI: a thin red seed near the rear end, flanked by two TypeII
  // children, then a blue block and a TypeI child filling the front two
  // thirds.
  static const std::vector<RuleChild> type1_rule = {
      open_child(0, 1, 1, 288, IvlType::TypeII, -1),
      closed_child(1, 288, 7, 288, Colour::Red),
      open_child(7, 288, 1, 36, IvlType::TypeII, +1),
      closed_child(1, 36, 1, 3, Colour::Blue),
      open_child(1, 3, 1, 1, IvlType::TypeI, +1),
  };
  // ap3x30000 TypeII: mostly blue, one TypeII child at the rear end and one
  // TypeI child at the front.
  static const std::vector<RuleChild> type2_rule = {
      open_child(0, 1, 1, 101, IvlType::TypeII, +1),
      closed_child(1, 101, 51, 101, Colour::Blue),
      open_child(51, 101, 1, 1, IvlType::TypeI, +1),
  };
  if (id == ConstructionId::Ap1414) return ap1414_rule;
  return t == IvlType::TypeI ? type1_rule : type2_rule;
}

Interval make_interval(Rational s, Rational e, IntervalBody body) {
  return Interval{std::move(s), std::move(e), std::move(body)};
}

}  // namespace

Configuration initial_config(ConstructionId id) {
  Configuration c;
  c.construction = id;
  c.level = 0;
  if (id == ConstructionId::Ap1414) {
    c.intervals = {
        make_interval(make_rational(0), make_rational(1, 4), IntervalBody::coloured(Colour::Red)),
        make_interval(make_rational(1, 4), make_rational(1, 2),
                      IntervalBody::uncoloured(IvlType::TypeI, +1)),
        make_interval(make_rational(1, 2), make_rational(3, 4), IntervalBody::coloured(Colour::Blue)),
        make_interval(make_rational(3, 4), make_rational(1),
                      IntervalBody::uncoloured(IvlType::TypeI, -1)),
    };
  } else {
    c.intervals = {
        make_interval(make_rational(0), make_rational(1, 6),
                      IntervalBody::uncoloured(IvlType::TypeI, -1)),
        make_interval(make_rational(1, 6), make_rational(1, 3), IntervalBody::coloured(Colour::Blue)),
        make_interval(make_rational(1, 3), make_rational(1, 2),
                      IntervalBody::uncoloured(IvlType::TypeI, +1)),
        make_interval(make_rational(1, 2), make_rational(1), IntervalBody::coloured(Colour::Blue)),
    };
  }
  return c;
}

std::vector<Interval> replace_interval(const Interval& ivl, ConstructionId id) {
  if (ivl.body.is_coloured())
    throw NotReplaceable("replace_interval: coloured intervals are final");
  const int dir = ivl.body.direction();
  const Rational len = ivl.length();
  const auto& rule = rule_for(id, ivl.body.ivl_type());
  std::vector<Interval> out;
  out.reserve(rule.size());
  for (const auto& ch : rule) {
    Rational s, e;
    if (dir == +1) {
      s = ivl.start + len * ch.lo;
      e = ivl.start + len * ch.hi;
    } else {
      s = ivl.end - len * ch.hi;
      e = ivl.end - len * ch.lo;
    }
    IntervalBody body = ch.coloured ? IntervalBody::coloured(ch.colour)
                                    : IntervalBody::uncoloured(ch.type, ch.rel_dir * dir);
    out.push_back(make_interval(std::move(s), std::move(e), std::move(body)));
  }
  if (dir == -1) std::reverse(out.begin(), out.end());
  return out;
}

Configuration step(const Configuration& c) {
  std::vector<Origin> ignored;
  return step_traced(c, ignored);
}

Configuration step_traced(const Configuration& c, std::vector<Origin>& origins) {
  Configuration out;
  out.construction = c.construction;
  out.level = c.level + 1;
  origins.clear();
  for (const auto& iv : c.intervals) {
    if (iv.body.is_coloured()) {
      out.intervals.push_back(iv);
      origins.push_back(Origin::Carried);
      continue;
    }
    const Origin origin =
        iv.body.ivl_type() == IvlType::TypeI ? Origin::FromTypeI : Origin::FromTypeII;
    for (auto& child : replace_interval(iv, c.construction)) {
      out.intervals.push_back(std::move(child));
      origins.push_back(origin);
    }
  }
  return out;
}

Configuration iterate(ConstructionId id, int k) {
  if (k < 0) throw InvalidParameter("iterate: level must be >= 0");
  Configuration c = initial_config(id);
  for (int i = 0; i < k; ++i) c = step(c);
  return c;
}

const char* to_string(PointColour c) {
  switch (c) {
    case PointColour::Red: return "red";
    case PointColour::Blue: return "blue";
    default: return "unresolved";
  }
}

PointColour colour_at(ConstructionId id, const Rational& point, int max_depth) {
  if (max_depth < 0) throw InvalidParameter("colour_at: max_depth must be >= 0");
  const Rational x = normalize_mod1(point);
  const Configuration c0 = initial_config(id);
  Interval iv = c0.locate(x);
  for (int depth = 0; depth <= max_depth; ++depth) {
    if (iv.body.is_coloured()) return iv.body.colour() == Colour::Red ? PointColour::Red : PointColour::Blue;
    if (depth == max_depth) break;
    bool found = false;
    for (auto& child : replace_interval(iv, id)) {
      if (child.contains(x)) {
        iv = std::move(child);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("colour_at: point escaped its interval");
  }
  return PointColour::Unresolved;
}

namespace {

// Shift every interval so starts lie in [0,1), split any interval straddling
// the cut, and re-sort. Only closed intervals may straddle: an open straddler
// would leave the cut point uncovered.
Configuration renormalize(const Configuration& src, std::vector<Interval>&& shifted) {
  std::vector<Interval> out;
  out.reserve(shifted.size());
  for (auto& iv : shifted) {
    const Rational s = normalize_mod1(iv.start);
    const Rational delta = s - iv.start;
    iv.start = s;
    iv.end += delta;
    if (iv.end > 1) {
      if (!iv.body.is_coloured())
        throw std::logic_error("renormalize: open interval straddles the cut");
      out.push_back(make_interval(iv.start, make_rational(1), iv.body));
      out.push_back(make_interval(make_rational(0), iv.end - 1, iv.body));
    } else {
      out.push_back(std::move(iv));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.start < b.start; });
  Configuration res;
  res.construction = src.construction;
  res.level = src.level;
  res.intervals = std::move(out);
  return res;
}

}  // namespace

Configuration dual_rotation(const Configuration& c) {
  const Rational half = make_rational(1, 2);
  std::vector<Interval> shifted;
  shifted.reserve(c.intervals.size());
  for (const auto& iv : c.intervals) {
    IntervalBody body = iv.body.is_coloured()
                            ? IntervalBody::coloured(opposite(iv.body.colour()))
                            : iv.body.with_direction(-iv.body.direction());
    shifted.push_back(make_interval(iv.start + half, iv.end + half, std::move(body)));
  }
  return renormalize(c, std::move(shifted));
}

Configuration reflect(const Configuration& c, const Rational& centre) {
  const Rational two_c = 2 * centre;
  std::vector<Interval> shifted;
  shifted.reserve(c.intervals.size());
  for (const auto& iv : c.intervals) {
    IntervalBody body =
        iv.body.is_coloured() ? iv.body : iv.body.with_direction(-iv.body.direction());
    shifted.push_back(make_interval(two_c - iv.end, two_c - iv.start, std::move(body)));
  }
  return renormalize(c, std::move(shifted));
}

LevelMeasures measures_at_level(ConstructionId id, int k) {
  if (k < 0) throw InvalidParameter("measures_at_level: level must be >= 0");
  Rational red(0), blue(0), unc1(0), unc2(0);
  if (id == ConstructionId::Ap1414) {
    red = make_rational(1, 4);
    blue = make_rational(1, 4);
    unc1 = make_rational(1, 2);
    const Rational fifth = make_rational(1, 5);
    const Rational three_fifths = make_rational(3, 5);
    for (int i = 0; i < k; ++i) {
      red += unc1 * fifth;
      blue += unc1 * fifth;
      unc1 *= three_fifths;
    }
  } else {
    blue = make_rational(2, 3);
    unc1 = make_rational(1, 3);
    const Rational red_from_1 = make_rational(1, 48);
    const Rational blue_from_1 = make_rational(11, 36);
    const Rational blue_from_2 = make_rational(50, 101);
    const Rational keep_1 = make_rational(2, 3);
    const Rational one_from_2 = make_rational(50, 101);
    const Rational two_from_1 = make_rational(1, 144);
    const Rational two_from_2 = make_rational(1, 101);
    for (int i = 0; i < k; ++i) {
      const Rational u1 = unc1, u2 = unc2;
      red += u1 * red_from_1;
      blue += u1 * blue_from_1 + u2 * blue_from_2;
      unc1 = u1 * keep_1 + u2 * one_from_2;
      unc2 = u1 * two_from_1 + u2 * two_from_2;
    }
  }
  return LevelMeasures{red, blue, unc1 + unc2};
}

Rational measure_at_level(ConstructionId id, int k, Colour colour) {
  const LevelMeasures m = measures_at_level(id, k);
  return colour == Colour::Red ? m.red : m.blue;
}

int depth_cap(ConstructionId id) { return id == ConstructionId::Ap1414 ? 12 : 10; }

int default_induce_depth(ConstructionId id) { return id == ConstructionId::Ap1414 ? 12 : 8; }

}  // namespace aplab
