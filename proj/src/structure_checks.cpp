#include "aplab/structure_checks.hpp"

#include <algorithm>

#include "aplab/errors.hpp"

namespace aplab {

bool StructureReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string describe(const Interval& iv) {
  const char* brackets = iv.body.is_coloured() ? "[]" : "()";
  return std::string(1, brackets[0]) + fraction_str(iv.start) + "," + fraction_str(iv.end) +
         std::string(1, brackets[1]);
}

CheckResult passed(std::string name, std::size_t checked) {
  return CheckResult{std::move(name), true,
                     checked == 0 ? "vacuous" : std::to_string(checked) + " checked"};
}

CheckResult failed(std::string name, const Interval& iv) {
  return CheckResult{std::move(name), false, "first failure at " + describe(iv)};
}

}  // namespace

StructureReport verify_band_structure(const Configuration& c, int k) {
  if (k < 0) throw InvalidParameter("verify_band_structure: level must be >= 0");
  StructureReport report;
  report.level = k;
  const auto& ivs = c.intervals;
  const std::size_t n = ivs.size();

  Rational width = make_rational(1, 4);
  for (int i = 0; i < k; ++i) width /= 5;

  // Closed and open intervals alternate around the circle, and the closed
  // ones alternate colour.
  {
    bool ok = n % 2 == 0 && n >= 4;
    for (std::size_t i = 0; ok && i < n; ++i)
      if (ivs[i].body.is_coloured() == ivs[(i + 1) % n].body.is_coloured()) ok = false;
    if (ok) {
      const std::size_t base = ivs[0].body.is_coloured() ? 0 : 1;
      for (std::size_t i = base; ok && i < n; i += 2)
        if (ivs[i].body.colour() == ivs[(i + 2) % n].body.colour()) ok = false;
    }
    report.checks.push_back(CheckResult{"alternation", ok,
                                        ok ? std::to_string(n) + " intervals" : "layout broken"});
  }

  bool width_ok = true, min_ok = true, pair_ok = true;
  const Interval* width_bad = nullptr;
  const Interval* min_bad = nullptr;
  const Interval* pair_bad = nullptr;
  std::vector<std::size_t> closed;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ivs[i].body.is_coloured()) {
      if (ivs[i].length() != width && width_ok) {
        width_ok = false;
        width_bad = &ivs[i];
      }
    } else {
      closed.push_back(i);
      if (ivs[i].length() < width && min_ok) {
        min_ok = false;
        min_bad = &ivs[i];
      }
    }
  }
  for (std::size_t j = 0; j + 1 <= closed.size() && pair_ok && !closed.empty(); ++j) {
    const Interval& a = ivs[closed[j]];
    const Interval& b = ivs[closed[(j + 1) % closed.size()]];
    if (a.length() != width && b.length() != width) {
      pair_ok = false;
      pair_bad = &a;
    }
  }
  report.checks.push_back(width_ok ? passed("uncoloured_width", n / 2)
                                   : failed("uncoloured_width", *width_bad));
  report.checks.push_back(min_ok ? passed("coloured_min_width", closed.size())
                                 : failed("coloured_min_width", *min_bad));
  report.checks.push_back(pair_ok ? passed("adjacent_pair_exact_width", closed.size())
                                  : failed("adjacent_pair_exact_width", *pair_bad));
  return report;
}

namespace {

// Closed red intervals, as (start, length) pairs.
std::vector<std::pair<Rational, Rational>> red_intervals(const Configuration& c) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& iv : c.intervals)
    if (iv.body.is_coloured() && iv.body.colour() == Colour::Red)
      out.emplace_back(iv.start, iv.length());
  return out;
}

// Does the arc starting at `anchor` and running forward (increasing) for
// `arc_len` around the circle contain a red segment of length >= min_len?
// The red interval supplying the segment may stick out past the arc ends.
bool red_segment_in_arc(const std::vector<std::pair<Rational, Rational>>& reds,
                        const Rational& anchor, const Rational& arc_len, const Rational& min_len) {
  for (const auto& [start, len] : reds) {
    if (arc_len >= 1) {
      if (len >= min_len) return true;
      continue;
    }
    // Red enters at or after the anchor and runs to the arc end.
    const Rational off = normalize_mod1(start - anchor);
    if (off <= arc_len && std::min(Rational(arc_len - off), len) >= min_len) return true;
    // The anchor sits inside the red interval.
    const Rational back = normalize_mod1(anchor - start);
    if (back < len && std::min(Rational(len - back), arc_len) >= min_len) return true;
  }
  return false;
}

}  // namespace

StructureReport verify_flanking_properties(ConstructionId id, int k) {
  if (id != ConstructionId::Ap3x30000)
    throw InvalidParameter("verify_flanking_properties: only ap3x30000 carries these guarantees");
  if (k < 0) throw InvalidParameter("verify_flanking_properties: level must be >= 0");

  Configuration cur = initial_config(id);
  std::vector<Origin> origins(cur.intervals.size(), Origin::Carried);
  for (int i = 0; i < k; ++i) cur = step_traced(cur, origins);
  const Configuration next = step(cur);
  const auto reds = red_intervals(next);

  const Rational r11_24 = make_rational(11, 24);
  const Rational r25_24 = make_rational(25, 24);
  const Rational r1_48 = make_rational(1, 48);

  struct Tally {
    std::size_t checked = 0;
    const Interval* bad = nullptr;
    void note(bool ok, const Interval& iv) {
      ++checked;
      if (!ok && bad == nullptr) bad = &iv;
    }
    CheckResult result(const char* name) const {
      return bad ? failed(name, *bad) : passed(name, checked);
    }
  };
  Tally t1_rear, t1_front, t1_landmark, t2_rear, t2_front, t2_landmark;

  const auto& ivs = cur.intervals;
  const std::size_t n = ivs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Interval& u = ivs[i];
    if (u.body.is_coloured()) continue;
    const int dir = u.body.direction();
    const Rational len = u.length();
    const Interval& front = ivs[dir == +1 ? (i + 1) % n : (i + n - 1) % n];
    const Interval& rear = ivs[dir == +1 ? (i + n - 1) % n : (i + 1) % n];
    const Rational& front_pt = dir == +1 ? u.end : u.start;
    const Rational& rear_pt = dir == +1 ? u.start : u.end;

    if (u.body.ivl_type() == IvlType::TypeI) {
      t1_rear.note(rear.body.is_coloured() && rear.body.colour() == Colour::Blue &&
                       rear.length() >= r11_24 * len,
                   u);
      t1_front.note(front.body.is_coloured() && front.body.colour() == Colour::Blue &&
                        front.length() >= 3 * len,
                    u);
      // Arc of length 25/24*l behind the rear point, against the direction
      // of travel.
      const Rational arc = r25_24 * len;
      const Rational anchor = dir == +1 ? normalize_mod1(rear_pt - arc) : rear_pt;
      t1_landmark.note(red_segment_in_arc(reds, anchor, arc, r1_48 * len), u);
    } else {
      t2_rear.note(rear.body.is_coloured() && rear.body.colour() == Colour::Red &&
                       rear.length() >= 6 * len,
                   u);
      t2_front.note(front.body.is_coloured() && front.body.colour() == Colour::Blue &&
                        front.length() >= 6 * len,
                    u);
      if (origins[i] == Origin::FromTypeI) {
        // Arc of length 300*l beyond the front point, along the direction
        // of travel.
        const Rational arc = 300 * len;
        const Rational anchor = dir == +1 ? front_pt : normalize_mod1(front_pt - arc);
        t2_landmark.note(red_segment_in_arc(reds, anchor, arc, 4 * len), u);
      }
    }
  }

  StructureReport report;
  report.level = k;
  report.checks.push_back(t1_rear.result("type1_rear_blue"));
  report.checks.push_back(t1_front.result("type1_front_blue"));
  report.checks.push_back(t1_landmark.result("type1_rear_red_landmark"));
  report.checks.push_back(t2_rear.result("type2_rear_red"));
  report.checks.push_back(t2_front.result("type2_front_blue"));
  report.checks.push_back(t2_landmark.result("type2_front_red_landmark"));
  return report;
}

}  // namespace aplab
