#include <doctest.h>

#include <random>

#include "aplab/construction.hpp"
#include "aplab/errors.hpp"
#include "aplab/interval.hpp"

using namespace aplab;

TEST_CASE("interval membership follows the closed/open convention") {
  Interval closed{make_rational(1, 4), make_rational(1, 2), IntervalBody::coloured(Colour::Red)};
  CHECK(closed.contains(make_rational(1, 4)));
  CHECK(closed.contains(make_rational(1, 2)));
  CHECK(closed.contains(make_rational(3, 8)));
  CHECK_FALSE(closed.contains(make_rational(1, 8)));

  Interval open{make_rational(1, 4), make_rational(1, 2),
                IntervalBody::uncoloured(IvlType::TypeI, +1)};
  CHECK_FALSE(open.contains(make_rational(1, 4)));
  CHECK_FALSE(open.contains(make_rational(1, 2)));
  CHECK(open.contains(make_rational(3, 8)));
}

TEST_CASE("interval body accessors guard their variants") {
  const auto blue = IntervalBody::coloured(Colour::Blue);
  CHECK(blue.is_coloured());
  CHECK(blue.colour() == Colour::Blue);
  CHECK_THROWS(blue.ivl_type());
  CHECK_THROWS(blue.direction());

  const auto open = IntervalBody::uncoloured(IvlType::TypeII, -1);
  CHECK_FALSE(open.is_coloured());
  CHECK(open.ivl_type() == IvlType::TypeII);
  CHECK(open.direction() == -1);
  CHECK_THROWS(open.colour());
  CHECK_THROWS_AS(IntervalBody::uncoloured(IvlType::TypeI, 0), InvalidParameter);
}

TEST_CASE("parse_construction accepts the two registered names") {
  CHECK(parse_construction("ap1414") == ConstructionId::Ap1414);
  CHECK(parse_construction("ap3x30000") == ConstructionId::Ap3x30000);
  CHECK_THROWS_AS(parse_construction("ap9999"), UnknownConstruction);
  CHECK_THROWS_AS(parse_construction(""), UnknownConstruction);
}

TEST_CASE("locate respects boundary ownership") {
  const auto c = initial_config(ConstructionId::Ap1414);
  c.validate();
  CHECK(c.locate(make_rational(1, 8)).body.colour() == Colour::Red);
  // 1/4 is the left endpoint of an open interval; the red interval owns it.
  CHECK(c.locate(make_rational(1, 4)).body.colour() == Colour::Red);
  CHECK_FALSE(c.locate(make_rational(3, 8)).body.is_coloured());
  CHECK(c.locate(make_rational(1, 2)).body.colour() == Colour::Blue);
  CHECK(c.locate(make_rational(3, 4)).body.colour() == Colour::Blue);
  CHECK_FALSE(c.locate(make_rational(7, 8)).body.is_coloured());
  // 0 is owned by the closed interval starting there.
  CHECK(c.locate(make_rational(0)).body.colour() == Colour::Red);
  // Inputs reduce mod 1.
  CHECK(c.locate(make_rational(9, 8)).body.colour() == Colour::Red);
  CHECK(c.locate(make_rational(-7, 8)).body.colour() == Colour::Red);
}

TEST_CASE("locate resolves 0 across the wrap for open-at-zero configurations") {
  const auto c = initial_config(ConstructionId::Ap3x30000);
  c.validate();
  // First interval is open at 0; the final blue interval [1/2,1] owns 0 ~ 1.
  CHECK(c.locate(make_rational(0)).body.colour() == Colour::Blue);
  CHECK_FALSE(c.locate(make_rational(1, 12)).body.is_coloured());
  CHECK(c.locate(make_rational(1, 6)).body.colour() == Colour::Blue);
  CHECK(c.locate(make_rational(1, 3)).body.colour() == Colour::Blue);
  CHECK_FALSE(c.locate(make_rational(5, 12)).body.is_coloured());
  CHECK(c.locate(make_rational(1, 2)).body.colour() == Colour::Blue);
}

TEST_CASE("locate agrees with a linear scan on refined configurations") {
  const auto c = iterate(ConstructionId::Ap3x30000, 2);
  c.validate();
  std::mt19937_64 rng(77);
  for (int t = 0; t < 300; ++t) {
    const Rational x = make_rational(1 + static_cast<long>(rng() % 10006), 10007);
    const std::size_t idx = c.locate_index(x);
    // Exactly one interval contains x under the ownership convention, except
    // when x is an open interval's endpoint (then a closed neighbour owns it).
    CHECK(c.intervals[idx].contains(normalize_mod1(x)));
    std::size_t owners = 0;
    for (const auto& iv : c.intervals)
      if (iv.contains(x)) ++owners;
    CHECK(owners >= 1);
    CHECK(owners <= 2);
  }
}

TEST_CASE("measure sums interval lengths by colour") {
  const auto c = initial_config(ConstructionId::Ap1414);
  CHECK(c.measure(Colour::Red) == make_rational(1, 4));
  CHECK(c.measure(Colour::Blue) == make_rational(1, 4));
  CHECK(c.uncoloured_measure() == make_rational(1, 2));

  const auto c3 = initial_config(ConstructionId::Ap3x30000);
  CHECK(c3.measure(Colour::Red) == 0);
  CHECK(c3.measure(Colour::Blue) == make_rational(2, 3));
  CHECK(c3.uncoloured_measure() == make_rational(1, 3));
}

TEST_CASE("validate rejects broken partitions") {
  Configuration c = initial_config(ConstructionId::Ap1414);
  c.intervals[1].end = make_rational(3, 7);
  CHECK_THROWS_AS(c.validate(), std::logic_error);

  Configuration gap = initial_config(ConstructionId::Ap1414);
  gap.intervals.pop_back();
  CHECK_THROWS_AS(gap.validate(), std::logic_error);

  Configuration open0 = initial_config(ConstructionId::Ap3x30000);
  open0.intervals.back().body = IntervalBody::uncoloured(IvlType::TypeI, +1);
  CHECK_THROWS_AS(open0.validate(), std::logic_error);
}
