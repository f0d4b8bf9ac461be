#include <doctest.h>

#include <random>

#include "aplab/errors.hpp"
#include "aplab/rational.hpp"

using namespace aplab;

TEST_CASE("make_rational reduces to lowest terms") {
  CHECK(make_rational(3, 12) == make_rational(1, 4));
  CHECK(make_rational(-2, 4) == make_rational(-1, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK(make_rational(5) == 5);
  CHECK_THROWS_AS(make_rational(1, 0), InvalidParameter);
}

TEST_CASE("normalize_mod1 basic values") {
  CHECK(normalize_mod1(make_rational(5, 4)) == make_rational(1, 4));
  CHECK(normalize_mod1(make_rational(-1, 8)) == make_rational(7, 8));
  CHECK(normalize_mod1(make_rational(0)) == 0);
  CHECK(normalize_mod1(make_rational(1)) == 0);
  CHECK(normalize_mod1(make_rational(-3)) == 0);
  CHECK(normalize_mod1(make_rational(17, 5)) == make_rational(2, 5));
}

TEST_CASE("normalize_mod1 is idempotent and shift-invariant") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 200; ++i) {
    const long num = static_cast<long>(rng() % 2000) - 1000;
    const long den = 1 + static_cast<long>(rng() % 997);
    const Rational x = make_rational(num, den);
    const Rational r = normalize_mod1(x);
    CHECK(r >= 0);
    CHECK(r < 1);
    CHECK(normalize_mod1(r) == r);
    const long shift = static_cast<long>(rng() % 7) - 3;
    CHECK(normalize_mod1(x + shift) == r);
  }
}

TEST_CASE("fraction_str formats integers and fractions") {
  CHECK(fraction_str(make_rational(7, 288)) == "7/288");
  CHECK(fraction_str(make_rational(3)) == "3");
  CHECK(fraction_str(make_rational(6, 2)) == "3");
  CHECK(fraction_str(make_rational(-1, 4)) == "-1/4");
  CHECK(fraction_str(make_rational(0)) == "0");
}

TEST_CASE("parse_fraction round-trips and validates") {
  CHECK(parse_fraction("7/288") == make_rational(7, 288));
  CHECK(parse_fraction("3") == 3);
  CHECK(parse_fraction("-1/4") == make_rational(-1, 4));
  CHECK(parse_fraction("6/4") == make_rational(3, 2));
  CHECK_THROWS_AS(parse_fraction(""), InvalidParameter);
  CHECK_THROWS_AS(parse_fraction("1/0"), InvalidParameter);
  CHECK_THROWS_AS(parse_fraction("a/b"), InvalidParameter);
  CHECK_THROWS_AS(parse_fraction("1/2/3"), InvalidParameter);
  CHECK_THROWS_AS(parse_fraction("1.5"), InvalidParameter);

  std::mt19937_64 rng(999);
  for (int i = 0; i < 100; ++i) {
    const Rational x = make_rational(static_cast<long>(rng() % 10000) - 5000,
                                     1 + static_cast<long>(rng() % 4999));
    CHECK(parse_fraction(fraction_str(x)) == x);
  }
}
