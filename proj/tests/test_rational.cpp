#include <doctest.h>

#include "oneshot/errors.hpp"
#include "oneshot/rational.hpp"

using namespace oneshot;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("5/6") == make_rational(5, 6));
  CHECK(parse_rational("-2/4") == make_rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_fraction_string(make_rational(17, 18)) == "17/18");
  CHECK(to_fraction_string(Rational(3)) == "3");
  CHECK(to_double(make_rational(1, 2)) == 0.5);
}

TEST_CASE("rational parsing rejects junk") {
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("x/y"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(make_rational(1, 0), InputError);
}

TEST_CASE("arithmetic stays canonical") {
  Rational a = make_rational(1, 3) + make_rational(1, 6);
  CHECK(to_fraction_string(a) == "1/2");
  CHECK(make_rational(2, 6) == make_rational(1, 3));
}
