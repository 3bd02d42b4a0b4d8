#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modform/rational.hpp"

using modform::Rational;

TEST_CASE("lowest terms and positive denominator") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.str() == "-3/2");
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).den() == 1);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational("abc"), std::invalid_argument);
}

TEST_CASE("string round trip") {
  for (const char* text : {"0", "5", "-7", "22/7", "-1472/3", "123456789123456789123/2"}) {
    CHECK(Rational(std::string(text)).str() == text);
  }
  CHECK(Rational("4/6").str() == "2/3");
}

TEST_CASE("exact arithmetic against cross-multiplied forms") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int i = 0; i < 200; ++i) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x(a, b), y(c, d);
    CHECK(x + y == Rational(a * d + c * b, b * d));
    CHECK(x - y == Rational(a * d - c * b, b * d));
    CHECK(x * y == Rational(a * c, b * d));
    if (c != 0) CHECK(x / y == Rational(a * d, b * c));
  }
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5, 2) < Rational(0));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(2, 4) >= Rational(1, 2));
  CHECK(Rational(3).sign() == 1);
  CHECK(Rational(-3, 5).sign() == -1);
  CHECK(Rational().sign() == 0);
}

TEST_CASE("integer queries") {
  CHECK(Rational(8, 4).is_integer());
  CHECK(Rational(8, 4).to_long() == 2);
  CHECK(!Rational(1, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 2).to_long(), std::domain_error);
  CHECK(modform::floor_long(Rational(7, 2)) == 3);
  CHECK(modform::floor_long(Rational(-7, 2)) == -4);
  CHECK(modform::floor_long(Rational(-8, 2)) == -4);
}

TEST_CASE("exact square roots") {
  auto r = modform::exact_sqrt(Rational(4, 9));
  REQUIRE(r.has_value());
  CHECK(*r == Rational(2, 3));
  CHECK(modform::exact_sqrt(Rational(0)) == Rational(0));
  CHECK(!modform::exact_sqrt(Rational(2)).has_value());
  CHECK(!modform::exact_sqrt(Rational(-4)).has_value());
  CHECK(!modform::exact_sqrt(Rational(4, 7)).has_value());
}

TEST_CASE("no rounding on large values") {
  Rational big("987654321987654321/123456789123456791");
  Rational sum = big + big + big;
  CHECK(sum / Rational(3) == big);
  CHECK((big * big).num() == big.num() * big.num());
}
