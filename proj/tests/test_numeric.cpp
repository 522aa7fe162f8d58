#include <doctest.h>

#include "seqspace/numeric.hpp"

using namespace seqspace;

TEST_CASE("rational literals parse exactly") {
  CHECK(parse_rational_literal("3") == Rational(3));
  CHECK(parse_rational_literal("-7/2") == Rational(-7, 2));
  CHECK(parse_rational_literal("1.5") == Rational(3, 2));
  CHECK(parse_rational_literal("0.1") == Rational(1, 10));
  CHECK(parse_rational_literal("-0.125") == Rational(-1, 8));
  CHECK(parse_rational_literal("2e3") == Rational(2000));
  CHECK(parse_rational_literal("1.25e-2") == Rational(1, 80));
  CHECK(parse_rational_literal("+4/6") == Rational(2, 3));
}

TEST_CASE("rational literal rejects malformed input") {
  CHECK_THROWS_AS(parse_rational_literal(""), Error);
  CHECK_THROWS_AS(parse_rational_literal("abc"), Error);
  CHECK_THROWS_AS(parse_rational_literal("1/0"), Error);
  CHECK_THROWS_AS(parse_rational_literal("1..2"), Error);
  CHECK_THROWS_AS(parse_rational_literal("1e999999"), Error);
}

TEST_CASE("doubles convert through their shortest decimal") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-3.0) == Rational(-3));
  CHECK(rational_from_double(0.1) == Rational(1, 10));
  CHECK(to_double(rational_from_double(0.30000000000000004)) ==
        0.30000000000000004);
}

TEST_CASE("rational printing round trips") {
  CHECK(rational_to_string(Rational(-7, 2)) == "-7/2");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK(parse_rational_literal(rational_to_string(Rational(22, 7))) ==
        Rational(22, 7));
}

TEST_CASE("binary powers and binomials are exact") {
  CHECK(int_pow(Rational(2, 3), 5) == Rational(32, 243));
  CHECK(int_pow(Rational(-1), 7) == Rational(-1));
  CHECK(int_pow(Rational(9), 0) == Rational(1));
  CHECK(binomial_coefficient<Rational>(5, 2) == Rational(10));
  CHECK(binomial_coefficient<Rational>(10, 10) == Rational(1));
  CHECK(binomial_coefficient<Rational>(3, 5) == Rational(0));
  CHECK(binomial_coefficient<double>(6, 3) == 20.0);
  // Pascal rule on a band of the table.
  for (unsigned long n = 1; n < 12; ++n)
    for (unsigned long k = 1; k <= n; ++k)
      CHECK(binomial_coefficient<Rational>(n, k) ==
            binomial_coefficient<Rational>(n - 1, k - 1) +
                binomial_coefficient<Rational>(n - 1, k));
}

TEST_CASE("integer roots floor correctly") {
  CHECK(integer_nth_root(BigInt(27), 3) == 3);
  CHECK(integer_nth_root(BigInt(26), 3) == 2);
  CHECK(integer_nth_root(BigInt(28), 3) == 3);
  CHECK(integer_nth_root(BigInt(0), 5) == 0);
  CHECK(integer_nth_root(BigInt(1), 9) == 1);
  BigInt big = boost::multiprecision::pow(BigInt(12345), 7);
  CHECK(integer_nth_root(big, 7) == 12345);
  CHECK(integer_nth_root(big - 1, 7) == 12344);
}

TEST_CASE("root enclosures bracket the true root") {
  auto [lo, hi] = nth_root_bounds(Rational(2), 2, 64);
  CHECK(lo <= hi);
  CHECK(lo * lo <= Rational(2));
  CHECK(hi * hi >= Rational(2));
  CHECK(to_double(hi - lo) < 1e-15);

  auto [lo3, hi3] = nth_root_bounds(Rational(27, 8), 3, 50);
  CHECK(lo3 <= Rational(3, 2));
  CHECK(hi3 >= Rational(3, 2));
}

TEST_CASE("mode names parse both ways") {
  CHECK(parse_numeric_mode("rational") == NumericMode::rational);
  CHECK(parse_numeric_mode("float") == NumericMode::floating);
  CHECK_THROWS_AS(parse_numeric_mode("decimal"), Error);
  CHECK(std::string(numeric_mode_name(NumericMode::rational)) == "rational");
}
