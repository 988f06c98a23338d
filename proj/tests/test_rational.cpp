#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "chern/rational.hpp"

using chern::Rational;

TEST_CASE("construction reduces and normalizes the sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational() == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(3, 6).is_integer());
    CHECK(Rational(3, -6).numerator() == -1);
    CHECK(Rational(3, -6).denominator() == 2);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), chern::Error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(-3, 2) == Rational(-1, 3));
    CHECK(-Rational(1, 8) == Rational(-1, 8));
    CHECK(Rational(-1, 8).abs() == Rational(1, 8));
    CHECK(Rational(1, 8) - Rational(1, 8) == Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), chern::Error);
}

TEST_CASE("ordering crosses denominators without overflow") {
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(1, 2) > Rational(0));
    // magnitudes whose cross products exceed 64 bits
    const Rational big(INT64_MAX, 3);
    const Rational bigger(INT64_MAX, 2);
    CHECK(big < bigger);
    CHECK(bigger > big);
}

TEST_CASE("gcd-reduced operations survive near the 64-bit edge") {
    const Rational half_max(INT64_MAX / 2, 1);
    CHECK(half_max + half_max == Rational(INT64_MAX - 1, 1));
    CHECK(Rational(INT64_MAX, 2) * Rational(2, INT64_MAX) == Rational(1));
    // INT64_MIN magnitudes normalize without tripping the negation trap
    CHECK(Rational(INT64_MIN, 2).numerator() == INT64_MIN / 2);
    CHECK(Rational(INT64_MIN, INT64_MIN) == Rational(1));
}

TEST_CASE("overflow raises instead of wrapping") {
    const Rational max(INT64_MAX, 1);
    CHECK_THROWS_AS(max + max, chern::OverflowError);
    CHECK_THROWS_AS(max * Rational(2), chern::OverflowError);
    CHECK_THROWS_AS(Rational(1, INT64_MIN), chern::OverflowError);
}

TEST_CASE("rendering is p/q reduced or a bare integer") {
    CHECK(Rational(-1, 8).str() == "-1/8");
    CHECK(Rational(5, 18).str() == "5/18");
    CHECK(Rational(1, 24).str() == "1/24");
    CHECK(Rational(10, 20).str() == "1/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-6, 3).str() == "-2");
}
