#include <doctest.h>

#include "polyrank/errors.hpp"
#include "polyrank/rational.hpp"

using polyrank::input_error;
using polyrank::Rational;

TEST_CASE("rationals canonicalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).to_string() == "0");
}

TEST_CASE("rational construction rejects a zero denominator") {
    CHECK_THROWS_AS(Rational(1, 0), input_error);
    CHECK_THROWS_AS(Rational(0, 0), input_error);
}

TEST_CASE("from_string accepts integers and fractions") {
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK(Rational::from_string("0") == Rational(0));
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    // Non-canonical input is fine; the value is reduced on the way in.
    CHECK(Rational::from_string("2/4") == Rational(1, 2));
    CHECK(Rational::from_string("700000000000000000000/7") ==
          Rational::from_string("100000000000000000000"));
}

TEST_CASE("from_string rejects malformed text") {
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "0/0", "a", "1.5", "1 / 2", "+3", "1//2",
                            "2/-3", "-", "0x10", "1e3", " 1", "1 "}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::from_string(bad), input_error);
    }
}

TEST_CASE("to_string round-trips through from_string") {
    for (const auto& r : {Rational(0), Rational(7), Rational(-7), Rational(22, 7),
                          Rational(-22, 7), Rational(1, 1000000007)}) {
        CHECK(Rational::from_string(r.to_string()) == r);
    }
    CHECK(Rational(22, 7).to_string() == "22/7");
    CHECK(Rational(-4).to_string() == "-4");
    CHECK(Rational(4, 2).to_string() == "2");
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(-1, 2) == Rational(0));

    Rational acc(0);
    for (long k = 1; k <= 10; ++k) acc += Rational(1, k);
    CHECK(acc == Rational(7381, 2520));
}

TEST_CASE("division by zero is flagged as a broken invariant") {
    // Callers are expected to test for zero first, so tripping this is a bug,
    // not bad input.
    CHECK_THROWS_AS(Rational(1) / Rational(0), polyrank::internal_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), polyrank::internal_error);
    CHECK(Rational(-2, 5).reciprocal() == Rational(-5, 2));
}

TEST_CASE("ordering and sign helpers") {
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5).sign() == 1);
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK(Rational(7, 3).abs() == Rational(7, 3));
    CHECK(Rational(3).is_integer());
    CHECK_FALSE(Rational(1, 3).is_integer());
    CHECK(Rational(1).is_one());
    CHECK(Rational(0).is_zero());
}
