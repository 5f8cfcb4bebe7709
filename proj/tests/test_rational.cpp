#include "generators.hpp"
#include "orbvcd/rational.hpp"

#include <doctest.h>

#include <limits>
#include <numeric>

using orbvcd::Rational;

TEST_CASE("rational normalizes on construction")
{
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4).numerator() == -3);
    CHECK(Rational(-6, 4).denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, -2), std::invalid_argument);
}

TEST_CASE("rational arithmetic")
{
    const Rational a(1, 2), b(2, 3), c(6, 7);
    CHECK(a + b + c == Rational(85, 42));
    CHECK(Rational(2) - (a + b + c) == Rational(-1, 42));
    CHECK(a * b == Rational(1, 3));
    CHECK(a / b == Rational(3, 4));
    CHECK(-a == Rational(-1, 2));
    CHECK(b.reciprocal() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational floor, ceil and ordering")
{
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("rational text form round-trips")
{
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-85, 42).to_string() == "-85/42");
    CHECK(Rational::parse("-85/42") == Rational(-85, 42));
    CHECK(Rational::parse("0") == Rational(0));
    for (const char* bad : {"", "1/", "/2", "2/4", "1/-2", "1/1", "+3", "1.5", "x"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("rational overflow is reported, not wrapped")
{
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
    CHECK(big * Rational(1, 2) == Rational(std::numeric_limits<std::int64_t>::max(), 2));
}

TEST_CASE("property: field laws against a cross-multiplication oracle")
{
    orbvcd::testing::Gen gen(11);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t an = gen.between(-50, 50), ad = gen.between(1, 40);
        const std::int64_t bn = gen.between(-50, 50), bd = gen.between(1, 40);
        const Rational a(an, ad), b(bn, bd);
        // Sum: an/ad + bn/bd = (an*bd + bn*ad) / (ad*bd), compared by cross-multiplying.
        const Rational s = a + b;
        CHECK(s.numerator() * ad * bd == (an * bd + bn * ad) * s.denominator());
        CHECK(std::gcd(s.numerator(), s.denominator()) == 1);
        CHECK(s - b == a);
        CHECK(a * b == b * a);
        if (bn != 0) CHECK((a / b) * b == a);
        CHECK(((a < b) == (an * bd < bn * ad)));
        CHECK(Rational::parse(a.to_string()) == a);
        CHECK(a.floor() <= a);
        CHECK(Rational(a.floor() + 1) > a);
    }
}
