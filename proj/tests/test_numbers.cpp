#include "doctest.h"
#include "dualgap/numbers.hpp"

using namespace dualgap;

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("5/8").str() == "5/8");
    CHECK(Rational::parse("-10/4").str() == "-5/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ConfigError);
    CHECK_THROWS_AS(Rational::parse("x"), ConfigError);
    CHECK_THROWS_AS(Rational::parse(""), ConfigError);

    const Rational a(2, 3), b(5, 8);
    CHECK(a + b == Rational(31, 24));
    CHECK(a * b == Rational(5, 12));
    CHECK(a / b == Rational(16, 15));
    CHECK(-a == Rational(-2, 3));
    CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
    CHECK(b < a);
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(4, 2).to_integer() == 2);
    CHECK_THROWS_AS(Rational(1, 3).to_integer(), DomainError);
    CHECK_THROWS_AS(a / Rational(0), DomainError);
}

TEST_CASE("integer helpers") {
    CHECK(lcm(Int(10), Int(40)) == 40);
    CHECK(lcm(Int(12), Int(18)) == 36);
    CHECK(binomial(Int(4), 2) == 6);
    CHECK(binomial(Int(1), 2) == 0);
    CHECK(pow(Int(2), 10) == 1024);
    CHECK(factorial(6) == 720);

    Int root;
    CHECK(perfect_square(Int(81), root));
    CHECK(root == 9);
    CHECK_FALSE(perfect_square(Int(5), root));
    CHECK_FALSE(perfect_square(Int(-4), root));
}
