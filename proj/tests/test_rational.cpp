#include "gwt/rational.hpp"

#include <doctest.h>

#include <random>

using gwt::Rational;

TEST_CASE("rational arithmetic is exact and reduced") {
    Rational a(2, 4);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);

    Rational b(-45, 8);
    CHECK(b.str() == "-45/8");
    CHECK(Rational::from_string("-45/8") == b);
    CHECK(Rational::from_string("7").str() == "7");

    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(3, 2)) == Rational(1));
}

TEST_CASE("denominator stays positive") {
    Rational a(45, -8);
    CHECK(a.denominator() > 0);
    CHECK(a == Rational(-45, 8));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("cow"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("powers and reciprocals") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("random inverses and normalization idempotence") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<long> dist(-300, 300);
    for (int i = 0; i < 200; ++i) {
        long n = dist(rng), d = dist(rng);
        if (n == 0 || d == 0) continue;
        Rational x(n, d);
        CHECK(x * x.reciprocal() == Rational(1));
        // re-normalizing an already reduced value changes nothing
        Rational again(x.numerator(), x.denominator());
        CHECK(again == x);
        CHECK(gcd(x.numerator(), x.denominator()) == 1);
    }
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "-1", "45", "-45/8", "355/113"}) {
        CHECK(Rational::from_string(s).str() == s);
    }
}
