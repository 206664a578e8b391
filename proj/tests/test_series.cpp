#include "gwt/series.hpp"

#include "gwt/combinatorics.hpp"
#include "gwt/errors.hpp"

#include <doctest.h>

#include <random>

using namespace gwt;

namespace {

Series random_series(std::mt19937& rng, int order, bool zero_constant) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    Series s(order);
    for (int k = zero_constant ? 1 : 0; k <= order; ++k)
        s.set(k, Rational(num(rng), den(rng)));
    return s;
}

} // namespace

TEST_CASE("coefficient access beyond the order is an error, not zero") {
    Series s(3);
    CHECK(s.at(3) == Rational(0));
    CHECK_THROWS_AS(s.at(4), std::out_of_range);
    CHECK_THROWS_AS(s.at(-1), std::out_of_range);
    CHECK_THROWS_AS(s.set(4, Rational(1)), std::out_of_range);
}

TEST_CASE("mixing truncation orders takes the minimum") {
    Series a(5), b(3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
}

TEST_CASE("exp and log preconditions name the constant term") {
    Series s = Series::constant(Rational(5, 3), 4);
    CHECK_THROWS_WITH_AS(s.exp(), doctest::Contains("5/3"), std::domain_error);
    CHECK_THROWS_WITH_AS(Series(4).log(), doctest::Contains("0"), std::domain_error);
}

TEST_CASE("exp/log inverse pair and homomorphism") {
    const int n = 10;
    Series q = Series::identity(n);
    Series one_plus_q = Series::constant(Rational(1), n) + q;
    CHECK(one_plus_q.log().exp() == one_plus_q);

    CHECK(Series(n).exp() == Series::constant(Rational(1), n)); // exp(0) = 1

    Series e2 = q.scaled(Rational(2)).exp();
    Series em2 = q.scaled(Rational(-2)).exp();
    CHECK(e2 * em2 == Series::constant(Rational(1), n));

    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
        Series f = random_series(rng, 8, true);
        CHECK(f.exp().log() == f);
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(11);
    for (int i = 0; i < 15; ++i) {
        Series f = random_series(rng, 12, false);
        Series g = random_series(rng, 12, false);
        Series h = random_series(rng, 12, false);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("reciprocal") {
    std::mt19937 rng(13);
    for (int i = 0; i < 10; ++i) {
        Series f = random_series(rng, 9, false);
        if (f.at(0).is_zero()) f.set(0, Rational(1));
        CHECK(f * f.reciprocal() == Series::constant(Rational(1), 9));
    }
    CHECK_THROWS_AS(Series(3).reciprocal(), std::domain_error);
}

TEST_CASE("reversion of q - 6q^2") {
    Series f(6);
    f.set(1, Rational(1));
    f.set(2, Rational(-6));
    Series g = f.reversion();
    // iterative substitution oracle: g = Q + 6Q^2 + 72Q^3 + 1080Q^4 + ...
    CHECK(g.at(1) == Rational(1));
    CHECK(g.at(2) == Rational(6));
    CHECK(g.at(3) == Rational(72));
    CHECK(g.at(4) == Rational(1080));
    CHECK(f.compose(g) == Series::identity(6));
    CHECK(g.compose(f) == Series::identity(6));
}

TEST_CASE("reversion properties") {
    CHECK(Series::identity(5).reversion() == Series::identity(5));
    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        Series f = random_series(rng, 10, true);
        if (f.at(1).is_zero()) f.set(1, Rational(1, 2));
        Series g = f.reversion();
        CHECK(f.compose(g) == Series::identity(10));
        CHECK(g.compose(f) == Series::identity(10));
        CHECK(g.reversion() == f); // an involution on its domain
    }
    Series no_linear(4);
    no_linear.set(2, Rational(1));
    CHECK_THROWS_AS(no_linear.reversion(), std::domain_error);
    CHECK_THROWS_AS(Series::constant(Rational(1), 4).reversion(), std::domain_error);
}

TEST_CASE("laurent series window semantics") {
    LaurentSeries l(-2, {Rational(0), Rational(3), Rational(0), Rational(1)});
    CHECK(l.valuation() == -1);
    CHECK(l.at(-5) == Rational(0)); // exact zero below the valuation
    CHECK(l.at(1) == Rational(1));
    CHECK_THROWS_AS(l.at(2), std::out_of_range);
}

TEST_CASE("regularized half-shift expansion of 1/(2 sinh(z/2))") {
    const int n = 9;
    LaurentSeries reg = regularized_half_shift_series(n);
    CHECK(reg.valuation() == -1);
    CHECK(reg.at(-1) == Rational(1));
    CHECK(reg.at(1) == Rational(-1, 24));
    CHECK(reg.at(3) == Rational(7, 5760));
    for (int k = 0; k <= n; k += 2) CHECK(reg.at(k) == Rational(0)); // odd function

    // multiplying back by 2 sinh(z/2) returns 1 on the shared window
    Series sinh2(n + 1);
    for (int j = 1; j <= n + 1; j += 2)
        sinh2.set(j, Rational(mpz_class(1), mpz_class(1) << (j - 1)) / Rational(factorial(j)));
    LaurentSeries prod = reg * LaurentSeries::from_series(sinh2, 0);
    CHECK(prod.at(0) == Rational(1));
    for (int k = prod.valuation(); k <= prod.max_order(); ++k)
        if (k != 0) CHECK(prod.at(k) == Rational(0));
}
