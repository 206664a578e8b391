#include "gwt/cohomology.hpp"

#include "gwt/errors.hpp"

#include <doctest.h>

using namespace gwt;

TEST_CASE("ring structure of the plane") {
    SurfaceClass H = SurfaceClass::hyperplane();
    CHECK(H * H == SurfaceClass::point_class());
    CHECK((H * H) * H == SurfaceClass{}); // H^3 = 0

    SurfaceClass one_plus = SurfaceClass::unit() + H;
    SurfaceClass one_minus = SurfaceClass::unit() - H;
    CHECK(one_plus * one_minus == SurfaceClass::unit() - SurfaceClass::point_class());
}

TEST_CASE("integration") {
    CHECK(SurfaceClass::point_class().integrate() == Rational(1));
    CHECK(SurfaceClass::hyperplane().integrate() == Rational(0));
    SurfaceClass mixed = SurfaceClass::point_class().scaled(Rational(5)) +
                         SurfaceClass::hyperplane().scaled(Rational(3));
    CHECK(mixed.integrate() == Rational(5));
}

TEST_CASE("pairing inverse basis") {
    auto basis = pairing_inverse_basis();
    REQUIRE(basis.size() == 3);

    // contracting sum T_mu (x) T^mu against (gamma, delta) gives the pairing
    auto contract = [&](const SurfaceClass& gamma, const SurfaceClass& delta) {
        Rational total(0);
        for (const auto& [tmu, tmu_dual] : basis)
            total += (gamma * tmu).integrate() * (delta * tmu_dual).integrate();
        return total;
    };
    CHECK(contract(SurfaceClass::hyperplane(), SurfaceClass::hyperplane()) == Rational(1));
    CHECK(contract(SurfaceClass::unit(), SurfaceClass::hyperplane()) == Rational(0));

    // completeness: sum_mu (int gamma T_mu) T^mu = gamma for basis classes
    for (int k = 0; k <= 2; ++k) {
        SurfaceClass gamma = SurfaceClass::h_power(k);
        SurfaceClass rebuilt;
        for (const auto& [tmu, tmu_dual] : basis)
            rebuilt = rebuilt + tmu_dual.scaled((gamma * tmu).integrate());
        CHECK(rebuilt == gamma);
    }
}

TEST_CASE("pairing is symmetric and nondegenerate") {
    for (int a = 0; a <= 2; ++a) {
        bool pairs_with_something = false;
        for (int b = 0; b <= 2; ++b) {
            Rational ab = (SurfaceClass::h_power(a) * SurfaceClass::h_power(b)).integrate();
            Rational ba = (SurfaceClass::h_power(b) * SurfaceClass::h_power(a)).integrate();
            CHECK(ab == ba);
            if (!ab.is_zero()) pairs_with_something = true;
        }
        CHECK(pairs_with_something);
    }
}

TEST_CASE("codimension detection") {
    CHECK(SurfaceClass::hyperplane().codim() == 1);
    CHECK(SurfaceClass::h_power(5).is_zero());
    CHECK(!SurfaceClass{Rational(1), Rational(1), Rational(0)}.codim().has_value());
    CHECK(!SurfaceClass{}.codim().has_value());
}

TEST_CASE("class strings") {
    CHECK(SurfaceClass{}.str() == "0");
    CHECK(SurfaceClass::hyperplane().str() == "H");
    SurfaceClass mixed{Rational(2), Rational(0), Rational(-45, 8)};
    CHECK(mixed.str() == "2 + -45/8*H^2");
}

TEST_CASE("cohomology-valued laurent polynomials") {
    CohLaurent z = CohLaurent::monomial(1, SurfaceClass::unit());
    CohLaurent lin = z.scaled(Rational(2)) + CohLaurent::monomial(0, SurfaceClass::hyperplane());
    CohLaurent sq = lin * lin;
    CHECK(sq.coeff(2) == SurfaceClass::unit().scaled(Rational(4)));
    CHECK(sq.coeff(1) == SurfaceClass::hyperplane().scaled(Rational(4)));
    CHECK(sq.coeff(0) == SurfaceClass::point_class());

    CohLaurent inv = sq.inverse_unit();
    CHECK(sq * inv == CohLaurent::monomial(0, SurfaceClass::unit()));
    CHECK(inv.min_z() == -4);

    CHECK(sq.is_homogeneous_of_degree(2));
    CHECK(!sq.is_homogeneous_of_degree(1));
    CHECK_THROWS_AS(CohLaurent::monomial(0, SurfaceClass::hyperplane()).inverse_unit(),
                    std::domain_error);
}
