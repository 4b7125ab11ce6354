#include <doctest.h>

#include <cmath>

#include "nodal/specfun.hpp"
#include "oracles.hpp"

using namespace nodal::specfun;

TEST_CASE("normalized factor is exactly one at x = 1") {
    for (int n = 0; n <= kMaxDegree; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(assoc_normalized(n, k, 1.0) == 1.0);
    }
}

TEST_CASE("Legendre derivatives agree with the exact Rodrigues expansion") {
    for (int n : {0, 1, 2, 5, 9, 14, 20}) {
        for (int k = 0; k <= n; ++k) {
            const auto exact = oracle::legendre_deriv_coeffs(n, k);
            const double at_one = oracle::eval_rational_poly(exact, 1.0);
            CHECK(legendre_deriv_at_one(n, k) == doctest::Approx(at_one).epsilon(1e-13));
            for (double x : {-0.93, -0.4, 0.0, 0.17, 0.66, 0.99}) {
                const double ref = oracle::eval_rational_poly(exact, x);
                CHECK(legendre_deriv(n, k, x) == doctest::Approx(ref).epsilon(1e-11).scale(at_one));
                CHECK(assoc_normalized(n, k, x) == doctest::Approx(ref / at_one).epsilon(1e-11).scale(1.0));
            }
        }
    }
}

TEST_CASE("Legendre basics") {
    CHECK(legendre_eval(0, 0.3) == 1.0);
    CHECK(legendre_eval(2, 0.5) == doctest::Approx(-0.125));
    CHECK_THROWS_AS(legendre_deriv(3, 4, 0.1), nodal::DomainError);
    CHECK(legendre_deriv_at_one(4, 2) == doctest::Approx(45.0));  // 6!/(4 2! 2!)
}

TEST_CASE("monomial table matches the recurrence") {
    const auto table = LegendreDerivTable::build(12, 5);
    for (double x : {-0.8, 0.1, 0.7}) CHECK(table(x) == doctest::Approx(legendre_deriv(12, 5, x)).epsilon(1e-10));
}

TEST_CASE("radial factor is the normalized factor on the upper hemisphere") {
    for (double r : {0.0, 0.3, 0.9}) {
        CHECK(radial_factor(7, 3, r) == doctest::Approx(assoc_normalized(7, 3, std::sqrt(1 - r * r))));
    }
    CHECK(radial_factor(5, 2, 0.0) == 1.0);
}

TEST_CASE("zeros of the normalized factor on the upper half") {
    for (int n : {3, 8, 15}) {
        for (int m = 0; m <= n; ++m) {
            const auto zeros = assoc_zeros(n, m);
            // d^m P_n has n - m real zeros in (-1, 1), symmetric about 0.
            CHECK(static_cast<int>(zeros.size()) == (n - m) / 2);
            for (std::size_t i = 0; i < zeros.size(); ++i) {
                CHECK(zeros[i] > 0.0);
                CHECK(zeros[i] < M_PI / 2);
                if (i) CHECK(zeros[i] > zeros[i - 1]);
                CHECK(std::abs(assoc_normalized(n, m, std::cos(zeros[i]))) < 1e-9);
            }
        }
    }
}

TEST_CASE("Bessel values agree with the high-precision series on [0, 50]") {
    for (int i = 0; i <= 500; ++i) {
        const double x = 0.1 * i;
        CHECK(std::abs(bessel_j(BesselOrder::J0, x) - oracle::bessel_series(0, x)) < 1e-10);
        CHECK(std::abs(bessel_j(BesselOrder::J1, x) - oracle::bessel_series(1, x)) < 1e-10);
    }
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK_THROWS_AS(bessel_j(2, 1.0), nodal::DomainError);
    CHECK_THROWS_AS(bessel_j(0, -1.0), nodal::DomainError);
}

TEST_CASE("Bessel zeros") {
    const auto j1 = bessel_zeros(BesselOrder::J1, 50);
    REQUIRE(j1.count() == 50);
    CHECK(j1.zeros[0] == doctest::Approx(3.8317059702075125).epsilon(1e-12));
    CHECK(j1.zeros[1] == doctest::Approx(7.0155866698156188).epsilon(1e-12));
    CHECK(j1.smallest_gap() > 3.0);
    for (double z : j1.zeros) CHECK(std::abs(oracle::bessel_series(1, z)) < 1e-9);
    CHECK(bessel_j0_first_zero() == doctest::Approx(2.404825557695773).epsilon(1e-12));
}
