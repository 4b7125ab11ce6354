#include <doctest.h>

#include "nodal/bounds.hpp"

using namespace nodal::bounds;

TEST_CASE("Courant and Karpushkin bounds") {
    CHECK(courant_bound(5) == 25);
    CHECK_THROWS_AS(courant_bound(0), nodal::DomainError);
    CHECK(karpushkin_bound(4) == 10);  // n^2 - 2n + 2
    CHECK(karpushkin_bound(5) == 19);  // (n-1)^2 + 3
    CHECK_THROWS_AS(karpushkin_bound(1), nodal::DomainError);
}

TEST_CASE("oval predictions") {
    CHECK(predicted_ovals(7).value == 13);
    CHECK(predicted_ovals(7).exact);
    CHECK(predicted_ovals(11).value == 31);
    CHECK(predicted_ovals(6).value == 12);
    CHECK(predicted_ovals(10).value == 30);
    CHECK(predicted_ovals(5).value == 5);
    CHECK_FALSE(predicted_ovals(5).exact);
    CHECK(predicted_ovals(9).value == 17);
    CHECK(predicted_ovals(9).admits(19));
    CHECK_FALSE(predicted_ovals(9).admits(15));
    CHECK_FALSE(predicted_ovals(7).admits(14));
    CHECK_THROWS_AS(predicted_ovals(2), nodal::DomainError);
}

TEST_CASE("predicted counts keep the degree's parity and stay under Karpushkin") {
    for (int n = 3; n <= 20; ++n) {
        const auto p = predicted_ovals(n);
        CHECK((p.value - n) % 2 == 0);
        CHECK(p.value <= karpushkin_bound(n));
    }
}

TEST_CASE("report flags") {
    const auto ok = make_report(7, 13, 14);
    CHECK(ok.all_ok());
    CHECK_FALSE(make_report(7, 12, 13).parity_ok);
    CHECK_FALSE(make_report(3, 3, 10).courant_ok);
    CHECK_FALSE(make_report(4, 12, 13).karpushkin_ok);
    CHECK(pleijel_estimate(10) == doctest::Approx(400.0 / (2.404825557695773 * 2.404825557695773)));
    CHECK(lewy_lower(4) == 2);
    CHECK(lewy_lower(5) == 1);
}
