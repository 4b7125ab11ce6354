#include <doctest.h>

#include <cmath>
#include <random>

#include "nodal/grid.hpp"
#include "nodal/harmonics.hpp"
#include "nodal/verify.hpp"

using namespace nodal;

TEST_CASE("parallel sphere sampling equals the serial reference bit for bit") {
    std::mt19937_64 rng(3);
    for (int n : {2, 7}) {
        const auto field = verify::random_harmonic(rng, n).field();
        for (int res : {64, 256}) {
            const auto a = sample_sphere_serial(field, res);
            const auto b = sample_sphere_parallel(field, res);
            CHECK(a.values == b.values);
            CHECK(a.row_scale == b.row_scale);
            CHECK(a.max_abs == b.max_abs);
        }
    }
}

TEST_CASE("parallel disc sampling equals the serial reference bit for bit") {
    PlanarEigenSpec spec;
    spec.radius = 12.0;
    const auto field = spec.field();
    const auto a = sample_disc_serial(field, 256);
    const auto b = sample_disc_parallel(field, 256);
    CHECK(a.values == b.values);
    CHECK(a.active == b.active);
}

TEST_CASE("sphere grid layout and antipodes") {
    const auto field = basis_harmonic(3, 1).field();
    const auto g = sample_sphere_serial(field, 128);
    CHECK(g.cols == 128);
    CHECK(g.rows == 64);
    CHECK(g.vertex_count() == 128 * 64 + 2);
    CHECK(g.antipode(g.north()) == g.south());
    for (int v : {0, 77, 1000, 128 * 64 - 1}) {
        const int a = g.antipode(v);
        CHECK(g.antipode(a) == v);
        const int i = v / g.cols, j = v % g.cols, ia = a / g.cols, ja = a % g.cols;
        const Vec3 p = sphere_point(g.theta(i), g.phi(j));
        const Vec3 q = sphere_point(g.theta(ia), g.phi(ja));
        CHECK(p.x == doctest::Approx(-q.x));
        CHECK(p.y == doctest::Approx(-q.y));
        CHECK(p.z == doctest::Approx(-q.z));
        // Odd harmonic: samples at antipodal vertices are negatives.
        CHECK(g.values[a] == doctest::Approx(-g.values[v]).epsilon(1e-12));
    }
}

TEST_CASE("resolution limits") {
    const auto field = basis_harmonic(2, 1).field();
    CHECK_THROWS_AS(sample_sphere_serial(field, 100), DomainError);
    CHECK_THROWS_AS(sample_sphere_serial(field, 32), DomainError);
    PlanarEigenSpec spec;
    CHECK_THROWS_AS(sample_disc_serial(spec.field(), 65), DomainError);
}

TEST_CASE("zero classification") {
    // Y_3^3 vanishes at both poles exactly; rings never vanish identically.
    const auto g = sample_sphere_serial(basis_harmonic(3, 3).field(), 128);
    CHECK(g.is_zero(g.north()));
    CHECK(g.is_zero(g.south()));
    for (double s : g.row_scale) CHECK(s > 0.0);
    SphereField zero{[](const Vec3&) { return 0.0; }, 1};
    const auto z = sample_sphere_serial(zero, 64);
    CHECK(indeterminate_cells(z) == 64 * 31);
    SphereField nan{[](const Vec3&) { return std::nan(""); }, 1};
    CHECK_THROWS_AS(sample_sphere_serial(nan, 64), DomainError);
}
