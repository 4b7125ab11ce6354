#include <doctest.h>

#include <cmath>
#include <random>

#include "nodal/harmonics.hpp"
#include "nodal/specfun.hpp"
#include "nodal/verify.hpp"

using namespace nodal;

namespace {

// Spherical Laplacian by central differences in (theta, phi).
double laplace_beltrami(const SphereField& f, double theta, double phi, double h = 1e-3) {
    const double c = f(theta, phi);
    const double ftt = (f(theta + h, phi) - 2 * c + f(theta - h, phi)) / (h * h);
    const double ft = (f(theta + h, phi) - f(theta - h, phi)) / (2 * h);
    const double fpp = (f(theta, phi + h) - 2 * c + f(theta, phi - h)) / (h * h);
    const double s = std::sin(theta);
    return ftt + std::cos(theta) / s * ft + fpp / (s * s);
}

double flat_laplacian(const DiscField& f, double x, double y, double h = 1e-3) {
    return (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4 * f(x, y)) / (h * h);
}

}  // namespace

TEST_CASE("basis harmonics are eigenfunctions with eigenvalue -n(n+1)") {
    for (int n : {1, 2, 5, 8}) {
        for (int m = 0; m <= n; ++m) {
            for (Phase ph : {Phase::Sin, Phase::Cos}) {
                const auto spec = basis_harmonic(n, m, ph, Mat3::about_horizontal(0.3, 0.7));
                const auto f = spec.field();
                const double scale = basis_sup_norm(n, m);
                for (auto [t, p] : {std::pair{0.7, 0.4}, {1.3, 2.9}, {2.2, 5.1}}) {
                    const double lap = laplace_beltrami(f, t, p);
                    CHECK(std::abs(lap + n * (n + 1.0) * f(t, p)) < 1e-4 * n * n * scale);
                }
            }
        }
    }
}

TEST_CASE("order zero ignores the phase tag") {
    const auto a = basis_harmonic(1, 0, Phase::Sin);
    CHECK(eval_sph(a, 0.0, 0.0) == doctest::Approx(1.0));
    CHECK(eval_sph(a, M_PI, 0.0) == doctest::Approx(-1.0));
}

TEST_CASE("antipodal parity is (-1)^n") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 9; ++n) {
        const auto spec = verify::random_harmonic(rng, n);
        for (auto [t, p] : {std::pair{0.3, 0.2}, {1.1, 4.0}, {2.6, 1.7}}) {
            const Vec3 q = sphere_point(t, p);
            CHECK(eval_sph(spec, antipode(q)) == doctest::Approx((n % 2 ? -1.0 : 1.0) * eval_sph(spec, q)).epsilon(1e-12));
        }
        CHECK(spec.field().parity == (n % 2 ? -1 : 1));
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(basis_harmonic(3, 4), DomainError);
    SphericalHarmonicSpec bad{3, {{1.0, 1, Phase::Sin, Mat3{{2, 0, 0, 0, 1, 0, 0, 0, 1}}}}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    SphericalHarmonicSpec empty{3, {{0.0, 1, Phase::Sin, Mat3::identity()}}};
    CHECK_THROWS_AS(empty.validate(), DomainError);
    CHECK(basis_harmonic(4, 2).eigenvalue() == 20);
}

TEST_CASE("rotations") {
    const Mat3 r = Mat3::about_z(0.4) * Mat3::about_horizontal(1.2, 0.3);
    CHECK(r.orthogonality_defect() < 1e-14);
    CHECK(r.determinant() == doctest::Approx(1.0));
    const Vec3 axis{std::cos(1.2), std::sin(1.2), 0.0};
    const Vec3 fixed = Mat3::about_horizontal(1.2, 0.3).apply(axis);
    CHECK(fixed.x == doctest::Approx(axis.x));
    CHECK(fixed.y == doctest::Approx(axis.y));
}

TEST_CASE("sup norm of a basis term") {
    CHECK(basis_sup_norm(3, 0) == doctest::Approx(1.0));  // |P_3| peaks at the poles
    // sin^n theta peaks at the equator with value 1.
    CHECK(basis_sup_norm(6, 6) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(basis_sup_norm(2, 1) == doctest::Approx(0.5).epsilon(1e-9));  // sin cos
}

TEST_CASE("Lewy lift: rescaling converges to Re p") {
    LewyLiftSpec spec{3, monic_from_roots({{-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}), 0.1};
    const std::complex<double> z(0.7, -0.4);
    double previous = 1e9;
    for (double t : {0.2, 0.1, 0.05, 0.025}) {
        spec.t = t;
        const double err = std::abs(rescaled_lewy(spec, z) - real_part_poly(spec, z));
        CHECK(err < previous);
        previous = err;
    }
    CHECK(previous < 1e-2);
    spec.t = 0.4;
    CHECK_THROWS_AS(rescaled_lewy(spec, {3.0, 0.0}), DomainError);
}

TEST_CASE("Lewy lift is a degree-n harmonic") {
    LewyLiftSpec spec{3, {{0.3, 0.1}, {-1.0, 0.2}, {0.1, 0.0}}, 0.3};
    const auto f = spec.field();
    for (auto [t, p] : {std::pair{0.5, 0.3}, {1.9, 4.4}}) {
        CHECK(std::abs(laplace_beltrami(f, t, p) + 12.0 * f(t, p)) < 1e-4);
    }
}

TEST_CASE("monic from roots") {
    const auto c = monic_from_roots({{1.0, 0.0}, {2.0, 0.0}});
    REQUIRE(c.size() == 2);
    CHECK(c[0].real() == doctest::Approx(2.0));
    CHECK(c[1].real() == doctest::Approx(-3.0));
}

TEST_CASE("planar fields satisfy Laplace h = -h") {
    PlanarEigenSpec spec;
    spec.epsilon = 0.3;
    for (auto which : {PlanarWhich::F, PlanarWhich::G, PlanarWhich::H}) {
        const auto f = spec.field(which);
        for (auto [x, y] : {std::pair{1.3, 0.7}, {-4.2, 2.5}, {8.1, -6.6}}) {
            CHECK(std::abs(flat_laplacian(f, x, y) + f(x, y)) < 1e-5);
        }
    }
}

TEST_CASE("planar parameter validation") {
    PlanarEigenSpec spec;
    spec.delta2 = 0.6;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec = PlanarEigenSpec{};
    spec.delta1 = 1.5;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec = PlanarEigenSpec{};
    spec.epsilon = -1;
    CHECK_THROWS_AS(spec.validate(), DomainError);
}
