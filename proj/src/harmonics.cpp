#include "nodal/harmonics.hpp"

#include <algorithm>
#include <cmath>

#include "nodal/specfun.hpp"

namespace nodal {

Mat3 Mat3::about_z(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Mat3{{c, -s, 0, s, c, 0, 0, 0, 1}};
}

Mat3 Mat3::about_horizontal(double azimuth, double angle) {
    // Rodrigues formula for the unit axis (cos a, sin a, 0).
    const double ux = std::cos(azimuth);
    const double uy = std::sin(azimuth);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double v = 1.0 - c;
    return Mat3{{c + ux * ux * v, ux * uy * v, uy * s,
                 uy * ux * v, c + uy * uy * v, -ux * s,
                 -uy * s, ux * s, c}};
}

double Mat3::determinant() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double Mat3::orthogonality_defect() const {
    double worst = 0.0;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) dot += m[3 * k + r] * m[3 * k + c];
            worst = std::max(worst, std::abs(dot - (r == c ? 1.0 : 0.0)));
        }
    }
    return worst;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += a(r, k) * b(k, c);
            out.m[3 * r + c] = acc;
        }
    }
    return out;
}

namespace {

std::complex<double> ipow(std::complex<double> base, int power) {
    std::complex<double> acc(1.0, 0.0);
    while (power > 0) {
        if (power & 1) acc *= base;
        base *= base;
        power >>= 1;
    }
    return acc;
}

}  // namespace

void SphericalHarmonicSpec::validate() const {
    if (degree < 0 || degree > specfun::kMaxDegree) throw DomainError("harmonic degree out of range");
    bool any = false;
    for (const auto& term : terms) {
        if (term.order < 0 || term.order > degree) throw DomainError("term order outside [0, n]");
        if (term.rotation.orthogonality_defect() > 1e-12 ||
            std::abs(term.rotation.determinant() - 1.0) > 1e-12) {
            throw DomainError("term rotation is not a proper rotation");
        }
        any = any || term.weight != 0.0;
    }
    if (!any) throw DomainError("harmonic has no nonzero term");
}

SphereField SphericalHarmonicSpec::field() const {
    validate();
    return SphereField{[spec = *this](const Vec3& p) { return eval_sph(spec, p); },
                       degree % 2 == 0 ? 1 : -1};
}

SphericalHarmonicSpec basis_harmonic(int n, int m, Phase phase, const Mat3& rotation,
                                     double weight) {
    SphericalHarmonicSpec spec{n, {HarmonicTerm{weight, m, phase, rotation}}};
    spec.validate();
    return spec;
}

double basis_sup_norm(int n, int m) {
    if (m < 0 || m > n || n > specfun::kMaxDegree) throw DomainError("basis index out of range");
    // Dense scan of the radial profile, then golden-section polish around the best sample.
    constexpr int samples = 4096;
    auto profile = [n, m](double t) {
        return std::abs(std::pow(std::sin(t), m) * specfun::assoc_normalized(n, m, std::cos(t)));
    };
    int best = 0;
    double best_value = profile(0.0);
    for (int i = 1; i <= samples; ++i) {
        const double v = profile(M_PI * i / samples);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    double a = M_PI * std::max(best - 1, 0) / samples;
    double b = M_PI * std::min(best + 1, samples) / samples;
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 60; ++it) {
        const double c = b - ratio * (b - a);
        const double d = a + ratio * (b - a);
        if (profile(c) > profile(d)) b = d;
        else a = c;
    }
    return std::max(best_value, profile(0.5 * (a + b)));
}

double eval_sph(const SphericalHarmonicSpec& spec, const Vec3& p) {
    double total = 0.0;
    for (const auto& term : spec.terms) {
        const Vec3 q = term.rotation.apply(p);
        // sin^m(th) e^{i m ph} = (x + i y)^m; no angle extraction needed.
        const std::complex<double> w = ipow({q.x, q.y}, term.order);
        // Order 0 has no angular factor; the phase tag is irrelevant there.
        const double trig = term.order == 0 || term.phase == Phase::Cos ? w.real() : w.imag();
        if (trig == 0.0) continue;
        const double z = std::clamp(q.z, -1.0, 1.0);
        total += term.weight * specfun::assoc_normalized(spec.degree, term.order, z) * trig;
    }
    return total;
}

double eval_sph(const SphericalHarmonicSpec& spec, double theta, double phi) {
    return eval_sph(spec, sphere_point(theta, phi));
}

void LewyLiftSpec::validate() const {
    if (degree < 1 || degree > specfun::kMaxDegree) throw DomainError("Lewy degree out of range");
    if (static_cast<int>(coefficients.size()) != degree) {
        throw DomainError("Lewy lift needs exactly n lower coefficients");
    }
    if (!(t > 0.0)) throw DomainError("Lewy scale t must be positive");
}

SphereField LewyLiftSpec::field() const {
    validate();
    return SphereField{[spec = *this](const Vec3& p) { return eval_lewy(spec, p); },
                       degree % 2 == 0 ? 1 : -1};
}

double eval_lewy(const LewyLiftSpec& spec, const Vec3& p) {
    const std::complex<double> w(p.x, p.y);
    const double z = std::clamp(p.z, -1.0, 1.0);
    std::complex<double> power(1.0, 0.0);
    double total = 0.0;
    for (int k = 0; k <= spec.degree; ++k) {
        const double scale = std::pow(spec.t, spec.degree - k);
        total += specfun::assoc_normalized(spec.degree, k, z) * scale *
                 (spec.coefficient(k) * power).real();
        power *= w;
    }
    return total;
}

double eval_lewy(const LewyLiftSpec& spec, double theta, double phi) {
    return eval_lewy(spec, sphere_point(theta, phi));
}

double rescaled_lewy(const LewyLiftSpec& spec, std::complex<double> z) {
    const double r = spec.t * std::abs(z);
    if (r > 1.0) throw DomainError("rescaled point leaves the hemisphere chart");
    std::complex<double> power(1.0, 0.0);
    double total = 0.0;
    for (int k = 0; k <= spec.degree; ++k) {
        total += specfun::radial_factor(spec.degree, k, r) * (spec.coefficient(k) * power).real();
        power *= z;
    }
    return total;
}

double real_part_poly(const LewyLiftSpec& spec, std::complex<double> z) {
    std::complex<double> acc(1.0, 0.0);
    for (int k = spec.degree - 1; k >= 0; --k) acc = acc * z + spec.coefficients[k];
    return acc.real();
}

std::vector<std::complex<double>> monic_from_roots(const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> poly{1.0};  // highest degree last
    for (const auto& root : roots) {
        std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= root * poly[i];
        }
        poly = std::move(next);
    }
    poly.pop_back();
    return poly;
}

void PlanarEigenSpec::validate() const {
    if (!(delta2 > 0.0 && delta2 < delta1 && delta1 < kBesselGapBound / 2.0)) {
        throw DomainError("planar shifts must satisfy 0 < delta2 < delta1 < 1.5");
    }
    if (!(epsilon >= 0.0)) throw DomainError("planar epsilon must be non-negative");
    if (!(radius > 0.0)) throw DomainError("planar radius must be positive");
}

namespace {

double bessel_dipole(double x, double y) {
    const double r = std::hypot(x, y);
    if (r == 0.0) return 0.0;
    return specfun::bessel_j(specfun::BesselOrder::J1, r) * (y / r);
}

}  // namespace

double eval_planar(const PlanarEigenSpec& spec, double x, double y, PlanarWhich which) {
    switch (which) {
        case PlanarWhich::F:
            return bessel_dipole(x, y);
        case PlanarWhich::G:
            return bessel_dipole(x - spec.delta1, y - spec.delta2);
        case PlanarWhich::H:
            return bessel_dipole(x, y) + spec.epsilon * bessel_dipole(x - spec.delta1, y - spec.delta2);
    }
    return 0.0;
}

DiscField PlanarEigenSpec::field(PlanarWhich which) const {
    validate();
    return DiscField{[spec = *this, which](double x, double y) { return eval_planar(spec, x, y, which); },
                     radius};
}

}  // namespace nodal
