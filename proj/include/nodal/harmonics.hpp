#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nodal/errors.hpp"
#include "nodal/field.hpp"

namespace nodal {

enum class Phase { Sin, Cos };

/// weight * (sin th')^m F_n^m(cos th') trig(m ph') at the rotated point R p.
struct HarmonicTerm {
    double weight = 1.0;
    int order = 0;
    Phase phase = Phase::Sin;
    Mat3 rotation = Mat3::identity();
};

/// A degree-n spherical harmonic as a weighted sum of rotated basis terms.
struct SphericalHarmonicSpec {
    int degree = 0;
    std::vector<HarmonicTerm> terms;

    long eigenvalue() const { return static_cast<long>(degree) * (degree + 1); }
    /// Throws DomainError if an invariant is broken.
    void validate() const;
    SphereField field() const;
};

/// Y_n^m(theta, phi) = sin^m(theta) F_n^m(cos theta) sin(m phi) (or cos), composed with `rotation`.
SphericalHarmonicSpec basis_harmonic(int n, int m, Phase phase = Phase::Sin,
                                     const Mat3& rotation = Mat3::identity(),
                                     double weight = 1.0);

/// max over the sphere of |Y_n^m|, i.e. max_theta |sin^m(theta) F_n^m(cos theta)|.
double basis_sup_norm(int n, int m);

double eval_sph(const SphericalHarmonicSpec& spec, const Vec3& p);
double eval_sph(const SphericalHarmonicSpec& spec, double theta, double phi);

/// f_t = Re sum_k F_n^k(cos theta) t^{n-k} a_k (sin theta e^{i phi})^k with a_n = 1.
struct LewyLiftSpec {
    int degree = 1;
    std::vector<std::complex<double>> coefficients;  // a_0 .. a_{n-1}
    double t = 0.1;

    void validate() const;
    std::complex<double> coefficient(int k) const {
        return k == degree ? std::complex<double>(1.0, 0.0) : coefficients.at(k);
    }
    SphereField field() const;
};

double eval_lewy(const LewyLiftSpec& spec, const Vec3& p);
double eval_lewy(const LewyLiftSpec& spec, double theta, double phi);

/// t^{-n} f_t(t z) = Re sum_k L_k(t|z|) a_k z^k. Throws DomainError when |t z| > 1.
double rescaled_lewy(const LewyLiftSpec& spec, std::complex<double> z);

/// Re p(z) for the monic polynomial carried by `spec`.
double real_part_poly(const LewyLiftSpec& spec, std::complex<double> z);

/// Monic coefficients a_0..a_{n-1} of prod (z - root).
std::vector<std::complex<double>> monic_from_roots(const std::vector<std::complex<double>>& roots);

enum class PlanarWhich { F, G, H };

/// f = J1(r) sin(theta), g = f shifted by (delta1, delta2), h = f + eps g on a disc of radius R.
struct PlanarEigenSpec {
    double delta1 = 0.5;
    double delta2 = 0.25;
    double epsilon = 1e-2;
    double radius = 15.0;

    void validate() const;
    DiscField field(PlanarWhich which = PlanarWhich::H) const;
};

inline constexpr double kBesselGapBound = 3.0;

double eval_planar(const PlanarEigenSpec& spec, double x, double y, PlanarWhich which);

}  // namespace nodal
