#pragma once

#include <array>
#include <cmath>
#include <functional>

namespace nodal {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Unit vector for colatitude theta and longitude phi.
inline Vec3 sphere_point(double theta, double phi) {
    const double s = std::sin(theta);
    return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

inline Vec3 antipode(const Vec3& p) { return {-p.x, -p.y, -p.z}; }

/// 3x3 matrix stored row-major.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return {}; }
    static Mat3 about_z(double angle);
    /// Rotation by `angle` about the horizontal axis (cos azimuth, sin azimuth, 0).
    static Mat3 about_horizontal(double azimuth, double angle);

    Vec3 apply(const Vec3& p) const {
        return {m[0] * p.x + m[1] * p.y + m[2] * p.z, m[3] * p.x + m[4] * p.y + m[5] * p.z,
                m[6] * p.x + m[7] * p.y + m[8] * p.z};
    }
    double operator()(int r, int c) const { return m[3 * r + c]; }
    double determinant() const;
    /// Largest entry of |R^T R - I|.
    double orthogonality_defect() const;
};

Mat3 operator*(const Mat3& a, const Mat3& b);

/// Real function on the unit sphere. `parity` is +1 (even), -1 (odd) or 0 (unknown)
/// under the antipodal map.
struct SphereField {
    std::function<double(const Vec3&)> eval;
    int parity = 0;

    double operator()(const Vec3& p) const { return eval(p); }
    double operator()(double theta, double phi) const { return eval(sphere_point(theta, phi)); }
};

/// Real function on the closed disc of the given radius centred at the origin.
struct DiscField {
    std::function<double(double, double)> eval;
    double radius = 1.0;

    double operator()(double x, double y) const { return eval(x, y); }
};

}  // namespace nodal
