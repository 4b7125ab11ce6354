#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "nodal/errors.hpp"
#include "nodal/field.hpp"

namespace nodal {

enum class Surface { Sphere, Disc };

/// Threshold, relative to the local sample scale, below which a sample counts as zero.
inline constexpr double kZeroThreshold = 1e-12;
inline constexpr int kMinResolution = 64;
inline constexpr int kMaxResolution = 8192;

/// Signed samples on a topology-aware grid.
///
/// Sphere: `rows` = n_theta colatitude rings at theta_i = (i + 1/2) pi / n_theta and
/// `cols` = n_phi longitudes at phi_j = (j + 1/2) 2 pi / n_phi, plus two explicit pole
/// vertices stored after the rings. The antipodal map is the index map
/// (i, j) -> (n_theta - 1 - i, j + n_phi / 2), N <-> S.
///
/// Disc: `rows` x `cols` cell-centred samples of [-R, R]^2; samples outside the disc are
/// inactive.
struct SampledGrid {
    Surface surface = Surface::Sphere;
    int rows = 0;
    int cols = 0;
    double radius = 1.0;
    int parity = 0;
    std::vector<double> values;
    std::vector<std::uint8_t> active;  // disc only
    double max_abs = 0.0;
    /// Sphere: largest |value| over ring i and its two neighbours. Disc: max_abs for every row.
    std::vector<double> row_scale;

    int resolution() const { return cols; }
    int ring_vertex(int i, int j) const { return i * cols + j; }
    int north() const { return rows * cols; }
    int south() const { return rows * cols + 1; }
    int vertex_count() const { return static_cast<int>(values.size()); }
    bool is_pole(int v) const { return surface == Surface::Sphere && v >= rows * cols; }

    double theta(double i) const { return (i + 0.5) * M_PI / rows; }
    double phi(double j) const { return (j + 0.5) * 2.0 * M_PI / cols; }
    double x(double j) const { return -radius + (j + 0.5) * 2.0 * radius / cols; }
    double y(double i) const { return -radius + (i + 0.5) * 2.0 * radius / rows; }

    /// Antipodal vertex (sphere only).
    int antipode(int v) const;
    bool is_active(int v) const { return surface == Surface::Sphere || active[v] != 0; }
    double row_threshold(int i) const { return kZeroThreshold * row_scale[i]; }
    /// Poles are exact sample points and only count as zero when the value is exactly 0.
    bool is_zero(int v) const {
        if (is_pole(v)) return values[v] == 0.0;
        return std::abs(values[v]) <= row_threshold(v / cols);
    }
};

/// Sphere resolution is n_phi (a multiple of 64 in [64, 8192]); n_theta = n_phi / 2.
SampledGrid sample_sphere_serial(const SphereField& field, int resolution);
SampledGrid sample_sphere_parallel(const SphereField& field, int resolution);

/// Disc resolution is the number of samples per side, even, in [64, 8192].
SampledGrid sample_disc_serial(const DiscField& field, int resolution);
SampledGrid sample_disc_parallel(const DiscField& field, int resolution);

inline SampledGrid sample(const SphereField& field, int resolution) {
    return sample_sphere_parallel(field, resolution);
}
inline SampledGrid sample(const DiscField& field, int resolution) {
    return sample_disc_parallel(field, resolution);
}

/// Number of cells whose corners are all below the zero threshold.
int indeterminate_cells(const SampledGrid& grid);

}  // namespace nodal
