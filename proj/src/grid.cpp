#include "nodal/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>


namespace nodal {

int SampledGrid::antipode(int v) const {
    if (v == north()) return south();
    if (v == south()) return north();
    const int i = v / cols;
    const int j = v % cols;
    return ring_vertex(rows - 1 - i, (j + cols / 2) % cols);
}

namespace {

void check_sphere_resolution(int resolution) {
    if (resolution < kMinResolution || resolution > kMaxResolution || resolution % 64 != 0) {
        throw DomainError("sphere resolution must be a multiple of 64 in [64, 8192], got " +
                          std::to_string(resolution));
    }
}

void check_disc_resolution(int resolution) {
    if (resolution < kMinResolution || resolution > kMaxResolution || resolution % 2 != 0) {
        throw DomainError("disc resolution must be even in [64, 8192], got " +
                          std::to_string(resolution));
    }
}

SampledGrid sphere_shell(const SphereField& field, int resolution) {
    check_sphere_resolution(resolution);
    SampledGrid grid;
    grid.surface = Surface::Sphere;
    grid.cols = resolution;
    grid.rows = resolution / 2;
    grid.parity = field.parity;
    grid.values.assign(static_cast<std::size_t>(grid.rows) * grid.cols + 2, 0.0);
    return grid;
}

SampledGrid disc_shell(const DiscField& field, int resolution) {
    check_disc_resolution(resolution);
    SampledGrid grid;
    grid.surface = Surface::Disc;
    grid.rows = resolution;
    grid.cols = resolution;
    grid.radius = field.radius;
    grid.values.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);
    grid.active.assign(grid.values.size(), 0);
    return grid;
}

void sample_sphere_row(const SphereField& field, SampledGrid& grid, int i) {
    const double theta = grid.theta(i);
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    for (int j = 0; j < grid.cols; ++j) {
        const double phi = grid.phi(j);
        grid.values[grid.ring_vertex(i, j)] = field(Vec3{st * std::cos(phi), st * std::sin(phi), ct});
    }
}

void sample_disc_row(const DiscField& field, SampledGrid& grid, int i) {
    const double y = grid.y(i);
    const double r2 = grid.radius * grid.radius;
    for (int j = 0; j < grid.cols; ++j) {
        const double x = grid.x(j);
        const int v = grid.ring_vertex(i, j);
        if (x * x + y * y <= r2) {
            grid.values[v] = field(x, y);
            grid.active[v] = 1;
        }
    }
}

void finish(SampledGrid& grid) {
    double m = 0.0;
    for (double v : grid.values) {
        if (std::isnan(v)) throw DomainError("field returned NaN");
        m = std::max(m, std::abs(v));
    }
    grid.max_abs = m;
    grid.row_scale.assign(grid.rows, m);
    if (grid.surface != Surface::Sphere) return;
    // Sphere harmonics carry sin^m(theta) factors, so rings near the poles are tiny but
    // accurately evaluated; the zero threshold follows the local ring magnitude.
    std::vector<double> ring(grid.rows, 0.0);
    for (int i = 0; i < grid.rows; ++i) {
        for (int j = 0; j < grid.cols; ++j) ring[i] = std::max(ring[i], std::abs(grid.values[grid.ring_vertex(i, j)]));
    }
    for (int i = 0; i < grid.rows; ++i) {
        double s = ring[i];
        if (i > 0) s = std::max(s, ring[i - 1]);
        if (i + 1 < grid.rows) s = std::max(s, ring[i + 1]);
        grid.row_scale[i] = s;
    }
}

}  // namespace

SampledGrid sample_sphere_serial(const SphereField& field, int resolution) {
    SampledGrid grid = sphere_shell(field, resolution);
    for (int i = 0; i < grid.rows; ++i) sample_sphere_row(field, grid, i);
    grid.values[grid.north()] = field(Vec3{0.0, 0.0, 1.0});
    grid.values[grid.south()] = field(Vec3{0.0, 0.0, -1.0});
    finish(grid);
    return grid;
}

SampledGrid sample_sphere_parallel(const SphereField& field, int resolution) {
    SampledGrid grid = sphere_shell(field, resolution);
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < grid.rows; ++i) sample_sphere_row(field, grid, i);
    grid.values[grid.north()] = field(Vec3{0.0, 0.0, 1.0});
    grid.values[grid.south()] = field(Vec3{0.0, 0.0, -1.0});
    finish(grid);
    return grid;
}

SampledGrid sample_disc_serial(const DiscField& field, int resolution) {
    SampledGrid grid = disc_shell(field, resolution);
    for (int i = 0; i < grid.rows; ++i) sample_disc_row(field, grid, i);
    finish(grid);
    return grid;
}

SampledGrid sample_disc_parallel(const DiscField& field, int resolution) {
    SampledGrid grid = disc_shell(field, resolution);
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < grid.rows; ++i) sample_disc_row(field, grid, i);
    finish(grid);
    return grid;
}

int indeterminate_cells(const SampledGrid& grid) {
    auto small = [&](int v) { return grid.is_zero(v); };
    int count = 0;
    const int last_row = grid.rows - 1;
    const int last_col = grid.surface == Surface::Sphere ? grid.cols : grid.cols - 1;
    for (int i = 0; i < last_row; ++i) {
        for (int j = 0; j < last_col; ++j) {
            const int jn = (j + 1) % grid.cols;
            const int a = grid.ring_vertex(i, j);
            const int b = grid.ring_vertex(i, jn);
            const int c = grid.ring_vertex(i + 1, jn);
            const int d = grid.ring_vertex(i + 1, j);
            if (!grid.is_active(a) || !grid.is_active(b) || !grid.is_active(c) || !grid.is_active(d)) {
                continue;
            }
            if (small(a) && small(b) && small(c) && small(d)) ++count;
        }
    }
    return count;
}

}  // namespace nodal
