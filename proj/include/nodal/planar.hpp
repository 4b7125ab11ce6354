#pragma once

#include <string>
#include <vector>

#include "nodal/harmonics.hpp"
#include "nodal/topology.hpp"

namespace nodal {

/// Sign of g at the singular points (+-j_k, 0) of f inside the window.
struct ShiftSigns {
    std::vector<double> zeros;     // j_k < R
    std::vector<int> right_signs;  // sign g(j_k, 0)
    std::vector<int> left_signs;   // sign g(-j_k, 0)

    /// Signs alternate with k on both sides and the two sides are opposite at each k.
    bool alternating() const;
};

ShiftSigns shift_signs(const PlanarEigenSpec& spec);

struct PlanarOptions {
    double eps_start = 1e-2;
    double eps_floor = 1e-8;
    int start_resolution = 512;
    int max_resolution = 4096;
    bool confirm_half_epsilon = true;
};

struct PlanarResult {
    PlanarEigenSpec spec;
    ShiftSigns signs;
    NodalTopology topology;
    bool found = false;
    std::vector<std::string> diagnostics;
};

/// Halves epsilon from `options.eps_start` until h is grid-stable on the disc (and unchanged at
/// epsilon / 2). `spec.epsilon` is ignored.
PlanarResult planar_two_domains(PlanarEigenSpec spec, const PlanarOptions& options = {});

/// Topology of a single planar field (f, g or h) at fixed parameters.
NodalTopology planar_topology(const PlanarEigenSpec& spec, PlanarWhich which, const RefineOptions& options);

}  // namespace nodal
