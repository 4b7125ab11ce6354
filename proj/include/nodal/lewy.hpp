#pragma once

#include <string>
#include <vector>

#include "nodal/combinat.hpp"

namespace nodal {

struct LewyOptions {
    double t_start = 0.2;
    double t_floor = 1e-3;
    int start_resolution = 256;
    int max_resolution = 2048;
    combinat::PlanarZeroOptions planar;
};

struct LewyResult {
    combinat::PlanarZeroResult planar;
    combinat::GluedCurveSystem glued;
    LewyLiftSpec spec;
    NodalTopology topology;
    bool found = false;   // an admissible t was reached
    bool matches = false; // sphere topology equals the glued diagram
    std::vector<std::string> diagnostics;
};

/// Extracts the planar diagram of Re p, then halves t until the lifted sphere topology is
/// grid-stable and unchanged at t / 2, and compares it with the antipodal gluing.
LewyResult lewy_pipeline(const combinat::MonicCoefficients& coefficients, const LewyOptions& options = {});

/// sup over a polar sample of |z| <= radius of |t^-n f_t(t z) - Re p(z)|.
double lewy_sup_distance(const combinat::MonicCoefficients& coefficients, double t, double radius = 2.0,
                         int radial_samples = 64, int angular_samples = 256);

}  // namespace nodal
