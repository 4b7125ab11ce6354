#pragma once

#include <string>
#include <vector>

#include "nodal/bounds.hpp"
#include "nodal/harmonics.hpp"
#include "nodal/topology.hpp"

namespace nodal {

/// n = 4k+3, n = 4k+1 and n = 2m respectively.
enum class OvalCase { OddThreeMod4, OddOneMod4, Even };

struct OvalGeometry {
    int degree = 0;
    OvalCase kind = OvalCase::Even;
    int index = 0;           // k for the odd cases, m for the even case
    int base_order = 0;      // order of the perturbed basis harmonic
    int perturb_order = 0;   // order M of the perturbing harmonic
    double psi_limit = 0.0;  // allowed NS rotation angles are (-psi_limit, 0)

    double psi_midpoint() const { return -0.5 * psi_limit; }
};

/// Throws DomainError for n < 3 or n > specfun::kMaxDegree.
OvalGeometry oval_geometry(int n);

enum class CrossingLabel { Upper, Lower, Equator, NorthPole, SouthPole };

struct Crossing {
    double theta = 0.0;
    double phi = 0.0;
    CrossingLabel label = CrossingLabel::Upper;
};

const char* to_string(CrossingLabel label);

/// Double points of the base harmonic's nodal set (parallels x half-meridians), followed by
/// the two poles.
std::vector<Crossing> sphere_crossings(int n);

enum class SignStatus { Pass, SignMismatch, Degenerate };

const char* to_string(SignStatus status);

struct SignReport {
    SignStatus status = SignStatus::Pass;
    int checked = 0;
    int mismatches = 0;
    std::vector<double> values;  // unscaled perturber value at each crossing
    std::string detail;

    bool passed() const { return status == SignStatus::Pass; }
};

/// Evaluates the last (perturbing) term of `spec` with unit weight at each crossing and
/// checks the case's sign pattern.
SignReport verify_perturber_signs(const SphericalHarmonicSpec& spec, const std::vector<Crossing>& crossings);

/// base + epsilon * s * Y_n^M o rotation, where s = |base|_sup / |Y_n^M|_sup makes epsilon
/// a relative size.
SphericalHarmonicSpec oval_harmonic(const OvalGeometry& geometry, double epsilon, const Mat3& rotation);

struct OvalsOptions {
    double eps_start = 1e-2;
    double eps_floor = 1e-8;
    double tilt = 1e-3;
    int tilt_attempts = 5;
    int start_resolution = 256;
    int max_resolution = 2048;
    /// Also require the same topology at epsilon / 2 before accepting epsilon.
    bool confirm_half_epsilon = true;
};

struct OvalsResult {
    OvalGeometry geometry;
    SphericalHarmonicSpec spec;
    std::vector<Crossing> crossings;
    double psi = 0.0;
    double tilt = 0.0;
    double azimuth = 0.0;
    double epsilon = 0.0;
    SignReport signs;
    NodalTopology topology;
    bounds::OvalPrediction prediction;
    bool found = false;
    std::vector<std::string> diagnostics;

    bool matches_prediction() const { return found && prediction.admits(topology.components); }
};

/// Rotation search followed by epsilon halving. Failure is reported, not thrown.
OvalsResult ovals_spec(int n, const OvalsOptions& options = {});

}  // namespace nodal
