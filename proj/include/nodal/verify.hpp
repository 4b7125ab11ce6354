#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nodal/harmonics.hpp"
#include "nodal/topology.hpp"

namespace nodal::verify {

/// Uniform random rotation (normalised Gaussian quaternion).
Mat3 random_rotation(std::mt19937_64& rng);

/// 1 to 3 rotated basis terms of degree n with Gaussian weights.
SphericalHarmonicSpec random_harmonic(std::mt19937_64& rng, int degree);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SweepOptions {
    std::uint64_t seed = 2024;
    int count = 100;
    int min_degree = 2;
    int max_degree = 10;
    int start_resolution = 128;
    int max_resolution = 1024;
    /// Test hook: flips the field's sign on a small cap, which adds a spurious nodal circle.
    bool inject_fault = false;
};

struct SweepCase {
    int degree = 0;
    bool stable = false;
    int components = 0;
    int domains = 0;
    std::vector<std::string> violations;
};

struct SweepReport {
    std::vector<SweepCase> cases;
    int stable_count() const;
    int violation_count() const;
    /// Named invariants that failed, deduplicated in first-seen order.
    std::vector<std::string> failed_invariants() const;
};

/// Euler identity, parity, Courant and Karpushkin on every stable nonsingular extraction.
SweepReport euler_parity_sweep(const SweepOptions& options = {});

Check specfun_check();
Check enumeration_check(int max_n = 5);
Check gluing_parity_check(int max_n = 5);
Check forest_check(std::uint64_t seed, int count = 200, int max_edges = 20);
Check sweep_check(const SweepOptions& options);

struct SuiteOptions {
    std::uint64_t seed = 2024;
    bool quick = false;
    bool inject_fault = false;
};

/// Randomised property suite behind `nodal verify`.
std::vector<Check> run_suite(const SuiteOptions& options);

}  // namespace nodal::verify
