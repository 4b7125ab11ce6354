#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "nodal/harmonics.hpp"
#include "nodal/topology.hpp"

namespace nodal::combinat {

/// Non-crossing perfect matching of the 2n points exp(i pi (2j+1) / (2n)), j = 0..2n-1.
struct ChordDiagram {
    int n = 0;
    std::vector<int> match;

    /// Throws DomainError unless `match` is a fixed-point-free non-crossing involution.
    void validate() const;
    /// "i-j" pairs with i < j, sorted, comma separated.
    std::string to_string() const;
    static ChordDiagram parse(const std::string& text);
    /// Lexicographically smallest rotation of the matching (equivalence up to rotation).
    ChordDiagram rotation_canonical() const;

    bool operator==(const ChordDiagram& other) const { return n == other.n && match == other.match; }
};

/// All non-crossing matchings of 2n points, 1 <= n <= 8 (Catalan(n) of them).
std::vector<ChordDiagram> enumerate_diagrams(int n);

/// Curve system on the sphere from a diagram and its antipodal image.
struct GluedCurveSystem {
    int components = 0;
    int domains = 0;
    int odd_count = 0;
    int oval_pairs = 0;
    std::vector<int> lengths;  // chords traversed per component
    std::string region_tree;   // canonical unrooted code, comparable with NodalTopology::nesting
};

GluedCurveSystem glue_antipodal(const ChordDiagram& diagram);

/// Monic polynomial z^n + a_{n-1} z^{n-1} + ... + a_0 given by a_0..a_{n-1}.
using MonicCoefficients = std::vector<std::complex<double>>;

std::complex<double> eval_monic(const MonicCoefficients& coefficients, std::complex<double> z);

struct PlanarZeroOptions {
    int start_resolution = 256;
    int max_resolution = 2048;
    int max_growth = 8;
};

struct PlanarZeroResult {
    ChordDiagram diagram;
    double window = 0.0;
    NodalTopology topology;
};

/// Samples Re p on a disc large enough that every larger circle meets the zero set in 2n points,
/// traces the zero set and pairs the boundary crossings. Throws NonsingularityError for singular
/// zero sets and ExtractionError when the crossings cannot be paired.
PlanarZeroResult planar_zero_topology(const MonicCoefficients& coefficients, const PlanarZeroOptions& options = {});

struct SearchOptions {
    long budget = 10000;  // trials
    std::uint64_t seed = 1;
    double root_radius = 1.5;
    int restart_after = 300;  // trials without improvement
    PlanarZeroOptions extraction{128, 512, 8};
};

struct SearchResult {
    bool found = false;
    ChordDiagram target;
    ChordDiagram best;
    int best_mismatch = 0;
    std::vector<std::complex<double>> roots;
    MonicCoefficients coefficients;
    long trials = 0;
    std::uint64_t seed = 0;
    LewyLiftSpec lift;  // sphere realization parameters (t from the Lewy pipeline default)
};

/// Greedy randomized search with restarts over root configurations; moves are Gaussian root
/// jitter, root resampling and coefficient steps. n <= 5.
SearchResult realize_diagram_search(const ChordDiagram& target, const SearchOptions& options = {});

long catalan(int n);

}  // namespace nodal::combinat
