#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "nodal/grid.hpp"

namespace nodal {

/// One traced nodal curve. Points are (theta, phi) on the sphere and (x, y) on the disc.
struct NodalCurve {
    bool closed = true;
    std::vector<std::array<double, 2>> points;
};

/// Counts and structure extracted from one grid.
struct NodalTopology {
    Surface surface = Surface::Sphere;
    int resolution = 0;
    int components = 0;
    int domains = 0;
    std::vector<int> domain_signs;
    int odd_count = -1;   // sphere only
    int oval_pairs = -1;  // sphere only
    std::string nesting;  // canonical region tree (sphere) or inclusion forest (disc)
    bool stable = false;
    bool nonsingular = true;
    int zero_vertices = 0;
    int unresolved_saddles = 0;
    int indeterminate_cells = 0;
    int open_chains = 0;
    std::vector<NodalCurve> curves;

    /// Same counts and nesting; with `antipodal_aware` also the antipodal classification.
    bool equivalent(const NodalTopology& other, bool antipodal_aware = false) const;
};

struct DomainCount {
    int count = 0;
    std::vector<int> signs;
};

struct AntipodalClass {
    int odd_count = 0;
    int oval_pairs = 0;
};

using AnyField = std::variant<SphereField, DiscField>;

/// Per-cell sign classification, sign components and linked marching-squares segments.
class CellComplex {
public:
    CellComplex(const SampledGrid& grid, AnyField field);

    const SampledGrid& grid() const { return grid_; }

    DomainCount domains() const;
    int components() const { return static_cast<int>(curve_of_root_.size()); }
    int zero_vertices() const { return zero_vertices_; }
    int unresolved_saddles() const { return unresolved_; }
    /// No unresolved saddles, and zero vertices (if any) lie on smooth curves: giving them their
    /// tie sign leaves the domain count unchanged.
    bool nonsingular() const { return unresolved_ == 0 && tie_domains_ == domains().count; }
    int open_chains() const;

    /// Curve index (0..components-1) of every traced crossing edge.
    const std::unordered_map<std::int64_t, int>& crossing_nodes() const { return node_of_edge_; }
    int curve_of_node(int node) const;
    std::pair<int, int> edge_vertices(std::int64_t edge) const;
    /// Edge id joining two grid vertices, or -1 if they are not adjacent.
    std::int64_t edge_between(int u, int v) const;
    int domain_of_vertex(int v) const;

    std::vector<NodalCurve> curves() const;

    /// Region adjacency tree of the sphere (nodes = domains, edges = curves); empty when the
    /// curve system does not form a tree.
    std::vector<std::pair<int, int>> region_tree_edges() const;

private:
    struct Node {
        std::int64_t edge = 0;
        std::array<int, 2> nbr{-1, -1};
        int degree = 0;
        std::array<double, 2> point{0.0, 0.0};
    };

    double value_at_local(int row, int col, double u, double v) const;
    int resolve_saddle(int row, int col, const std::array<double, 4>& corners) const;
    int node_for(std::int64_t edge, int a, int b);
    void link(int na, int nb);
    std::array<double, 2> vertex_coord(int v, int hint_col) const;
    void build();

    SampledGrid grid_;
    AnyField field_;
    std::vector<std::int8_t> state_;  // -1, 0, +1
    std::vector<std::int8_t> tie_;    // sign used for tracing, never 0
    std::vector<int> vparent_;
    std::vector<int> tparent_;  // sign components under tie signs
    int tie_domains_ = 0;
    std::vector<std::uint8_t> in_cell_;
    std::vector<Node> nodes_;
    std::vector<int> nparent_;
    std::unordered_map<std::int64_t, int> node_of_edge_;
    std::unordered_map<int, int> curve_of_root_;
    int zero_vertices_ = 0;
    int unresolved_ = 0;
};

DomainCount count_domains(const SampledGrid& grid, const AnyField& field);
int count_components(const SampledGrid& grid, const AnyField& field);

/// Full extraction: counts, curves, nesting, antipodal classification (sphere).
NodalTopology analyze(const SampledGrid& grid, const AnyField& field);

/// Matches every curve with the curve through its antipodal image. Sphere only.
AntipodalClass antipodal_classify(const CellComplex& complex);

/// Canonical nesting code: unrooted region tree on the sphere, inclusion forest on the disc.
std::string nesting_forest(const CellComplex& complex);

/// Canonical code of an unrooted tree given by its edge list over nodes 0..n-1.
std::string unrooted_tree_code(int node_count, const std::vector<std::pair<int, int>>& edges);
/// Canonical code of a rooted forest given parent links (-1 for roots).
std::string rooted_forest_code(const std::vector<int>& parent);

struct RefineOptions {
    int start_resolution = 256;
    int max_resolution = kMaxResolution;
    bool keep_curves = false;
};

/// Doubles the resolution until two consecutive levels agree on counts and nesting.
NodalTopology refine_until_stable(const AnyField& field, const RefineOptions& options = {});

}  // namespace nodal
