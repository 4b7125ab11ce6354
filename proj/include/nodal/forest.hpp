#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "nodal/errors.hpp"

namespace nodal::combinat {

/// Edge labels are exact rational multiples of pi; a Label of 3/2 means 3 pi / 2.
using Label = boost::rational<long long>;

std::string label_to_string(const Label& label);

/// Planar forest in the closed disc with 2n leaves on the boundary circle at positions 0..2n-1.
///
/// Text format, one tree per ';'-separated item:  tree := LEAF '-' node,
/// node := LEAF | '(' node+ ')'.  A parenthesised node is an internal vertex whose children are
/// listed counter-clockwise after the edge towards the root leaf, e.g. "0-(1 2 3); 4-5".
struct EmbeddedForest {
    struct Edge {
        int parent = -1;  // endpoint towards the tree's root leaf
        int child = -1;
        int tree = -1;
    };
    struct Vertex {
        int leaf = -1;           // boundary position for leaves, -1 for internal vertices
        std::vector<int> edges;  // counter-clockwise; internal vertices start with the parent edge
    };

    int n = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<int> roots;        // root leaf vertex of each tree
    std::vector<int> leaf_vertex;  // vertex at each boundary position

    static EmbeddedForest parse(const std::string& text);
    std::string to_string() const;
    int tree_count() const { return static_cast<int>(roots.size()); }
    int other_end(int edge, int vertex) const {
        return edges[edge].parent == vertex ? edges[edge].child : edges[edge].parent;
    }

    /// Throws DomainError on odd internal degree, bad leaf positions or a non-planar embedding.
    void validate() const;
};

/// One face of the forest complement: boundary arcs between consecutive leaves, and the tree
/// paths joining them. `forward[i]` is true when the walk runs along edges[i] parent -> child.
struct Face {
    std::vector<int> arcs;  // arc q runs from leaf q to leaf q+1
    std::vector<int> edges;
    std::vector<bool> forward;

    int degree() const { return static_cast<int>(arcs.size()); }
};

/// Faces by walking: from arc q enter the tree at leaf q+1, at each vertex leave by the edge
/// preceding the arrival edge counter-clockwise, and on reaching leaf p continue with arc p.
std::vector<Face> forest_faces(const EmbeddedForest& forest);

/// Labels from the split construction, indexed by edge. Chords get 2 pi.
std::vector<Label> label_forest(const EmbeddedForest& forest);

/// +1: edge oriented parent -> child, -1: child -> parent, 0: unset.
using Orientation = std::vector<int>;

/// Both orientations of one tree obeying the alternation rule at every vertex (other trees 0).
std::vector<Orientation> tree_orientations(const EmbeddedForest& forest, int tree);

/// Orients tree 0 (flipped if asked) and propagates across faces so that every face boundary
/// is a consistently oriented walk.
Orientation orient_forest(const EmbeddedForest& forest, bool flip_first = false);

bool satisfies_vertex_rule(const EmbeddedForest& forest, const Orientation& orientation);
bool faces_consistent(const EmbeddedForest& forest, const Orientation& orientation);

/// Random valid forest with at most `max_edges` edges, grown from a random chord diagram by
/// odd splits of leaf edges.
EmbeddedForest random_forest(std::mt19937_64& rng, int max_edges);

}  // namespace nodal::combinat
