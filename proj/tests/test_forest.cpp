#include <doctest.h>

#include <map>
#include <random>

#include "nodal/forest.hpp"

using namespace nodal;
using namespace nodal::combinat;

namespace {

// Faces from the permutation model of the planar map: darts on the forest edges and on the
// boundary arcs, rotation sigma at each vertex, involution alpha; faces are orbits of
// sigma o alpha. Returns (boundary-arc count, label sum) for every face except the outer one.
std::vector<std::pair<int, Label>> oracle_faces(const EmbeddedForest& f, const std::vector<Label>& labels) {
    const int leaves = 2 * f.n;
    const int E = static_cast<int>(f.edges.size());
    // Dart ids: 2e (from parent), 2e+1 (from child); arcs: 2E + 2q (q -> q+1), 2E + 2q + 1 (q+1 -> q).
    auto tree_dart_from = [&](int e, int v) { return f.edges[e].parent == v ? 2 * e : 2 * e + 1; };
    const int darts = 2 * E + 2 * leaves;
    std::vector<int> sigma(darts), alpha(darts);
    for (int d = 0; d < darts; ++d) alpha[d] = d ^ 1;
    for (int v = 0; v < static_cast<int>(f.vertices.size()); ++v) {
        const auto& vx = f.vertices[v];
        std::vector<int> ring;
        if (vx.leaf >= 0) {
            const int q = vx.leaf;
            // Counter-clockwise at a boundary point: forward arc, inward edge, backward arc.
            ring = {2 * E + 2 * q, tree_dart_from(vx.edges[0], v), 2 * E + 2 * ((q + leaves - 1) % leaves) + 1};
        } else {
            for (int e : vx.edges) ring.push_back(tree_dart_from(e, v));
        }
        for (std::size_t i = 0; i < ring.size(); ++i) sigma[ring[i]] = ring[(i + 1) % ring.size()];
    }
    std::vector<char> seen(darts, 0);
    std::vector<std::pair<int, Label>> faces;
    for (int start = 0; start < darts; ++start) {
        if (seen[start]) continue;
        int arcs = 0;
        bool tree = false;
        Label sum(0);
        int d = start;
        do {
            seen[d] = 1;
            if (d >= 2 * E) ++arcs;
            else {
                tree = true;
                sum += labels[d / 2];
            }
            d = sigma[alpha[d]];
        } while (d != start);
        if (!tree) {
            CHECK(arcs == leaves);  // the outer face runs once around the circle
            continue;
        }
        faces.push_back({arcs, sum});
    }
    return faces;
}

bool obeys_rule_at_tree(const EmbeddedForest& f, const Orientation& o, int tree) {
    for (int v = 0; v < static_cast<int>(f.vertices.size()); ++v) {
        const auto& vx = f.vertices[v];
        if (vx.leaf >= 0 || f.edges[vx.edges[0]].tree != tree) continue;
        const int deg = static_cast<int>(vx.edges.size());
        for (int i = 0; i < deg; ++i) {
            const int a = vx.edges[i], b = vx.edges[(i + 1) % deg];
            const bool out_a = (o[a] > 0) == (f.edges[a].parent == v);
            const bool out_b = (o[b] > 0) == (f.edges[b].parent == v);
            if (out_a == out_b) return false;
        }
    }
    return true;
}

// Brute force over all 2^E orientations of one tree's edges.
int count_tree_orientations(const EmbeddedForest& f, int tree) {
    std::vector<int> edges;
    for (int e = 0; e < static_cast<int>(f.edges.size()); ++e) {
        if (f.edges[e].tree == tree) edges.push_back(e);
    }
    int valid = 0;
    for (long mask = 0; mask < (1L << edges.size()); ++mask) {
        Orientation o(f.edges.size(), 1);
        for (std::size_t i = 0; i < edges.size(); ++i) o[edges[i]] = (mask >> i) & 1 ? 1 : -1;
        valid += obeys_rule_at_tree(f, o, tree);
    }
    return valid;
}

}  // namespace

TEST_CASE("single edge is labelled 2 pi") {
    const auto f = EmbeddedForest::parse("0-1");
    const auto labels = label_forest(f);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0] == Label(2));
}

TEST_CASE("one split with three new edges gives pi on every edge") {
    const auto f = EmbeddedForest::parse("0-(1 2 3)");
    for (const auto& l : label_forest(f)) CHECK(l == Label(1));
}

TEST_CASE("second split halves again") {
    const auto f = EmbeddedForest::parse("0-((1 2 3) 4 5)");
    const auto labels = label_forest(f);
    // Root edge 1, then the inner vertex receives 1: its edge 1/2 and children 1/2, 3/2, 1/2.
    CHECK(labels[0] == Label(1));
    CHECK(labels[1] == Label(1, 2));
    CHECK(labels[2] == Label(1, 2));
    CHECK(labels[3] == Label(3, 2));
    CHECK(labels[4] == Label(1, 2));
    CHECK(labels[5] == Label(1));
    CHECK(labels[6] == Label(1));
}

TEST_CASE("parse errors and invariant violations") {
    CHECK_THROWS_AS(EmbeddedForest::parse("0-(1 2)"), DomainError);  // odd internal degree
    CHECK_THROWS_AS(EmbeddedForest::parse("0-2; 1-3"), DomainError);  // crossing chords
    CHECK_THROWS_AS(EmbeddedForest::parse("0-(3 2 1)"), DomainError);  // wrong cyclic order
    CHECK_THROWS_AS(EmbeddedForest::parse("0-1; 1-2"), DomainError);
    CHECK_THROWS_AS(EmbeddedForest::parse("0-(1 2 3"), DomainError);
    CHECK_THROWS_AS(EmbeddedForest::parse("0-1; 3-4"), DomainError);  // missing leaf 2
    CHECK_THROWS_AS(EmbeddedForest::parse(""), DomainError);
}

TEST_CASE("text round trip") {
    for (const char* text : {"0-1", "0-(1 2 3); 4-5", "5-(0 1 2); 3-4", "0-((1 2 3) 4 (5 6 7 8 9)); 10-11"}) {
        CHECK(EmbeddedForest::parse(EmbeddedForest::parse(text).to_string()).to_string() ==
              EmbeddedForest::parse(text).to_string());
    }
    CHECK(EmbeddedForest::parse("0-(1 2 3);4-5").to_string() == "0-(1 2 3); 4-5");
}

TEST_CASE("star with one degree-4 vertex alternates") {
    const auto f = EmbeddedForest::parse("0-(1 2 3)");
    const auto o = tree_orientations(f, 0);
    REQUIRE(o.size() == 2);
    // Relative to the centre: out, in, out, in (or the flip).
    for (const auto& orient : o) {
        const int v = f.edges[0].child;
        bool prev = (orient[0] > 0) == (f.edges[0].parent == v);
        for (int e = 1; e < 4; ++e) {
            const bool out = (orient[e] > 0) == (f.edges[e].parent == v);
            CHECK(out != prev);
            prev = out;
        }
    }
    CHECK(count_tree_orientations(f, 0) == 2);
}

TEST_CASE("random forests: face sums, orientations, propagation") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_forest(rng, 20);
        CAPTURE(f.to_string());
        CHECK(static_cast<int>(f.edges.size()) <= 20);
        const auto labels = label_forest(f);
        for (const auto& l : labels) CHECK(l > Label(0));
        const auto faces = oracle_faces(f, labels);
        CHECK(static_cast<int>(faces.size()) == 1 + 2 * f.n - f.tree_count());
        for (const auto& [degree, sum] : faces) CHECK(sum == Label(2 * degree));
        // The library walk agrees with the oracle face by face (as multisets).
        std::multimap<int, Label> mine, theirs(faces.begin(), faces.end());
        for (const auto& face : forest_faces(f)) {
            Label s(0);
            for (int e : face.edges) s += labels[e];
            mine.insert({face.degree(), s});
        }
        CHECK(mine == theirs);
        for (int t = 0; t < f.tree_count(); ++t) CHECK(count_tree_orientations(f, t) == 2);
        for (bool flip : {false, true}) {
            const auto o = orient_forest(f, flip);
            CHECK(satisfies_vertex_rule(f, o));
            CHECK(faces_consistent(f, o));
        }
    }
}

TEST_CASE("propagated orientation is determined by the first tree") {
    const auto f = EmbeddedForest::parse("0-(1 2 3); 4-(5 6 7); 8-9");
    const auto a = orient_forest(f, false);
    const auto b = orient_forest(f, true);
    for (std::size_t e = 0; e < a.size(); ++e) CHECK(a[e] == -b[e]);
}

TEST_CASE("label printing") {
    CHECK(label_to_string(Label(3, 2)) == "3/2");
    CHECK(label_to_string(Label(2)) == "2");
}
