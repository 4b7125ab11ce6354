#include "nodal/forest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace nodal::combinat {

std::string label_to_string(const Label& label) {
    std::ostringstream out;
    out << label.numerator();
    if (label.denominator() != 1) out << '/' << label.denominator();
    return out.str();
}

namespace {

class ForestParser {
public:
    explicit ForestParser(const std::string& text) : text_(text) {}

    EmbeddedForest run() {
        EmbeddedForest forest;
        skip();
        if (done()) throw DomainError("empty forest text");
        while (true) {
            const int tree = forest.tree_count();
            const int root = add_leaf(forest, number());
            forest.roots.push_back(root);
            skip();
            expect('-');
            node(forest, root, tree);
            skip();
            if (done()) break;
            expect(';');
        }
        int max_leaf = -1;
        for (const auto& v : forest.vertices) max_leaf = std::max(max_leaf, v.leaf);
        const int leaves = max_leaf + 1;
        if (leaves % 2 != 0) throw DomainError("forest needs an even number of leaves");
        forest.n = leaves / 2;
        forest.leaf_vertex.assign(leaves, -1);
        for (int v = 0; v < static_cast<int>(forest.vertices.size()); ++v) {
            const int leaf = forest.vertices[v].leaf;
            if (leaf < 0) continue;
            if (forest.leaf_vertex[leaf] != -1) {
                throw DomainError("leaf position " + std::to_string(leaf) + " used twice");
            }
            forest.leaf_vertex[leaf] = v;
        }
        for (int q = 0; q < leaves; ++q) {
            if (forest.leaf_vertex[q] == -1) throw DomainError("leaf position " + std::to_string(q) + " missing");
        }
        return forest;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    bool done() const { return pos_ >= text_.size(); }
    void skip() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip();
        if (done() || text_[pos_] != c) {
            throw DomainError(std::string("forest text: expected '") + c + "' at offset " + std::to_string(pos_));
        }
        ++pos_;
    }
    int number() {
        skip();
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw DomainError("forest text: expected leaf position at offset " + std::to_string(start));
        if (pos_ - start > 6) throw DomainError("forest text: leaf position too large");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    static int add_leaf(EmbeddedForest& forest, int position) {
        forest.vertices.push_back({position, {}});
        return static_cast<int>(forest.vertices.size()) - 1;
    }

    static int add_edge(EmbeddedForest& forest, int parent, int child, int tree) {
        forest.edges.push_back({parent, child, tree});
        const int e = static_cast<int>(forest.edges.size()) - 1;
        forest.vertices[parent].edges.push_back(e);
        forest.vertices[child].edges.push_back(e);
        return e;
    }

    void node(EmbeddedForest& forest, int parent, int tree) {
        skip();
        if (!done() && text_[pos_] == '(') {
            ++pos_;
            forest.vertices.push_back({-1, {}});
            const int v = static_cast<int>(forest.vertices.size()) - 1;
            add_edge(forest, parent, v, tree);
            skip();
            if (!done() && text_[pos_] == ')') throw DomainError("forest text: internal vertex without children");
            while (true) {
                node(forest, v, tree);
                skip();
                if (!done() && text_[pos_] == ')') {
                    ++pos_;
                    return;
                }
                if (done()) throw DomainError("forest text: unbalanced parenthesis");
            }
        }
        const int leaf = add_leaf(forest, number());
        add_edge(forest, parent, leaf, tree);
    }
};

void leaf_order(const EmbeddedForest& forest, int v, std::vector<int>& out) {
    const auto& vertex = forest.vertices[v];
    if (vertex.leaf >= 0) {
        out.push_back(vertex.leaf);
        return;
    }
    for (std::size_t i = 1; i < vertex.edges.size(); ++i) leaf_order(forest, forest.edges[vertex.edges[i]].child, out);
}

void write_node(const EmbeddedForest& forest, int v, std::ostringstream& out) {
    const auto& vertex = forest.vertices[v];
    if (vertex.leaf >= 0) {
        out << vertex.leaf;
        return;
    }
    out << '(';
    for (std::size_t i = 1; i < vertex.edges.size(); ++i) {
        if (i > 1) out << ' ';
        write_node(forest, forest.edges[vertex.edges[i]].child, out);
    }
    out << ')';
}

}  // namespace

EmbeddedForest EmbeddedForest::parse(const std::string& text) {
    EmbeddedForest forest = ForestParser(text).run();
    forest.validate();
    return forest;
}

std::string EmbeddedForest::to_string() const {
    std::ostringstream out;
    for (int t = 0; t < tree_count(); ++t) {
        if (t > 0) out << "; ";
        const int root = roots[t];
        out << vertices[root].leaf << '-';
        write_node(*this, edges[vertices[root].edges[0]].child, out);
    }
    return out.str();
}

void EmbeddedForest::validate() const {
    const int leaves = 2 * n;
    if (n < 1) throw DomainError("forest needs at least two leaves");
    if (static_cast<int>(leaf_vertex.size()) != leaves) throw DomainError("leaf table size mismatch");
    for (const auto& v : vertices) {
        if (v.leaf >= 0 && v.edges.size() != 1) throw DomainError("leaf with degree other than 1");
        if (v.leaf < 0 && v.edges.size() % 2 != 0) {
            throw DomainError("internal vertex of odd degree " + std::to_string(v.edges.size()));
        }
    }
    for (int t = 0; t < tree_count(); ++t) {
        const int root = roots[t];
        std::vector<int> order;
        leaf_order(*this, edges[vertices[root].edges[0]].child, order);
        const int base = vertices[root].leaf;
        int previous = 0;
        for (int leaf : order) {
            const int offset = ((leaf - base) % leaves + leaves) % leaves;
            if (offset <= previous) {
                throw DomainError("tree " + std::to_string(t) + " leaves are not in counter-clockwise order");
            }
            previous = offset;
        }
    }
    const auto faces = forest_faces(*this);
    if (static_cast<int>(faces.size()) != 1 + leaves - tree_count()) {
        throw DomainError("trees cross: forest is not planar in the given order");
    }
}

std::vector<Face> forest_faces(const EmbeddedForest& forest) {
    const int leaves = 2 * forest.n;
    std::vector<char> used(leaves, 0);
    std::vector<Face> faces;
    for (int start = 0; start < leaves; ++start) {
        if (used[start]) continue;
        Face face;
        int arc = start;
        while (!used[arc]) {
            used[arc] = 1;
            face.arcs.push_back(arc);
            int v = forest.leaf_vertex[(arc + 1) % leaves];
            int e = forest.vertices[v].edges[0];
            while (true) {
                const int w = forest.other_end(e, v);
                face.edges.push_back(e);
                face.forward.push_back(forest.edges[e].parent == v);
                v = w;
                const auto& vertex = forest.vertices[v];
                if (vertex.leaf >= 0) {
                    arc = vertex.leaf;
                    break;
                }
                const int deg = static_cast<int>(vertex.edges.size());
                const int idx = static_cast<int>(std::find(vertex.edges.begin(), vertex.edges.end(), e) - vertex.edges.begin());
                e = vertex.edges[(idx + deg - 1) % deg];
            }
        }
        if (arc != start) throw DomainError("face walk did not close");
        faces.push_back(std::move(face));
    }
    return faces;
}

std::vector<Label> label_forest(const EmbeddedForest& forest) {
    forest.validate();
    std::vector<Label> labels(forest.edges.size(), Label(0));
    // Replays the splits top-down: an internal vertex reached by an edge labelled x puts x/2 on
    // that edge and x/2, 2 - x/2, x/2, ... on its children, each child continuing with its value.
    std::function<void(int, Label)> assign = [&](int e, Label x) {
        const int v = forest.edges[e].child;
        const auto& vertex = forest.vertices[v];
        if (vertex.leaf >= 0) {
            labels[e] = x;
            return;
        }
        const Label half = x / 2;
        labels[e] = half;
        for (std::size_t i = 1; i < vertex.edges.size(); ++i) {
            assign(vertex.edges[i], i % 2 == 1 ? half : Label(2) - half);
        }
    };
    for (int root : forest.roots) assign(forest.vertices[root].edges[0], Label(2));
    return labels;
}

namespace {

bool points_out(const EmbeddedForest& forest, const Orientation& o, int e, int v) {
    return (o[e] > 0) == (forest.edges[e].parent == v);
}

void set_out(const EmbeddedForest& forest, Orientation& o, int e, int v, bool out) {
    o[e] = (out == (forest.edges[e].parent == v)) ? 1 : -1;
}

int first_edge_of_tree(const EmbeddedForest& forest, int tree) {
    return forest.vertices[forest.roots[tree]].edges[0];
}

// Spreads the alternation rule from one oriented edge through its tree.
void spread_tree(const EmbeddedForest& forest, Orientation& o, int seed_edge) {
    std::vector<int> stack{seed_edge};
    while (!stack.empty()) {
        const int e = stack.back();
        stack.pop_back();
        const int v = forest.edges[e].child;
        const auto& vertex = forest.vertices[v];
        if (vertex.leaf >= 0) continue;
        const bool parent_out = points_out(forest, o, vertex.edges[0], v);
        for (std::size_t i = 1; i < vertex.edges.size(); ++i) {
            set_out(forest, o, vertex.edges[i], v, parent_out != (i % 2 == 1));
            stack.push_back(vertex.edges[i]);
        }
    }
}

}  // namespace

std::vector<Orientation> tree_orientations(const EmbeddedForest& forest, int tree) {
    if (tree < 0 || tree >= forest.tree_count()) throw DomainError("tree index out of range");
    std::vector<Orientation> out;
    for (int sign : {1, -1}) {
        Orientation o(forest.edges.size(), 0);
        const int e = first_edge_of_tree(forest, tree);
        o[e] = sign;
        spread_tree(forest, o, e);
        out.push_back(std::move(o));
    }
    return out;
}

Orientation orient_forest(const EmbeddedForest& forest, bool flip_first) {
    Orientation o(forest.edges.size(), 0);
    const int e0 = first_edge_of_tree(forest, 0);
    o[e0] = flip_first ? -1 : 1;
    spread_tree(forest, o, e0);
    const auto faces = forest_faces(forest);
    // Each face boundary must be traversed consistently; an oriented tree on a face fixes the
    // direction of the face and hence the orientation of every other tree touching it.
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& face : faces) {
            int along = 0;
            for (std::size_t i = 0; i < face.edges.size() && along == 0; ++i) {
                const int e = face.edges[i];
                if (o[e] != 0) along = ((o[e] > 0) == face.forward[i]) ? 1 : -1;
            }
            if (along == 0) continue;
            for (std::size_t i = 0; i < face.edges.size(); ++i) {
                const int e = face.edges[i];
                if (o[e] != 0) continue;
                o[e] = ((along > 0) == face.forward[i]) ? 1 : -1;
                // Orient the whole tree from this edge: walk up to the root edge then down.
                const int tree = forest.edges[e].tree;
                const int root_edge = first_edge_of_tree(forest, tree);
                for (int sign : {1, -1}) {
                    Orientation trial(forest.edges.size(), 0);
                    trial[root_edge] = sign;
                    spread_tree(forest, trial, root_edge);
                    if (trial[e] == o[e]) {
                        for (std::size_t k = 0; k < trial.size(); ++k) {
                            if (trial[k] != 0) o[k] = trial[k];
                        }
                        break;
                    }
                }
                progress = true;
            }
        }
    }
    if (std::find(o.begin(), o.end(), 0) != o.end()) throw DomainError("face propagation left edges unoriented");
    return o;
}

bool satisfies_vertex_rule(const EmbeddedForest& forest, const Orientation& o) {
    for (int v = 0; v < static_cast<int>(forest.vertices.size()); ++v) {
        const auto& vertex = forest.vertices[v];
        if (vertex.leaf >= 0) continue;
        const int deg = static_cast<int>(vertex.edges.size());
        for (int i = 0; i < deg; ++i) {
            const int a = vertex.edges[i];
            const int b = vertex.edges[(i + 1) % deg];
            if (o[a] == 0 || o[b] == 0) return false;
            if (points_out(forest, o, a, v) == points_out(forest, o, b, v)) return false;
        }
    }
    return true;
}

bool faces_consistent(const EmbeddedForest& forest, const Orientation& o) {
    for (const auto& face : forest_faces(forest)) {
        int along = 0;
        for (std::size_t i = 0; i < face.edges.size(); ++i) {
            const int e = face.edges[i];
            if (o[e] == 0) return false;
            const int here = ((o[e] > 0) == face.forward[i]) ? 1 : -1;
            if (along == 0) along = here;
            else if (here != along) return false;
        }
    }
    return true;
}

namespace {

// Random non-crossing matching of 2c points by recursive decomposition.
void random_matching(std::mt19937_64& rng, int lo, int hi, std::vector<int>& match) {
    if (lo >= hi) return;
    const int pairs = (hi - lo) / 2;
    std::uniform_int_distribution<int> pick(0, pairs - 1);
    const int partner = lo + 1 + 2 * pick(rng);
    match[lo] = partner;
    match[partner] = lo;
    random_matching(rng, lo + 1, partner, match);
    random_matching(rng, partner + 1, hi, match);
}

}  // namespace

EmbeddedForest random_forest(std::mt19937_64& rng, int max_edges) {
    if (max_edges < 1) throw DomainError("random forest needs at least one edge");
    std::uniform_int_distribution<int> chord_count(1, std::max(1, std::min(4, max_edges)));
    const int chords = chord_count(rng);
    std::vector<int> match(2 * chords, -1);
    random_matching(rng, 0, 2 * chords, match);
    std::ostringstream text;
    bool first = true;
    for (int i = 0; i < 2 * chords; ++i) {
        if (match[i] < i) continue;
        if (!first) text << "; ";
        first = false;
        text << i << '-' << match[i];
    }
    EmbeddedForest forest = EmbeddedForest::parse(text.str());
    int edges = chords;
    std::uniform_int_distribution<int> coin(0, 3);
    while (edges + 3 <= max_edges && coin(rng) != 0) {
        std::vector<int> candidates;
        for (int v = 0; v < static_cast<int>(forest.vertices.size()); ++v) {
            if (forest.vertices[v].leaf >= 0 && forest.edges[forest.vertices[v].edges[0]].child == v) candidates.push_back(v);
        }
        const int v = candidates[std::uniform_int_distribution<int>(0, static_cast<int>(candidates.size()) - 1)(rng)];
        const int max_k = std::min(3, (max_edges - edges - 1) / 2);
        const int k = std::uniform_int_distribution<int>(1, max_k)(rng);
        const int p = forest.vertices[v].leaf;
        const int tree = forest.edges[forest.vertices[v].edges[0]].tree;
        for (auto& vertex : forest.vertices) {
            if (vertex.leaf > p) vertex.leaf += 2 * k;
        }
        forest.vertices[v].leaf = -1;
        for (int i = 0; i <= 2 * k; ++i) {
            forest.vertices.push_back({p + i, {}});
            const int leaf = static_cast<int>(forest.vertices.size()) - 1;
            forest.edges.push_back({v, leaf, tree});
            const int e = static_cast<int>(forest.edges.size()) - 1;
            forest.vertices[v].edges.push_back(e);
            forest.vertices[leaf].edges.push_back(e);
        }
        edges += 2 * k + 1;
        forest.n += k;
        forest.leaf_vertex.assign(2 * forest.n, -1);
        for (int u = 0; u < static_cast<int>(forest.vertices.size()); ++u) {
            if (forest.vertices[u].leaf >= 0) forest.leaf_vertex[forest.vertices[u].leaf] = u;
        }
    }
    forest.validate();
    return forest;
}

}  // namespace nodal::combinat
