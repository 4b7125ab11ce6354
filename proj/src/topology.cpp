#include "nodal/topology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace nodal {

namespace {

int uf_find(std::vector<int>& parent, int x) {
    int root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
        const int next = parent[x];
        parent[x] = root;
        x = next;
    }
    return root;
}

int uf_find_const(const std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x];
    return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
}

constexpr int kSubdivisions = 16;
constexpr int kSaddleDepth = 1;

// Decides which diagonal of a saddle box is connected by sampling it on a
// (kSubdivisions+1)^2 sub-grid, recursing into sub-saddles. Returns the sign of the
// connected diagonal, or 0 when neither pair connects at the finest level.
int resolve_box(const std::function<double(double, double)>& eval, double u0, double v0,
                double size, const std::array<double, 4>& corners, int depth, double threshold) {
    constexpr int S = kSubdivisions;
    constexpr int W = S + 1;
    std::array<double, W * W> g{};
    std::array<std::int8_t, W * W> st{};
    for (int r = 0; r <= S; ++r) {
        for (int c = 0; c <= S; ++c) {
            double val;
            if (r == 0 && c == 0) val = corners[0];
            else if (r == 0 && c == S) val = corners[1];
            else if (r == S && c == S) val = corners[2];
            else if (r == S && c == 0) val = corners[3];
            else val = eval(u0 + size * r / S, v0 + size * c / S);
            g[r * W + c] = val;
            st[r * W + c] = val > threshold ? 1 : (val < -threshold ? -1 : 0);
        }
    }
    std::vector<int> parent(W * W);
    std::iota(parent.begin(), parent.end(), 0);
    for (int r = 0; r <= S; ++r) {
        for (int c = 0; c <= S; ++c) {
            const int id = r * W + c;
            if (st[id] == 0) continue;
            if (c < S && st[id + 1] == st[id]) uf_union(parent, id, id + 1);
            if (r < S && st[id + W] == st[id]) uf_union(parent, id, id + W);
        }
    }
    if (depth > 0) {
        for (int r = 0; r < S; ++r) {
            for (int c = 0; c < S; ++c) {
                const int a = r * W + c, b = a + 1, cc = a + W + 1, d = a + W;
                if (st[a] == 0 || st[b] == 0 || st[a] != st[cc] || st[b] != st[d] || st[a] == st[b]) {
                    continue;
                }
                const int dec = resolve_box(eval, u0 + size * r / S, v0 + size * c / S, size / S,
                                            {g[a], g[b], g[cc], g[d]}, depth - 1, threshold);
                if (dec == st[a]) uf_union(parent, a, cc);
                else if (dec == st[b]) uf_union(parent, b, d);
            }
        }
    }
    const int a = 0, b = S, cc = S * W + S, d = S * W;
    if (st[a] != 0 && st[a] == st[cc] && uf_find(parent, a) == uf_find(parent, cc)) return st[a];
    if (st[b] != 0 && st[b] == st[d] && uf_find(parent, b) == uf_find(parent, d)) return st[b];
    return 0;
}

double polygon_area(const std::vector<std::array<double, 2>>& pts) {
    double area = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        area += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(area);
}

bool point_in_polygon(const std::array<double, 2>& p, const std::vector<std::array<double, 2>>& poly) {
    bool inside = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const auto& a = poly[i];
        const auto& b = poly[j];
        if ((a[1] > p[1]) != (b[1] > p[1]) &&
            p[0] < (b[0] - a[0]) * (p[1] - a[1]) / (b[1] - a[1]) + a[0]) {
            inside = !inside;
        }
    }
    return inside;
}

}  // namespace

bool NodalTopology::equivalent(const NodalTopology& other, bool antipodal_aware) const {
    if (components != other.components || domains != other.domains || nesting != other.nesting) {
        return false;
    }
    if (antipodal_aware) {
        return odd_count == other.odd_count && oval_pairs == other.oval_pairs;
    }
    return true;
}

CellComplex::CellComplex(const SampledGrid& grid, AnyField field)
    : grid_(grid), field_(std::move(field)) {
    build();
}

double CellComplex::value_at_local(int row, int col, double u, double v) const {
    if (grid_.surface == Surface::Sphere) {
        const auto& f = std::get<SphereField>(field_);
        return f(grid_.theta(row + u), grid_.phi(col + v));
    }
    const auto& f = std::get<DiscField>(field_);
    return f(grid_.x(col + v), grid_.y(row + u));
}

int CellComplex::resolve_saddle(int row, int col, const std::array<double, 4>& corners) const {
    auto eval = [this, row, col](double u, double v) { return value_at_local(row, col, u, v); };
    const double threshold = std::min(grid_.row_threshold(row), grid_.row_threshold(row + 1));
    return resolve_box(eval, 0.0, 0.0, 1.0, corners, kSaddleDepth, threshold);
}

std::array<double, 2> CellComplex::vertex_coord(int v, int hint_col) const {
    if (grid_.surface == Surface::Sphere) {
        if (v == grid_.north()) return {0.0, grid_.phi(hint_col)};
        if (v == grid_.south()) return {M_PI, grid_.phi(hint_col)};
        return {grid_.theta(v / grid_.cols), grid_.phi(v % grid_.cols)};
    }
    return {grid_.x(v % grid_.cols), grid_.y(v / grid_.cols)};
}

std::pair<int, int> CellComplex::edge_vertices(std::int64_t edge) const {
    const std::int64_t R = grid_.rows, C = grid_.cols;
    if (edge < R * C) {
        const int i = static_cast<int>(edge / C), j = static_cast<int>(edge % C);
        return {grid_.ring_vertex(i, j), grid_.ring_vertex(i, (j + 1) % grid_.cols)};
    }
    edge -= R * C;
    if (edge < (R - 1) * C) {
        const int i = static_cast<int>(edge / C), j = static_cast<int>(edge % C);
        return {grid_.ring_vertex(i, j), grid_.ring_vertex(i + 1, j)};
    }
    edge -= (R - 1) * C;
    if (edge < C) return {grid_.north(), grid_.ring_vertex(0, static_cast<int>(edge))};
    edge -= C;
    return {grid_.south(), grid_.ring_vertex(grid_.rows - 1, static_cast<int>(edge))};
}

std::int64_t CellComplex::edge_between(int u, int v) const {
    const std::int64_t R = grid_.rows, C = grid_.cols;
    if (grid_.is_pole(u)) std::swap(u, v);
    if (grid_.is_pole(v)) {
        if (grid_.is_pole(u)) return -1;
        const int i = u / grid_.cols, j = u % grid_.cols;
        if (v == grid_.north() && i == 0) return R * C + (R - 1) * C + j;
        if (v == grid_.south() && i == grid_.rows - 1) return R * C + (R - 1) * C + C + j;
        return -1;
    }
    const int iu = u / grid_.cols, ju = u % grid_.cols;
    const int iv = v / grid_.cols, jv = v % grid_.cols;
    const bool wrap = grid_.surface == Surface::Sphere;
    if (iu == iv) {
        if ((wrap ? (ju + 1) % grid_.cols : ju + 1) == jv) return iu * C + ju;
        if ((wrap ? (jv + 1) % grid_.cols : jv + 1) == ju) return iu * C + jv;
        return -1;
    }
    if (ju == jv && std::abs(iu - iv) == 1) return R * C + std::min(iu, iv) * C + ju;
    return -1;
}

int CellComplex::node_for(std::int64_t edge, int a, int b) {
    auto it = node_of_edge_.find(edge);
    if (it != node_of_edge_.end()) return it->second;
    const int id = static_cast<int>(nodes_.size());
    node_of_edge_.emplace(edge, id);
    Node node;
    node.edge = edge;
    const int hint = grid_.is_pole(a) ? b % grid_.cols : a % grid_.cols;
    auto pa = vertex_coord(a, hint);
    auto pb = vertex_coord(b, hint);
    const double va = state_[a] == 0 ? 0.0 : grid_.values[a];
    const double vb = state_[b] == 0 ? 0.0 : grid_.values[b];
    double t = va != vb ? va / (va - vb) : 0.5;
    t = std::clamp(t, 0.0, 1.0);
    if (grid_.surface == Surface::Sphere) {
        if (pb[1] - pa[1] > M_PI) pb[1] -= 2.0 * M_PI;
        if (pa[1] - pb[1] > M_PI) pb[1] += 2.0 * M_PI;
    }
    node.point = {pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1])};
    if (grid_.surface == Surface::Sphere) {
        node.point[1] = std::fmod(node.point[1] + 2.0 * M_PI, 2.0 * M_PI);
    }
    nodes_.push_back(node);
    nparent_.push_back(id);
    return id;
}

void CellComplex::link(int na, int nb) {
    auto attach = [this](int from, int to) {
        Node& n = nodes_[from];
        if (n.degree < 2) n.nbr[n.degree] = to;
        ++n.degree;
    };
    attach(na, nb);
    attach(nb, na);
    uf_union(nparent_, na, nb);
}

void CellComplex::build() {
    const int nv = grid_.vertex_count();
    state_.assign(nv, 0);
    tie_.assign(nv, 1);
    in_cell_.assign(nv, 0);
    vparent_.resize(nv);
    std::iota(vparent_.begin(), vparent_.end(), 0);
    tparent_ = vparent_;
    const int half = grid_.rows / 2;
    for (int v = 0; v < nv; ++v) {
        if (!grid_.is_active(v)) continue;
        const double val = grid_.values[v];
        const bool zero = grid_.is_zero(v);
        state_[v] = zero ? 0 : (val > 0.0 ? 1 : -1);
        if (zero) {
            ++zero_vertices_;
            bool upper = grid_.surface == Surface::Disc || v == grid_.north() ||
                         (!grid_.is_pole(v) && v / grid_.cols < half);
            tie_[v] = upper ? 1 : static_cast<std::int8_t>(grid_.parity < 0 ? -1 : 1);
        } else {
            tie_[v] = state_[v];
        }
    }

    auto process = [this](int ncorner, const std::array<int, 4>& cv, const std::array<std::int64_t, 4>& ce,
                          int row, int col) {
        for (int k = 0; k < ncorner; ++k) in_cell_[cv[k]] = 1;
        for (int k = 0; k < ncorner; ++k) {
            const int u = cv[k], w = cv[(k + 1) % ncorner];
            if (state_[u] != 0 && state_[u] == state_[w]) uf_union(vparent_, u, w);
            if (tie_[u] == tie_[w]) uf_union(tparent_, u, w);
        }
        int decision = 0;
        bool real_saddle = false;
        if (ncorner == 4) {
            const auto s0 = state_[cv[0]], s1 = state_[cv[1]], s2 = state_[cv[2]], s3 = state_[cv[3]];
            real_saddle = s0 != 0 && s1 != 0 && s0 == s2 && s1 == s3 && s0 != s1;
            if (real_saddle) {
                decision = resolve_saddle(row, col, {grid_.values[cv[0]], grid_.values[cv[1]],
                                                      grid_.values[cv[2]], grid_.values[cv[3]]});
                if (decision == s0) {
                    uf_union(vparent_, cv[0], cv[2]);
                    uf_union(tparent_, cv[0], cv[2]);
                } else if (decision == s1) {
                    uf_union(vparent_, cv[1], cv[3]);
                    uf_union(tparent_, cv[1], cv[3]);
                }
            }
        }
        std::array<int, 4> cross{};
        int ncross = 0;
        for (int k = 0; k < ncorner; ++k) {
            const int u = cv[k], w = cv[(k + 1) % ncorner];
            cross[k] = -1;
            if (tie_[u] != tie_[w]) {
                cross[k] = node_for(ce[k], u, w);
                ++ncross;
            }
        }
        if (ncross == 2) {
            int first = -1;
            for (int k = 0; k < ncorner; ++k) {
                if (cross[k] < 0) continue;
                if (first < 0) first = cross[k];
                else link(first, cross[k]);
            }
        } else if (ncross == 4) {
            // Corner k touches edges k-1 and k.
            if (real_saddle && decision != 0) {
                if (decision == tie_[cv[0]]) {
                    link(cross[0], cross[1]);  // cut off corner 1
                    link(cross[2], cross[3]);  // cut off corner 3
                } else {
                    link(cross[3], cross[0]);
                    link(cross[1], cross[2]);
                }
            } else {
                ++unresolved_;
                link(cross[0], cross[1]);
                link(cross[2], cross[3]);
                uf_union(nparent_, cross[0], cross[2]);
            }
        }
    };

    const int R = grid_.rows, C = grid_.cols;
    const std::int64_t hbase = 0, vbase = static_cast<std::int64_t>(R) * C;
    if (grid_.surface == Surface::Sphere) {
        const std::int64_t nbase = vbase + static_cast<std::int64_t>(R - 1) * C;
        const std::int64_t sbase = nbase + C;
        for (int i = 0; i + 1 < R; ++i) {
            for (int j = 0; j < C; ++j) {
                const int jn = (j + 1) % C;
                process(4,
                        {grid_.ring_vertex(i, j), grid_.ring_vertex(i, jn), grid_.ring_vertex(i + 1, jn),
                         grid_.ring_vertex(i + 1, j)},
                        {hbase + static_cast<std::int64_t>(i) * C + j, vbase + static_cast<std::int64_t>(i) * C + jn,
                         hbase + static_cast<std::int64_t>(i + 1) * C + j, vbase + static_cast<std::int64_t>(i) * C + j},
                        i, j);
            }
        }
        for (int j = 0; j < C; ++j) {
            const int jn = (j + 1) % C;
            process(3, {grid_.north(), grid_.ring_vertex(0, j), grid_.ring_vertex(0, jn), 0},
                    {nbase + j, hbase + j, nbase + jn, 0}, -1, j);
            process(3, {grid_.south(), grid_.ring_vertex(R - 1, jn), grid_.ring_vertex(R - 1, j), 0},
                    {sbase + jn, hbase + static_cast<std::int64_t>(R - 1) * C + j, sbase + j, 0}, R - 1, j);
        }
    } else {
        for (int i = 0; i + 1 < R; ++i) {
            for (int j = 0; j + 1 < C; ++j) {
                const int a = grid_.ring_vertex(i, j), b = grid_.ring_vertex(i, j + 1);
                const int c = grid_.ring_vertex(i + 1, j + 1), d = grid_.ring_vertex(i + 1, j);
                if (!grid_.active[a] || !grid_.active[b] || !grid_.active[c] || !grid_.active[d]) continue;
                process(4, {a, b, c, d},
                        {hbase + static_cast<std::int64_t>(i) * C + j, vbase + static_cast<std::int64_t>(i) * C + j + 1,
                         hbase + static_cast<std::int64_t>(i + 1) * C + j, vbase + static_cast<std::int64_t>(i) * C + j},
                        i, j);
            }
        }
    }

    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        const int root = uf_find(nparent_, static_cast<int>(n));
        if (!curve_of_root_.count(root)) {
            const int idx = static_cast<int>(curve_of_root_.size());
            curve_of_root_.emplace(root, idx);
        }
    }
    if (grid_.surface == Surface::Sphere) {
        for (const auto& node : nodes_) {
            if (node.degree != 2) throw ExtractionError("open chain in sphere nodal extraction");
        }
    }
    {
        std::vector<std::uint8_t> seen(nv, 0);
        for (int v = 0; v < nv; ++v) {
            if (!in_cell_[v]) continue;
            const int root = uf_find(tparent_, v);
            if (!seen[root]) {
                seen[root] = 1;
                ++tie_domains_;
            }
        }
    }
    if (grid_.surface == Surface::Disc) {
        zero_vertices_ = 0;
        for (int v = 0; v < nv; ++v) {
            if (in_cell_[v] && state_[v] == 0) ++zero_vertices_;
        }
    }
}

int CellComplex::curve_of_node(int node) const {
    return curve_of_root_.at(uf_find_const(nparent_, node));
}

int CellComplex::domain_of_vertex(int v) const {
    if (!in_cell_[v] || state_[v] == 0) return -1;
    return uf_find_const(vparent_, v);
}

DomainCount CellComplex::domains() const {
    DomainCount out;
    std::unordered_map<int, int> seen;
    for (int v = 0; v < grid_.vertex_count(); ++v) {
        const int root = domain_of_vertex(v);
        if (root < 0) continue;
        if (seen.emplace(root, out.count).second) {
            out.signs.push_back(state_[v]);
            ++out.count;
        }
    }
    return out;
}

int CellComplex::open_chains() const {
    int ends = 0;
    for (const auto& node : nodes_) {
        if (node.degree == 1) ++ends;
    }
    return ends / 2;
}

std::vector<NodalCurve> CellComplex::curves() const {
    std::vector<NodalCurve> out;
    std::vector<std::uint8_t> visited(nodes_.size(), 0);
    auto walk = [&](int start, bool closed) {
        NodalCurve curve;
        curve.closed = closed;
        int prev = -1, cur = start;
        while (cur >= 0 && !visited[cur]) {
            visited[cur] = 1;
            curve.points.push_back(nodes_[cur].point);
            const Node& n = nodes_[cur];
            int next = -1;
            for (int k = 0; k < std::min(n.degree, 2); ++k) {
                if (n.nbr[k] != prev && !visited[n.nbr[k]]) {
                    next = n.nbr[k];
                    break;
                }
            }
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(curve));
    };
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        if (!visited[n] && nodes_[n].degree == 1) walk(static_cast<int>(n), false);
    }
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        if (!visited[n]) walk(static_cast<int>(n), true);
    }
    return out;
}

std::vector<std::pair<int, int>> CellComplex::region_tree_edges() const {
    std::unordered_map<int, int> domain_index;
    for (int v = 0; v < grid_.vertex_count(); ++v) {
        const int root = domain_of_vertex(v);
        if (root >= 0 && !domain_index.count(root)) {
            const int idx = static_cast<int>(domain_index.size());
            domain_index.emplace(root, idx);
        }
    }
    std::map<int, std::pair<int, int>> pair_of_curve;
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        const auto [u, w] = edge_vertices(nodes_[n].edge);
        const int du = domain_of_vertex(u), dw = domain_of_vertex(w);
        if (du < 0 || dw < 0) continue;
        auto p = std::minmax(domain_index.at(du), domain_index.at(dw));
        if (p.first == p.second) return {};
        const int c = curve_of_node(static_cast<int>(n));
        auto [it, inserted] = pair_of_curve.emplace(c, p);
        if (!inserted && it->second != std::pair<int, int>(p)) return {};
    }
    if (static_cast<int>(pair_of_curve.size()) != components()) return {};
    std::vector<std::pair<int, int>> edges;
    for (const auto& [c, p] : pair_of_curve) edges.push_back(p);
    if (static_cast<int>(domain_index.size()) != static_cast<int>(edges.size()) + 1) return {};
    return edges;
}

DomainCount count_domains(const SampledGrid& grid, const AnyField& field) {
    return CellComplex(grid, field).domains();
}

int count_components(const SampledGrid& grid, const AnyField& field) {
    return CellComplex(grid, field).components();
}

AntipodalClass antipodal_classify(const CellComplex& complex) {
    const SampledGrid& grid = complex.grid();
    if (grid.surface != Surface::Sphere) throw DomainError("antipodal classification needs a sphere grid");
    const int count = complex.components();
    std::vector<int> partner(count, -1);
    for (const auto& [edge, node] : complex.crossing_nodes()) {
        const int c = complex.curve_of_node(node);
        const auto [u, w] = complex.edge_vertices(edge);
        const std::int64_t image = complex.edge_between(grid.antipode(u), grid.antipode(w));
        auto it = complex.crossing_nodes().find(image);
        if (image < 0 || it == complex.crossing_nodes().end()) {
            throw ExtractionError("nodal curve has no antipodal partner");
        }
        const int p = complex.curve_of_node(it->second);
        if (partner[c] >= 0 && partner[c] != p) throw ExtractionError("inconsistent antipodal image");
        partner[c] = p;
    }
    AntipodalClass out;
    for (int c = 0; c < count; ++c) {
        if (partner[c] < 0 || partner[partner[c]] != c) throw ExtractionError("antipodal map is not an involution");
        if (partner[c] == c) ++out.odd_count;
    }
    out.oval_pairs = (count - out.odd_count) / 2;
    return out;
}

std::string rooted_forest_code(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    std::vector<std::vector<int>> children(n);
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        if (parent[v] < 0) roots.push_back(v);
        else children[parent[v]].push_back(v);
    }
    std::vector<std::string> code(n);
    // Post-order without recursion.
    std::vector<int> order;
    std::vector<int> stack(roots.begin(), roots.end());
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int c : children[v]) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<std::string> parts;
        for (int c : children[*it]) parts.push_back(code[c]);
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (auto& p : parts) s += p;
        s += ")";
        code[*it] = std::move(s);
    }
    std::vector<std::string> parts;
    for (int r : roots) parts.push_back(code[r]);
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& p : parts) out += p;
    return out;
}

std::string unrooted_tree_code(int node_count, const std::vector<std::pair<int, int>>& edges) {
    if (node_count <= 0 || static_cast<int>(edges.size()) != node_count - 1) return {};
    std::vector<std::vector<int>> adj(node_count);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // Peel leaves to find the centre(s).
    std::vector<int> degree(node_count);
    std::vector<int> layer;
    for (int v = 0; v < node_count; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = node_count;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            for (int w : adj[v]) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        if (next.empty()) return {};
        layer = std::move(next);
    }
    std::string best;
    for (int centre : layer) {
        std::vector<int> parent(node_count, -2);
        std::vector<int> stack{centre};
        parent[centre] = -1;
        int reached = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : adj[v]) {
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back(w);
                }
            }
        }
        if (reached != node_count) return {};
        std::string code = rooted_forest_code(parent);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::string nesting_forest(const CellComplex& complex) {
    if (complex.grid().surface == Surface::Sphere) {
        const auto edges = complex.region_tree_edges();
        if (edges.empty() && complex.components() > 0) return {};
        return unrooted_tree_code(static_cast<int>(edges.size()) + 1, edges);
    }
    std::vector<NodalCurve> closed;
    for (auto& curve : complex.curves()) {
        if (curve.closed && curve.points.size() >= 3) closed.push_back(std::move(curve));
    }
    const int n = static_cast<int>(closed.size());
    std::vector<double> area(n);
    for (int i = 0; i < n; ++i) area[i] = polygon_area(closed[i].points);
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        double best = INFINITY;
        for (int j = 0; j < n; ++j) {
            if (i == j || area[j] <= area[i]) continue;
            if (point_in_polygon(closed[i].points.front(), closed[j].points) && area[j] < best) {
                best = area[j];
                parent[i] = j;
            }
        }
    }
    return rooted_forest_code(parent);
}

NodalTopology analyze(const SampledGrid& grid, const AnyField& field) {
    CellComplex complex(grid, field);
    NodalTopology topo;
    topo.surface = grid.surface;
    topo.resolution = grid.resolution();
    const auto doms = complex.domains();
    topo.domains = doms.count;
    topo.domain_signs = doms.signs;
    topo.components = complex.components();
    topo.zero_vertices = complex.zero_vertices();
    topo.unresolved_saddles = complex.unresolved_saddles();
    topo.nonsingular = complex.nonsingular();
    topo.indeterminate_cells = indeterminate_cells(grid);
    topo.open_chains = complex.open_chains();
    topo.nesting = nesting_forest(complex);
    if (grid.surface == Surface::Sphere) {
        try {
            const auto cls = antipodal_classify(complex);
            topo.odd_count = cls.odd_count;
            topo.oval_pairs = cls.oval_pairs;
        } catch (const ExtractionError&) {
            topo.odd_count = -1;
            topo.oval_pairs = -1;
        }
    }
    topo.curves = complex.curves();
    return topo;
}

namespace {

bool same_level(const NodalTopology& a, const NodalTopology& b) {
    return a.components == b.components && a.domains == b.domains && a.nesting == b.nesting &&
           a.odd_count == b.odd_count && a.oval_pairs == b.oval_pairs &&
           a.nonsingular == b.nonsingular && a.indeterminate_cells == 0 && b.indeterminate_cells == 0;
}

SampledGrid sample_any(const AnyField& field, int resolution) {
    return std::visit([resolution](const auto& f) { return sample(f, resolution); }, field);
}

}  // namespace

NodalTopology refine_until_stable(const AnyField& field, const RefineOptions& options) {
    int res = options.start_resolution;
    NodalTopology prev = analyze(sample_any(field, res), field);
    while (res * 2 <= options.max_resolution) {
        res *= 2;
        NodalTopology cur = analyze(sample_any(field, res), field);
        if (same_level(prev, cur)) {
            cur.stable = true;
            if (!options.keep_curves) cur.curves.clear();
            return cur;
        }
        prev = std::move(cur);
    }
    const double cells = std::holds_alternative<SphereField>(field)
                             ? static_cast<double>(res) * res / 2.0
                             : static_cast<double>(res) * res;
    if (prev.indeterminate_cells > 0.01 * cells) {
        throw NonsingularityError("more than 1% of cells are indeterminate at the finest resolution");
    }
    prev.stable = false;
    if (!options.keep_curves) prev.curves.clear();
    return prev;
}

}  // namespace nodal
