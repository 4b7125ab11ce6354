#include "nodal/combinat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <unsupported/Eigen/Polynomials>

namespace nodal::combinat {

long catalan(int n) {
    if (n < 0) throw DomainError("catalan needs n >= 0");
    long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

void ChordDiagram::validate() const {
    if (n < 1) throw DomainError("chord diagram needs n >= 1");
    const int points = 2 * n;
    if (static_cast<int>(match.size()) != points) throw DomainError("matching must cover 2n points");
    for (int i = 0; i < points; ++i) {
        const int j = match[i];
        if (j < 0 || j >= points || j == i || match[j] != i) throw DomainError("matching is not a perfect involution");
    }
    for (int a = 0; a < points; ++a) {
        const int b = match[a];
        if (b < a) continue;
        for (int c = a + 1; c < b; ++c) {
            const int d = match[c];
            if (d < a || d > b) throw DomainError("chords cross");
        }
    }
}

std::string ChordDiagram::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(match.size()); ++i) {
        if (match[i] < i) continue;
        if (!first) os << ',';
        os << i << '-' << match[i];
        first = false;
    }
    return os.str();
}

ChordDiagram ChordDiagram::parse(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                    token.end());
        if (token.empty()) continue;
        const auto dash = token.find('-');
        if (dash == std::string::npos) throw DomainError("chord '" + token + "' is not of the form i-j");
        try {
            pairs.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
        } catch (const std::exception&) {
            throw DomainError("chord '" + token + "' is not of the form i-j");
        }
    }
    ChordDiagram d;
    d.n = static_cast<int>(pairs.size());
    d.match.assign(2 * d.n, -1);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= 2 * d.n || b >= 2 * d.n || d.match[a] != -1 || d.match[b] != -1) {
            throw DomainError("chord endpoints must be distinct points in [0, 2n)");
        }
        d.match[a] = b;
        d.match[b] = a;
    }
    d.validate();
    return d;
}

ChordDiagram ChordDiagram::rotation_canonical() const {
    const int points = 2 * n;
    ChordDiagram best = *this;
    for (int r = 1; r < points; ++r) {
        ChordDiagram rot{n, std::vector<int>(points)};
        for (int i = 0; i < points; ++i) rot.match[(i + r) % points] = (match[i] + r) % points;
        if (rot.match < best.match) best = rot;
    }
    return best;
}

std::vector<ChordDiagram> enumerate_diagrams(int n) {
    if (n < 1 || n > 8) throw DomainError("diagram enumeration supports 1 <= n <= 8");
    // Point 0 pairs with an odd point j; the inside and outside arcs are matched independently.
    std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> rec = [&](int lo, int hi) {
        std::vector<std::vector<std::pair<int, int>>> result;
        if (lo > hi) {
            result.emplace_back();
            return result;
        }
        for (int j = lo + 1; j <= hi; j += 2) {
            const auto inside = rec(lo + 1, j - 1);
            const auto outside = rec(j + 1, hi);
            for (const auto& in : inside) {
                for (const auto& outer : outside) {
                    std::vector<std::pair<int, int>> chords{{lo, j}};
                    chords.insert(chords.end(), in.begin(), in.end());
                    chords.insert(chords.end(), outer.begin(), outer.end());
                    result.push_back(std::move(chords));
                }
            }
        }
        return result;
    };
    std::vector<ChordDiagram> out;
    for (const auto& chords : rec(0, 2 * n - 1)) {
        ChordDiagram d{n, std::vector<int>(2 * n)};
        for (auto [a, b] : chords) {
            d.match[a] = b;
            d.match[b] = a;
        }
        out.push_back(std::move(d));
    }
    return out;
}

GluedCurveSystem glue_antipodal(const ChordDiagram& diagram) {
    diagram.validate();
    const int n = diagram.n;
    const int points = 2 * n;
    const auto& D = diagram.match;
    std::vector<int> Dp(points);
    for (int i = 0; i < points; ++i) Dp[i] = (D[(i - n + points) % points] + n) % points;

    GluedCurveSystem out;
    std::vector<int> curve(points, -1);
    for (int start = 0; start < points; ++start) {
        if (curve[start] >= 0) continue;
        const int id = out.components++;
        int length = 0;
        int p = start;
        bool upper = true;
        // Alternate upper and lower chords until the walk closes at `start` after a lower chord.
        do {
            curve[p] = id;
            p = upper ? D[p] : Dp[p];
            curve[p] = id;
            ++length;
            upper = !upper;
        } while (!(p == start && upper));
        out.lengths.push_back(length);
    }
    for (int c = 0; c < out.components; ++c) {
        for (int i = 0; i < n; ++i) {
            if (curve[i] == c && curve[i + n] == c) {
                ++out.odd_count;
                break;
            }
        }
    }
    out.oval_pairs = (out.components - out.odd_count) / 2;

    // Boundary arc j joins points j and j+1; the equator arcs are shared by both hemispheres.
    std::vector<int> parent(points);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int j = 0; j < points; ++j) {
        parent[find(j)] = find(D[(j + 1) % points]);
        parent[find(j)] = find(Dp[(j + 1) % points]);
    }
    std::map<int, int> domain_index;
    for (int j = 0; j < points; ++j) domain_index.emplace(find(j), static_cast<int>(domain_index.size()));
    out.domains = static_cast<int>(domain_index.size());
    std::map<int, std::pair<int, int>> sides;
    for (int i = 0; i < points; ++i) {
        const int before = domain_index.at(find((i - 1 + points) % points));
        const int after = domain_index.at(find(i));
        sides.emplace(curve[i], std::minmax(before, after));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [c, p] : sides) edges.push_back(p);
    out.region_tree = unrooted_tree_code(out.domains, edges);
    return out;
}

std::complex<double> eval_monic(const MonicCoefficients& coefficients, std::complex<double> z) {
    std::complex<double> acc(1.0, 0.0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

// sum |a_k| R^{k-n}; below 1/2 every circle |z| >= R meets {Re p = 0} in exactly 2n points.
double tail_ratio(const MonicCoefficients& a, double radius) {
    const int n = static_cast<int>(a.size());
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += std::abs(a[k]) * std::pow(radius, k - n);
    return s;
}

int crossing_label(const MonicCoefficients& a, const std::array<double, 2>& point) {
    const int n = static_cast<int>(a.size());
    const std::complex<double> z(point[0], point[1]);
    const std::complex<double> w = eval_monic(a, z) / std::pow(z, n);
    const double phase = n * std::atan2(point[1], point[0]) + std::arg(w);
    const long j = std::lround((phase - M_PI / 2) / M_PI);
    return static_cast<int>(((j % (2 * n)) + 2 * n) % (2 * n));
}

}  // namespace

PlanarZeroResult planar_zero_topology(const MonicCoefficients& coefficients, const PlanarZeroOptions& options) {
    const int n = static_cast<int>(coefficients.size());
    if (n < 1 || n > 8) throw DomainError("planar zero topology supports degree 1..8");
    double base = 1.0;
    while (tail_ratio(coefficients, base) > 0.5) base *= 1.25;
    base *= 1.5;  // chain ends sit a few cells inside the window edge

    RefineOptions ro;
    ro.start_resolution = options.start_resolution;
    ro.max_resolution = options.max_resolution;
    ro.keep_curves = true;
    std::string last_problem;
    for (int growth = 1; growth <= options.max_growth; growth *= 2) {
        const double window = base * growth;
        DiscField field{[coefficients](double x, double y) { return eval_monic(coefficients, {x, y}).real(); },
                        window};
        NodalTopology topo = refine_until_stable(AnyField{field}, ro);
        if (!topo.nonsingular) throw NonsingularityError("zero set of Re p is singular on the sampling window");
        ChordDiagram d{n, std::vector<int>(2 * n, -1)};
        bool ok = true;
        int chains = 0;
        for (const auto& c : topo.curves) {
            if (c.closed) {
                ok = false;
                last_problem = "closed zero curve";
                break;
            }
            ++chains;
            const int a = crossing_label(coefficients, c.points.front());
            const int b = crossing_label(coefficients, c.points.back());
            if (a == b || d.match[a] != -1 || d.match[b] != -1) {
                ok = false;
                last_problem = "boundary crossings do not label uniquely";
                break;
            }
            d.match[a] = b;
            d.match[b] = a;
        }
        if (ok && chains != n) {
            ok = false;
            last_problem = "found " + std::to_string(2 * chains) + " boundary crossings, expected " + std::to_string(2 * n);
        }
        if (!ok) continue;
        d.validate();
        topo.curves.clear();
        return {d, window, topo};
    }
    throw ExtractionError("planar zero set extraction failed: " + last_problem);
}

namespace {

std::complex<double> random_in_disc(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    const double a = 2.0 * M_PI * u(rng);
    return std::polar(r, a);
}

std::vector<std::complex<double>> roots_of(const MonicCoefficients& a) {
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 1> poly(a.size() + 1);
    for (std::size_t k = 0; k < a.size(); ++k) poly[k] = a[k];
    poly[a.size()] = 1.0;
    Eigen::PolynomialSolver<std::complex<double>, Eigen::Dynamic> solver(poly);
    const auto& r = solver.roots();
    return {r.data(), r.data() + r.size()};
}

int mismatch(const ChordDiagram& target, const std::vector<std::complex<double>>& roots,
             const PlanarZeroOptions& options) {
    try {
        const auto result = planar_zero_topology(monic_from_roots(roots), options);
        int bad = 0;
        for (int i = 0; i < 2 * target.n; ++i) bad += result.diagram.match[i] != target.match[i];
        return bad;
    } catch (const std::exception&) {
        return 2 * target.n + 1;
    }
}

}  // namespace

SearchResult realize_diagram_search(const ChordDiagram& target, const SearchOptions& options) {
    target.validate();
    if (target.n > 5) throw DomainError("realization search supports n <= 5");
    if (options.budget < 1) throw DomainError("search budget must be positive");
    SearchResult result;
    result.target = target;
    result.seed = options.seed;
    result.best_mismatch = 2 * target.n + 1;
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = target.n;

    auto record = [&](const std::vector<std::complex<double>>& roots, int score) {
        if (score < result.best_mismatch) {
            result.best_mismatch = score;
            result.roots = roots;
        }
    };

    while (result.trials < options.budget && result.best_mismatch > 0) {
        std::vector<std::complex<double>> current(n);
        for (auto& r : current) r = random_in_disc(rng, options.root_radius);
        int score = mismatch(target, current, options.extraction);
        ++result.trials;
        record(current, score);
        int stale = 0;
        while (score > 0 && stale < options.restart_after && result.trials < options.budget) {
            std::vector<std::complex<double>> proposal = current;
            const int k = static_cast<int>(rng() % n);
            const double move = u(rng);
            if (move < 0.6) {
                std::complex<double> centroid = std::accumulate(current.begin(), current.end(), std::complex<double>{}) /
                                                static_cast<double>(n);
                double spread = 0.0;
                for (auto r : current) spread = std::max(spread, std::abs(r - centroid));
                const double sigma = 0.1 * std::max(spread, 0.1);
                proposal[k] += std::complex<double>(sigma * gauss(rng), sigma * gauss(rng));
            } else if (move < 0.85) {
                proposal[k] = random_in_disc(rng, options.root_radius);
            } else {
                MonicCoefficients a = monic_from_roots(current);
                const double sigma = 0.1 * (1.0 + std::abs(a[k]));
                a[k] += std::complex<double>(sigma * gauss(rng), sigma * gauss(rng));
                proposal = roots_of(a);
            }
            const int next = mismatch(target, proposal, options.extraction);
            ++result.trials;
            record(proposal, next);
            if (next < score) {
                current = std::move(proposal);
                score = next;
                stale = 0;
            } else {
                ++stale;
            }
        }
    }
    result.found = result.best_mismatch == 0;
    if (!result.roots.empty()) {
        result.coefficients = monic_from_roots(result.roots);
        result.best = ChordDiagram{n, std::vector<int>(2 * n, -1)};
        try {
            result.best = planar_zero_topology(result.coefficients, options.extraction).diagram;
        } catch (const std::exception&) {
        }
        result.lift = LewyLiftSpec{n, result.coefficients, 0.1};
    }
    return result;
}

}  // namespace nodal::combinat
