#include "nodal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nodal/bounds.hpp"
#include "nodal/combinat.hpp"
#include "nodal/forest.hpp"
#include "nodal/specfun.hpp"

namespace nodal::verify {

Mat3 random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    double q[4];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& c : q) {
            c = normal(rng);
            norm += c * c;
        }
    } while (norm < 1e-6);
    norm = std::sqrt(norm);
    const double w = q[0] / norm, x = q[1] / norm, y = q[2] / norm, z = q[3] / norm;
    return Mat3{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
                 2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
                 2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}};
}

SphericalHarmonicSpec random_harmonic(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> terms(1, 3);
    std::uniform_int_distribution<int> order(0, degree);
    std::bernoulli_distribution coin(0.5);
    std::normal_distribution<double> normal(0.0, 1.0);
    SphericalHarmonicSpec spec{degree, {}};
    const int count = terms(rng);
    for (int i = 0; i < count; ++i) {
        const int m = order(rng);
        // Weights relative to the basis sup norm keep every term visible.
        const double weight = normal(rng) / basis_sup_norm(degree, m);
        spec.terms.push_back({weight, m, coin(rng) ? Phase::Sin : Phase::Cos, random_rotation(rng)});
    }
    spec.validate();
    return spec;
}

int SweepReport::stable_count() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const SweepCase& c) { return c.stable; }));
}

int SweepReport::violation_count() const {
    int total = 0;
    for (const auto& c : cases) total += static_cast<int>(c.violations.size());
    return total;
}

std::vector<std::string> SweepReport::failed_invariants() const {
    std::vector<std::string> names;
    for (const auto& c : cases) {
        for (const auto& v : c.violations) {
            if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
        }
    }
    return names;
}

SweepReport euler_parity_sweep(const SweepOptions& options) {
    if (options.min_degree < 1 || options.max_degree < options.min_degree) throw DomainError("bad sweep degree range");
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> degree(options.min_degree, options.max_degree);
    SweepReport report;
    for (int i = 0; i < options.count; ++i) {
        const int n = degree(rng);
        const SphericalHarmonicSpec spec = random_harmonic(rng, n);
        SphereField field = spec.field();
        if (options.inject_fault) {
            // Flip the sign on a small cap around the largest sample: one extra oval, stable
            // under refinement, breaking the parity of the component count.
            Vec3 peak{0, 0, 1};
            double best = -1.0;
            for (int i = 0; i < 32; ++i) {
                for (int j = 0; j < 64; ++j) {
                    const Vec3 q = sphere_point((i + 0.5) * M_PI / 32, (j + 0.5) * M_PI / 32);
                    if (std::abs(field(q)) > best) {
                        best = std::abs(field(q));
                        peak = q;
                    }
                }
            }
            const double cap = std::cos(0.03);
            field.eval = [inner = field.eval, peak, cap](const Vec3& p) {
                const double v = inner(p);
                return p.x * peak.x + p.y * peak.y + p.z * peak.z > cap ? -v : v;
            };
        }
        SweepCase row;
        row.degree = n;
        RefineOptions refine;
        refine.start_resolution = options.start_resolution;
        refine.max_resolution = options.max_resolution;
        try {
            const NodalTopology topo = refine_until_stable(field, refine);
            row.stable = topo.stable && topo.nonsingular;
            row.components = topo.components;
            row.domains = topo.domains;
        } catch (const NonsingularityError&) {
            row.stable = false;
        }
        if (row.stable) {
            const auto b = bounds::make_report(n, row.components, row.domains);
            if (row.domains != row.components + 1) row.violations.push_back("euler");
            if (!b.parity_ok) row.violations.push_back("parity");
            if (!b.courant_ok) row.violations.push_back("courant");
            if (!b.karpushkin_ok) row.violations.push_back("karpushkin");
        }
        report.cases.push_back(std::move(row));
    }
    return report;
}

Check specfun_check() {
    Check check{"specfun", true, ""};
    std::ostringstream detail;
    for (int n = 0; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (specfun::assoc_normalized(n, k, 1.0) != 1.0) {
                check.passed = false;
                detail << "F_" << n << "^" << k << "(1) != 1; ";
            }
        }
    }
    const auto zeros = specfun::bessel_zeros(specfun::BesselOrder::J1, 50);
    const double gap = zeros.smallest_gap();
    if (!(gap > kBesselGapBound)) {
        check.passed = false;
        detail << "J1 zero gap " << gap << " <= 3; ";
    }
    for (double z : zeros.zeros) {
        if (std::abs(specfun::bessel_j(specfun::BesselOrder::J1, z)) > 1e-9) {
            check.passed = false;
            detail << "J1 not zero at " << z << "; ";
        }
    }
    detail << "smallest J1 gap " << gap;
    check.detail = detail.str();
    return check;
}

Check enumeration_check(int max_n) {
    Check check{"enumeration", true, ""};
    std::ostringstream detail;
    for (int n = 1; n <= max_n; ++n) {
        const auto count = combinat::enumerate_diagrams(n).size();
        detail << count << (n < max_n ? "," : "");
        if (static_cast<long>(count) != combinat::catalan(n)) check.passed = false;
    }
    check.detail = "counts " + detail.str();
    return check;
}

Check gluing_parity_check(int max_n) {
    Check check{"gluing-parity", true, ""};
    int total = 0;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& d : combinat::enumerate_diagrams(n)) {
            ++total;
            const auto glued = combinat::glue_antipodal(d);
            if (glued.components % 2 != n % 2 || glued.domains != glued.components + 1) {
                check.passed = false;
                check.detail += d.to_string() + " has " + std::to_string(glued.components) + " components; ";
            }
        }
    }
    check.detail += std::to_string(total) + " diagrams";
    return check;
}

Check forest_check(std::uint64_t seed, int count, int max_edges) {
    using namespace combinat;
    Check check{"forest", true, ""};
    std::mt19937_64 rng(seed);
    int faces_checked = 0;
    int trees_checked = 0;
    for (int i = 0; i < count; ++i) {
        const EmbeddedForest forest = random_forest(rng, max_edges);
        const auto labels = label_forest(forest);
        for (const auto& face : forest_faces(forest)) {
            Label sum(0);
            for (int e : face.edges) sum += labels[e];
            ++faces_checked;
            if (sum != Label(2 * face.degree())) {
                check.passed = false;
                check.detail += forest.to_string() + ": face sum " + label_to_string(sum) + "; ";
            }
        }
        for (int t = 0; t < forest.tree_count(); ++t) {
            ++trees_checked;
            const auto orientations = tree_orientations(forest, t);
            // Exactly two: both obey the rule and they differ by a global flip.
            bool ok = orientations.size() == 2;
            for (std::size_t e = 0; ok && e < forest.edges.size(); ++e) {
                ok = orientations[0][e] == -orientations[1][e];
            }
            for (const auto& o : orientations) {
                Orientation filled = o;
                // Untouched trees do not affect the rule at this tree's vertices.
                for (std::size_t e = 0; e < filled.size(); ++e) {
                    if (forest.edges[e].tree != t) filled[e] = 1;
                }
                bool rule = true;
                for (int v = 0; v < static_cast<int>(forest.vertices.size()) && rule; ++v) {
                    const auto& vertex = forest.vertices[v];
                    if (vertex.leaf >= 0 || forest.edges[vertex.edges[0]].tree != t) continue;
                    const int deg = static_cast<int>(vertex.edges.size());
                    for (int k = 0; k < deg; ++k) {
                        const int a = vertex.edges[k];
                        const int b = vertex.edges[(k + 1) % deg];
                        const bool out_a = (filled[a] > 0) == (forest.edges[a].parent == v);
                        const bool out_b = (filled[b] > 0) == (forest.edges[b].parent == v);
                        if (out_a == out_b) rule = false;
                    }
                }
                ok = ok && rule;
            }
            if (!ok) {
                check.passed = false;
                check.detail += forest.to_string() + ": tree " + std::to_string(t) + " orientations; ";
            }
        }
        for (bool flip : {false, true}) {
            const auto o = orient_forest(forest, flip);
            if (!satisfies_vertex_rule(forest, o) || !faces_consistent(forest, o)) {
                check.passed = false;
                check.detail += forest.to_string() + ": propagated orientation; ";
            }
        }
    }
    check.detail += std::to_string(count) + " forests, " + std::to_string(faces_checked) + " faces, " +
                    std::to_string(trees_checked) + " trees";
    return check;
}

Check sweep_check(const SweepOptions& options) {
    const SweepReport report = euler_parity_sweep(options);
    Check check{"euler-parity-sweep", report.violation_count() == 0, ""};
    std::ostringstream detail;
    detail << report.stable_count() << "/" << report.cases.size() << " stable, " << report.violation_count()
           << " violations";
    const auto failed = report.failed_invariants();
    if (!failed.empty()) {
        detail << " (";
        for (std::size_t i = 0; i < failed.size(); ++i) detail << (i ? ", " : "") << failed[i];
        detail << ")";
    }
    // A sweep with no certified case proves nothing.
    if (report.stable_count() == 0) check.passed = false;
    check.detail = detail.str();
    return check;
}

std::vector<Check> run_suite(const SuiteOptions& options) {
    SweepOptions sweep;
    sweep.seed = options.seed;
    sweep.inject_fault = options.inject_fault;
    if (options.quick) {
        sweep.count = 20;
        sweep.max_degree = 6;
    }
    std::vector<Check> checks;
    checks.push_back(specfun_check());
    checks.push_back(enumeration_check(options.quick ? 4 : 5));
    checks.push_back(gluing_parity_check(options.quick ? 4 : 5));
    checks.push_back(forest_check(options.seed, options.quick ? 50 : 200));
    checks.push_back(sweep_check(sweep));
    return checks;
}

}  // namespace nodal::verify
