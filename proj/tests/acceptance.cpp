// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "nodal/combinat.hpp"
#include "nodal/lewy.hpp"
#include "nodal/ovals.hpp"
#include "nodal/planar.hpp"
#include "nodal/specfun.hpp"
#include "nodal/verify.hpp"
#include "oracles.hpp"

using namespace nodal;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool passed = true;
    std::ostringstream detail;
};

Outcome oval_counts() {
    Outcome o;
    struct Case {
        int n;
        long expected;
        bool exact;
    };
    for (const Case c : {Case{7, 13, true}, Case{11, 31, true}, Case{6, 12, true}, Case{10, 30, true},
                         Case{5, 5, false}, Case{9, 17, false}}) {
        const auto t0 = Clock::now();
        OvalsOptions options;
        options.max_resolution = 2048;
        const auto r = ovals_spec(c.n, options);
        const double sec = seconds_since(t0);
        const int got = r.topology.components;
        const bool count_ok = c.exact ? got == c.expected : got >= c.expected;
        const bool ok = r.found && r.topology.stable && count_ok && sec < 180.0 && r.topology.resolution <= 2048;
        o.passed = o.passed && ok;
        o.detail << " n=" << c.n << ":" << got << (c.exact ? "==" : ">=") << c.expected << (ok ? "" : "(x)") << " "
                 << static_cast<int>(sec * 10) / 10.0 << "s;";
    }
    return o;
}

Outcome two_domains() {
    Outcome o;
    for (double radius : {10.0, 15.0, 20.0}) {
        const auto t0 = Clock::now();
        PlanarEigenSpec spec;
        spec.delta1 = 0.5;
        spec.delta2 = 0.25;
        spec.radius = radius;
        const auto r = planar_two_domains(spec);
        const double sec = seconds_since(t0);
        const bool ok = r.found && r.topology.domains == 2 && r.topology.stable && sec < 120.0;
        o.passed = o.passed && ok;
        o.detail << " R=" << radius << ": " << r.topology.domains << " domains at eps=" << r.spec.epsilon << " "
                 << static_cast<int>(sec * 10) / 10.0 << "s;";
    }
    return o;
}

Outcome euler_sweep() {
    Outcome o;
    verify::SweepOptions options;
    options.count = 100;
    options.min_degree = 2;
    options.max_degree = 10;
    const auto report = verify::euler_parity_sweep(options);
    o.passed = report.violation_count() == 0 && report.stable_count() > 0;
    o.detail << " " << report.stable_count() << "/100 stable extractions, " << report.violation_count()
             << " violations";
    return o;
}

Outcome lewy_battery() {
    Outcome o;
    using C = std::complex<double>;
    const std::vector<std::vector<C>> roots{
        {C(1, 0), C(-1, 0)},
        {C(0.5, 0.5), C(-0.5, -0.2)},
        {C(-1, 0), C(0, 0), C(1, 0)},
        {C(0.5, 0.3), C(-0.7, 0.1), C(0.1, -0.8)},
        {C(0.9, 0.2), C(-0.3, 0.7), C(-0.6, -0.5), C(0.2, -0.9)},
    };
    for (const auto& r : roots) {
        const auto coeffs = monic_from_roots(r);
        bool ok = false;
        try {
            const auto res = lewy_pipeline(coeffs);
            ok = res.found && res.matches;
            o.detail << " deg" << r.size() << " " << res.planar.diagram.to_string() << " t=" << res.spec.t
                     << " sphere " << res.topology.components << "/glued " << res.glued.components;
        } catch (const std::exception& e) {
            o.detail << " deg" << r.size() << " error: " << e.what();
        }
        double previous = 1e300;
        for (double t : {0.2, 0.1, 0.05, 0.025}) {
            const double d = lewy_sup_distance(coeffs, t);
            ok = ok && d < previous;
            previous = d;
        }
        o.detail << (ok ? ";" : "(x);");
        o.passed = o.passed && ok;
    }
    return o;
}

Outcome combinatorics() {
    Outcome o;
    const long expected[] = {1, 2, 5, 14, 42};
    o.detail << " counts";
    for (int n = 1; n <= 5; ++n) {
        const auto count = static_cast<long>(combinat::enumerate_diagrams(n).size());
        o.detail << " " << count;
        o.passed = o.passed && count == expected[n - 1];
    }
    bool parity = true;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& d : combinat::enumerate_diagrams(n)) {
            parity = parity && combinat::glue_antipodal(d).components % 2 == n % 2;
        }
    }
    o.detail << "; parity " << (parity ? "ok" : "broken");
    o.passed = o.passed && parity;
    for (int n : {3, 4}) {
        int found = 0;
        long trials = 0;
        const auto diagrams = combinat::enumerate_diagrams(n);
        for (const auto& d : diagrams) {
            combinat::SearchOptions options;
            options.seed = 7;
            options.budget = n == 3 ? 10000 : 100000;
            const auto r = combinat::realize_diagram_search(d, options);
            found += r.found;
            trials += r.trials;
        }
        o.detail << "; n=" << n << " realized " << found << "/" << diagrams.size() << " in " << trials << " trials";
        o.passed = o.passed && found == static_cast<int>(diagrams.size());
    }
    return o;
}

Outcome forests() {
    Outcome o;
    const auto check = verify::forest_check(2024, 200, 20);
    o.passed = check.passed;
    o.detail << " " << check.detail;
    return o;
}

Outcome special_functions() {
    Outcome o;
    int ones = 0;
    for (int n = 0; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) ones += specfun::assoc_normalized(n, k, 1.0) == 1.0;
    }
    o.passed = ones == 231;
    const double gap = specfun::bessel_zeros(specfun::BesselOrder::J1, 50).smallest_gap();
    o.passed = o.passed && gap > 3.0;
    double worst = 0.0;
    for (int i = 0; i <= 5000; ++i) {
        const double x = 0.01 * i;
        worst = std::max(worst, std::abs(specfun::bessel_j(0, x) - oracle::bessel_series(0, x)));
        worst = std::max(worst, std::abs(specfun::bessel_j(1, x) - oracle::bessel_series(1, x)));
    }
    o.passed = o.passed && worst < 1e-10;
    o.detail << " F(1)=1 for " << ones << "/231; smallest J1 gap " << gap << "; max Bessel error " << worst;
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"oval counts", oval_counts},
        {"two nodal domains", two_domains},
        {"Euler and parity sweep", euler_sweep},
        {"Lewy lift pipeline", lewy_battery},
        {"combinatorics", combinatorics},
        {"forest labeling", forests},
        {"special functions", special_functions},
    };
    int failures = 0;
    int index = 1;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.passed = false;
            outcome.detail << " exception: " << e.what();
        }
        failures += !outcome.passed;
        std::printf("criterion %d (%s): %s |%s [%.1fs]\n", index++, c.name, outcome.passed ? "PASS" : "FAIL",
                    outcome.detail.str().c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
