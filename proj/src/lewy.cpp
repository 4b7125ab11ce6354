#include "nodal/lewy.hpp"

#include <cmath>

namespace nodal {

double lewy_sup_distance(const combinat::MonicCoefficients& coefficients, double t, double radius,
                         int radial_samples, int angular_samples) {
    const LewyLiftSpec spec{static_cast<int>(coefficients.size()), coefficients, t};
    double sup = 0.0;
    for (int i = 0; i <= radial_samples; ++i) {
        const double r = radius * i / radial_samples;
        for (int j = 0; j < angular_samples; ++j) {
            const std::complex<double> z = std::polar(r, 2.0 * M_PI * j / angular_samples);
            sup = std::max(sup, std::abs(rescaled_lewy(spec, z) - combinat::eval_monic(coefficients, z).real()));
        }
    }
    return sup;
}

LewyResult lewy_pipeline(const combinat::MonicCoefficients& coefficients, const LewyOptions& options) {
    if (!(options.t_start > 0.0) || !(options.t_floor > 0.0) || options.t_floor > options.t_start) {
        throw DomainError("t schedule needs 0 < floor <= start");
    }
    LewyResult result;
    result.planar = combinat::planar_zero_topology(coefficients, options.planar);
    result.glued = combinat::glue_antipodal(result.planar.diagram);
    const int n = static_cast<int>(coefficients.size());

    RefineOptions ro;
    ro.start_resolution = options.start_resolution;
    ro.max_resolution = options.max_resolution;
    auto attempt = [&](double t, NodalTopology& topo, std::string& why) {
        try {
            topo = refine_until_stable(AnyField{LewyLiftSpec{n, coefficients, t}.field()}, ro);
        } catch (const std::exception& e) {
            why = e.what();
            return false;
        }
        if (!topo.stable || !topo.nonsingular) {
            why = topo.stable ? "singular extraction" : "not stable under refinement";
            return false;
        }
        return true;
    };

    NodalTopology current;
    std::string why;
    bool current_ok = false;
    bool have_current = false;
    double t = options.t_start;
    for (; t >= options.t_floor; t /= 2.0) {
        if (!have_current) {
            current_ok = attempt(t, current, why);
            if (!current_ok) result.diagnostics.push_back("t " + std::to_string(t) + ": " + why);
        }
        have_current = false;
        if (!current_ok) continue;
        NodalTopology half;
        const bool half_ok = attempt(t / 2.0, half, why);
        if (half_ok && half.equivalent(current, true)) {
            result.found = true;
            result.topology = current;
            break;
        }
        result.diagnostics.push_back("t " + std::to_string(t) + ": topology changes at t/2");
        current = std::move(half);
        current_ok = half_ok;
        have_current = true;
    }
    result.spec = LewyLiftSpec{n, coefficients, result.found ? t : options.t_floor};
    if (!result.found) {
        result.diagnostics.push_back("t schedule exhausted");
        return result;
    }
    const auto& g = result.glued;
    result.matches = result.topology.components == g.components && result.topology.domains == g.domains &&
                     result.topology.nesting == g.region_tree && result.topology.odd_count == g.odd_count;
    return result;
}

}  // namespace nodal
