#include "nodal/planar.hpp"

#include "nodal/specfun.hpp"

namespace nodal {

bool ShiftSigns::alternating() const {
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        if (right_signs[k] == 0 || left_signs[k] == 0 || right_signs[k] != -left_signs[k]) return false;
        if (k > 0 && right_signs[k] != -right_signs[k - 1]) return false;
    }
    return true;
}

ShiftSigns shift_signs(const PlanarEigenSpec& spec) {
    spec.validate();
    ShiftSigns out;
    // Zeros up to R; J1 zeros are ~pi apart, so R/3 + 2 of them suffice.
    const int count = std::min(60, static_cast<int>(spec.radius / 3.0) + 2);
    for (double z : specfun::bessel_zeros(specfun::BesselOrder::J1, count).zeros) {
        if (z >= spec.radius) break;
        out.zeros.push_back(z);
        const double r = eval_planar(spec, z, 0.0, PlanarWhich::G);
        const double l = eval_planar(spec, -z, 0.0, PlanarWhich::G);
        out.right_signs.push_back(r > 0 ? 1 : (r < 0 ? -1 : 0));
        out.left_signs.push_back(l > 0 ? 1 : (l < 0 ? -1 : 0));
    }
    return out;
}

NodalTopology planar_topology(const PlanarEigenSpec& spec, PlanarWhich which, const RefineOptions& options) {
    return refine_until_stable(AnyField{spec.field(which)}, options);
}

PlanarResult planar_two_domains(PlanarEigenSpec spec, const PlanarOptions& options) {
    if (!(options.eps_start > 0.0) || !(options.eps_floor > 0.0) || options.eps_floor > options.eps_start) {
        throw DomainError("epsilon schedule needs 0 < floor <= start");
    }
    spec.epsilon = options.eps_start;
    spec.validate();
    PlanarResult result;
    result.signs = shift_signs(spec);
    if (!result.signs.alternating()) result.diagnostics.push_back("g does not alternate at the zeros of J1");

    RefineOptions ro;
    ro.start_resolution = options.start_resolution;
    ro.max_resolution = options.max_resolution;
    auto attempt = [&](double eps, NodalTopology& topo, std::string& why) {
        PlanarEigenSpec s = spec;
        s.epsilon = eps;
        try {
            topo = planar_topology(s, PlanarWhich::H, ro);
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
    for (double eps = options.eps_start; eps >= options.eps_floor; eps /= 2.0) {
        if (!have_current) {
            current_ok = attempt(eps, current, why);
            if (!current_ok) result.diagnostics.push_back("eps " + std::to_string(eps) + ": " + why);
        }
        have_current = false;
        if (!current_ok) continue;
        if (!options.confirm_half_epsilon) {
            spec.epsilon = eps;
            result.topology = current;
            result.found = true;
            break;
        }
        NodalTopology half;
        const bool half_ok = attempt(eps / 2.0, half, why);
        if (half_ok && half.equivalent(current)) {
            spec.epsilon = eps;
            result.topology = current;
            result.found = true;
            break;
        }
        result.diagnostics.push_back("eps " + std::to_string(eps) + ": topology changes at eps/2");
        current = std::move(half);
        current_ok = half_ok;
        have_current = true;
    }
    if (!result.found) result.diagnostics.push_back("epsilon schedule exhausted");
    result.spec = spec;
    return result;
}

}  // namespace nodal
