#include "nodal/ovals.hpp"

#include <cmath>
#include <sstream>

#include "nodal/specfun.hpp"

namespace nodal {

OvalGeometry oval_geometry(int n) {
    if (n < 3 || n > specfun::kMaxDegree) throw DomainError("oval construction needs 3 <= n <= 64");
    OvalGeometry g;
    g.degree = n;
    if (n % 4 == 3) {
        g.kind = OvalCase::OddThreeMod4;
        g.index = (n - 3) / 4;
        g.base_order = 2 * g.index + 1;
        g.perturb_order = 4 * g.index + 2;
    } else if (n % 4 == 1) {
        g.kind = OvalCase::OddOneMod4;
        g.index = (n - 1) / 4;
        g.base_order = 2 * g.index;
        g.perturb_order = 4 * g.index;
    } else {
        g.kind = OvalCase::Even;
        g.index = n / 2;
        g.base_order = g.index;
        g.perturb_order = n;
    }
    g.psi_limit = M_PI / g.perturb_order;
    return g;
}

const char* to_string(CrossingLabel label) {
    switch (label) {
        case CrossingLabel::Upper: return "upper";
        case CrossingLabel::Lower: return "lower";
        case CrossingLabel::Equator: return "equator";
        case CrossingLabel::NorthPole: return "north";
        case CrossingLabel::SouthPole: return "south";
    }
    return "?";
}

const char* to_string(SignStatus status) {
    switch (status) {
        case SignStatus::Pass: return "pass";
        case SignStatus::SignMismatch: return "sign-mismatch";
        case SignStatus::Degenerate: return "degenerate";
    }
    return "?";
}

std::vector<Crossing> sphere_crossings(int n) {
    const OvalGeometry g = oval_geometry(n);
    const int m = g.base_order;
    const int meridians = 2 * m;  // half-meridians phi = pi j / m
    const auto parallels = specfun::assoc_zeros(n, m);
    std::vector<Crossing> out;
    for (double theta : parallels) {
        for (int j = 0; j < meridians; ++j) out.push_back({theta, M_PI * j / m, CrossingLabel::Upper});
    }
    for (auto it = parallels.rbegin(); it != parallels.rend(); ++it) {
        for (int j = 0; j < meridians; ++j) out.push_back({M_PI - *it, M_PI * j / m, CrossingLabel::Lower});
    }
    // F_n^m vanishes at 0 exactly when n - m is odd.
    if ((n - m) % 2 == 1) {
        for (int j = 0; j < meridians; ++j) out.push_back({M_PI / 2, M_PI * j / m, CrossingLabel::Equator});
    }
    out.push_back({0.0, 0.0, CrossingLabel::NorthPole});
    out.push_back({M_PI, 0.0, CrossingLabel::SouthPole});
    return out;
}

SignReport verify_perturber_signs(const SphericalHarmonicSpec& spec, const std::vector<Crossing>& crossings) {
    SignReport report;
    if (spec.terms.size() < 2) {
        report.status = SignStatus::Degenerate;
        report.detail = "no perturbing term";
        return report;
    }
    const OvalGeometry g = oval_geometry(spec.degree);
    HarmonicTerm term = spec.terms.back();
    term.weight = 1.0;
    const SphericalHarmonicSpec perturber{spec.degree, {term}};
    const int order = term.order;

    // Pole values scale like sin^M of the angle between the pole and the rotated axis.
    auto pole_scale = [&](const Vec3& p) {
        const Vec3 q = term.rotation.apply(p);
        return std::pow(std::hypot(q.x, q.y), order);
    };

    int constant_sign = 0;
    for (const auto& c : crossings) {
        const Vec3 p = c.label == CrossingLabel::NorthPole   ? Vec3{0, 0, 1}
                       : c.label == CrossingLabel::SouthPole ? Vec3{0, 0, -1}
                                                             : sphere_point(c.theta, c.phi);
        const double v = eval_sph(perturber, p);
        report.values.push_back(v);
        ++report.checked;
        const bool pole = c.label == CrossingLabel::NorthPole || c.label == CrossingLabel::SouthPole;
        const double floor = pole ? 1e-12 * pole_scale(p) : 1e-12;
        if (std::abs(v) <= floor || v == 0.0) {
            if (report.status != SignStatus::Degenerate) {
                std::ostringstream os;
                os << "perturber vanishes at " << to_string(c.label) << " crossing theta=" << c.theta
                   << " phi=" << c.phi;
                report.detail = os.str();
            }
            report.status = SignStatus::Degenerate;
            continue;
        }
        const int sign = v > 0 ? 1 : -1;
        int want = 0;
        if (g.kind == OvalCase::Even) {
            if (constant_sign == 0) constant_sign = sign;
            want = constant_sign;
        } else {
            switch (c.label) {
                case CrossingLabel::Upper: want = -1; break;
                case CrossingLabel::Lower: want = 1; break;
                case CrossingLabel::NorthPole: want = -1; break;
                case CrossingLabel::SouthPole: want = 1; break;
                case CrossingLabel::Equator: {
                    const double phi = std::fmod(c.phi, 2 * M_PI);
                    want = (phi > 0.0 && phi <= M_PI + 1e-12) ? 1 : -1;
                    break;
                }
            }
        }
        if (sign != want) {
            ++report.mismatches;
            if (report.status == SignStatus::Pass) {
                report.status = SignStatus::SignMismatch;
                std::ostringstream os;
                os << "wrong sign at " << to_string(c.label) << " crossing theta=" << c.theta << " phi=" << c.phi;
                report.detail = os.str();
            }
        }
    }
    return report;
}

SphericalHarmonicSpec oval_harmonic(const OvalGeometry& geometry, double epsilon, const Mat3& rotation) {
    SphericalHarmonicSpec spec;
    spec.degree = geometry.degree;
    spec.terms.push_back(HarmonicTerm{1.0, geometry.base_order, Phase::Sin, Mat3::identity()});
    // epsilon is relative: the perturber is rescaled to the base harmonic's sup norm.
    const double scale = basis_sup_norm(geometry.degree, geometry.base_order) /
                         basis_sup_norm(geometry.degree, geometry.perturb_order);
    spec.terms.push_back(HarmonicTerm{epsilon * scale, geometry.perturb_order, Phase::Sin, rotation});
    spec.validate();
    return spec;
}

namespace {

bool try_refine(const SphericalHarmonicSpec& spec, const OvalsOptions& options, NodalTopology& out,
                std::string& why) {
    RefineOptions ro;
    ro.start_resolution = options.start_resolution;
    ro.max_resolution = options.max_resolution;
    try {
        out = refine_until_stable(AnyField{spec.field()}, ro);
    } catch (const std::exception& e) {
        why = e.what();
        return false;
    }
    if (!out.stable) {
        why = "not stable under refinement";
        return false;
    }
    if (!out.nonsingular) {
        why = "nodal set not resolved as nonsingular";
        return false;
    }
    return true;
}

}  // namespace

OvalsResult ovals_spec(int n, const OvalsOptions& options) {
    if (!(options.eps_start > 0.0) || !(options.eps_floor > 0.0) || options.eps_floor > options.eps_start) {
        throw DomainError("epsilon schedule needs 0 < floor <= start");
    }
    if (!(options.tilt > 0.0) || options.tilt_attempts < 1) throw DomainError("tilt schedule must be positive");
    OvalsResult result;
    result.geometry = oval_geometry(n);
    result.prediction = bounds::predicted_ovals(n);
    result.crossings = sphere_crossings(n);
    result.psi = result.geometry.psi_midpoint();

    const int M = result.geometry.perturb_order;
    const int azimuths = 8 * M;
    bool rotation_ok = false;
    double tilt = options.tilt;
    Mat3 rotation;
    for (int attempt = 0; attempt < options.tilt_attempts && !rotation_ok; ++attempt, tilt /= 10.0) {
        for (int j = 0; j < azimuths; ++j) {
            const double beta = 2.0 * M_PI * j / azimuths;
            rotation = Mat3::about_z(result.psi) * Mat3::about_horizontal(beta, tilt);
            result.signs = verify_perturber_signs(oval_harmonic(result.geometry, 1.0, rotation), result.crossings);
            if (result.signs.passed()) {
                result.tilt = tilt;
                result.azimuth = beta;
                rotation_ok = true;
                break;
            }
        }
        if (!rotation_ok) {
            result.diagnostics.push_back("tilt " + std::to_string(tilt) + ": " + result.signs.detail);
        }
    }
    if (!rotation_ok) {
        result.diagnostics.push_back("no rotation satisfies the perturber sign conditions");
        result.spec = oval_harmonic(result.geometry, options.eps_start, rotation);
        return result;
    }

    NodalTopology current;
    std::string why;
    bool current_ok = false;
    bool have_current = false;
    for (double eps = options.eps_start; eps >= options.eps_floor; eps /= 2.0) {
        if (!have_current) {
            current_ok = try_refine(oval_harmonic(result.geometry, eps, rotation), options, current, why);
            if (!current_ok) result.diagnostics.push_back("eps " + std::to_string(eps) + ": " + why);
        }
        have_current = false;
        if (!current_ok) continue;
        if (!options.confirm_half_epsilon) {
            result.epsilon = eps;
            result.topology = current;
            result.found = true;
            break;
        }
        NodalTopology half;
        const bool half_ok = try_refine(oval_harmonic(result.geometry, eps / 2.0, rotation), options, half, why);
        if (half_ok && half.equivalent(current, true)) {
            result.epsilon = eps;
            result.topology = current;
            result.found = true;
            break;
        }
        result.diagnostics.push_back("eps " + std::to_string(eps) + ": topology changes at eps/2" +
                                     (half_ok ? "" : " (" + why + ")"));
        current = std::move(half);
        current_ok = half_ok;
        have_current = true;
    }
    result.spec = oval_harmonic(result.geometry, result.found ? result.epsilon : options.eps_floor, rotation);
    if (!result.found) result.diagnostics.push_back("epsilon schedule exhausted");
    return result;
}

}  // namespace nodal
