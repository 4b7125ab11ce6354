#include "nodal/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nodal::io {

namespace {

const char* phase_name(Phase p) { return p == Phase::Sin ? "sin" : "cos"; }

Phase phase_from(const std::string& s) {
    if (s == "sin") return Phase::Sin;
    if (s == "cos") return Phase::Cos;
    throw DomainError("unknown phase '" + s + "'");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

json to_json(const SphericalHarmonicSpec& spec) {
    json terms = json::array();
    for (const auto& t : spec.terms) {
        terms.push_back({{"weight", t.weight},
                         {"order", t.order},
                         {"phase", phase_name(t.phase)},
                         {"rotation", std::vector<double>(t.rotation.m.begin(), t.rotation.m.end())}});
    }
    return {{"kind", "spherical"}, {"degree", spec.degree}, {"terms", terms}};
}

json to_json(const LewyLiftSpec& spec) {
    json coeffs = json::array();
    for (const auto& c : spec.coefficients) coeffs.push_back({c.real(), c.imag()});
    return {{"kind", "lewy"}, {"degree", spec.degree}, {"t", spec.t}, {"coefficients", coeffs}};
}

json to_json(const PlanarEigenSpec& spec) {
    return {{"kind", "planar"},
            {"delta1", spec.delta1},
            {"delta2", spec.delta2},
            {"epsilon", spec.epsilon},
            {"radius", spec.radius}};
}

SphericalHarmonicSpec spherical_spec_from_json(const json& j) {
    try {
        if (j.at("kind") != "spherical") throw DomainError("not a spherical harmonic spec");
        SphericalHarmonicSpec spec;
        spec.degree = j.at("degree").get<int>();
        for (const auto& t : j.at("terms")) {
            HarmonicTerm term;
            term.weight = t.at("weight").get<double>();
            term.order = t.at("order").get<int>();
            term.phase = phase_from(t.at("phase").get<std::string>());
            const auto r = t.at("rotation").get<std::vector<double>>();
            if (r.size() != 9) throw DomainError("rotation needs 9 entries");
            std::copy(r.begin(), r.end(), term.rotation.m.begin());
            spec.terms.push_back(term);
        }
        spec.validate();
        return spec;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed spec: ") + e.what());
    }
}

LewyLiftSpec lewy_spec_from_json(const json& j) {
    try {
        if (j.at("kind") != "lewy") throw DomainError("not a Lewy lift spec");
        LewyLiftSpec spec;
        spec.degree = j.at("degree").get<int>();
        spec.t = j.at("t").get<double>();
        for (const auto& c : j.at("coefficients")) {
            spec.coefficients.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
        }
        spec.validate();
        return spec;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed spec: ") + e.what());
    }
}

PlanarEigenSpec planar_spec_from_json(const json& j) {
    try {
        if (j.at("kind") != "planar") throw DomainError("not a planar spec");
        PlanarEigenSpec spec;
        spec.delta1 = j.at("delta1").get<double>();
        spec.delta2 = j.at("delta2").get<double>();
        spec.epsilon = j.at("epsilon").get<double>();
        spec.radius = j.at("radius").get<double>();
        spec.validate();
        return spec;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed spec: ") + e.what());
    }
}

json to_json(const NodalTopology& t) {
    return {{"surface", t.surface == Surface::Sphere ? "sphere" : "disc"},
            {"resolution", t.resolution},
            {"components", t.components},
            {"domains", t.domains},
            {"domain_signs", t.domain_signs},
            {"odd_count", t.odd_count},
            {"oval_pairs", t.oval_pairs},
            {"nesting", t.nesting},
            {"stable", t.stable},
            {"nonsingular", t.nonsingular},
            {"zero_vertices", t.zero_vertices},
            {"unresolved_saddles", t.unresolved_saddles},
            {"indeterminate_cells", t.indeterminate_cells},
            {"open_chains", t.open_chains}};
}

json to_json(const bounds::BoundReport& r) {
    return {{"degree", r.degree},
            {"components", r.components},
            {"domains", r.domains},
            {"courant", r.courant},
            {"karpushkin", r.karpushkin},
            {"pleijel_estimate", r.pleijel_estimate},
            {"lewy_lower", r.lewy_lower},
            {"parity_ok", r.parity_ok},
            {"courant_ok", r.courant_ok},
            {"karpushkin_ok", r.karpushkin_ok}};
}

json to_json(const combinat::GluedCurveSystem& g) {
    return {{"components", g.components},
            {"domains", g.domains},
            {"odd_count", g.odd_count},
            {"oval_pairs", g.oval_pairs},
            {"lengths", g.lengths},
            {"region_tree", g.region_tree}};
}

combinat::MonicCoefficients parse_polynomial(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::complex<double>> coeffs;
    std::vector<std::complex<double>> roots;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key)) continue;
        double re = 0.0, im = 0.0;
        std::string extra;
        if (!(fields >> re >> im) || (fields >> extra)) {
            throw DomainError("polynomial line " + std::to_string(line_no) + ": expected KEY RE IM");
        }
        if (key == "coeff") coeffs.emplace_back(re, im);
        else if (key == "root") roots.emplace_back(re, im);
        else throw DomainError("polynomial line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!coeffs.empty() && !roots.empty()) throw DomainError("polynomial file mixes coeff and root lines");
    if (coeffs.empty() && roots.empty()) throw DomainError("polynomial file is empty");
    auto out = roots.empty() ? coeffs : monic_from_roots(roots);
    if (out.size() > 8) throw DomainError("polynomial degree above 8");
    return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

constexpr int kStrideCap = 4000;

template <typename Map>
void polylines(std::ostringstream& svg, const std::vector<NodalCurve>& curves, Map map, double wrap,
               const std::string& style) {
    for (const auto& curve : curves) {
        if (curve.points.empty()) continue;
        const std::size_t stride = std::max<std::size_t>(1, curve.points.size() / kStrideCap);
        std::vector<std::array<double, 2>> pts;
        for (std::size_t i = 0; i < curve.points.size(); i += stride) pts.push_back(map(curve.points[i]));
        if (curve.closed) pts.push_back(map(curve.points.front()));
        // Split where the map wraps around (phi seam).
        std::size_t start = 0;
        for (std::size_t i = 1; i <= pts.size(); ++i) {
            const bool cut = i == pts.size() || (wrap > 0 && std::abs(pts[i][0] - pts[i - 1][0]) > wrap);
            if (!cut) continue;
            if (i - start >= 2) {
                svg << "<polyline " << style << " points=\"";
                for (std::size_t k = start; k < i; ++k) svg << (k > start ? " " : "") << fmt(pts[k][0]) << ',' << fmt(pts[k][1]);
                svg << "\"/>\n";
            }
            start = i;
        }
    }
}

const char* crossing_colour(CrossingLabel label) {
    switch (label) {
        case CrossingLabel::Upper: return "#d62728";
        case CrossingLabel::Lower: return "#1f77b4";
        case CrossingLabel::Equator: return "#2ca02c";
        default: return "#9467bd";
    }
}

}  // namespace

std::string sphere_svg(const SphereField& field, const std::vector<NodalCurve>& curves,
                       const std::vector<Crossing>& crossings, const std::string& title) {
    constexpr double W = 720.0, H = 360.0, top = 30.0;
    constexpr int tint_cols = 144, tint_rows = 72;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H + 70
        << "\" viewBox=\"0 0 " << W << ' ' << H + 70 << "\">\n";
    svg << "<text x=\"4\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << escape(title) << "</text>\n";
    svg << "<g transform=\"translate(0," << top << ")\">\n";
    const double cw = W / tint_cols, ch = H / tint_rows;
    for (int i = 0; i < tint_rows; ++i) {
        const double theta = (i + 0.5) * M_PI / tint_rows;
        for (int j = 0; j < tint_cols; ++j) {
            const double phi = (j + 0.5) * 2.0 * M_PI / tint_cols;
            const double v = field(sphere_point(theta, phi));
            const char* fill = v > 0 ? "#fde0dc" : v < 0 ? "#dce9fd" : "#ffffff";
            svg << "<rect x=\"" << fmt(j * cw) << "\" y=\"" << fmt(i * ch) << "\" width=\"" << fmt(cw + 0.05)
                << "\" height=\"" << fmt(ch + 0.05) << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    auto map = [&](const std::array<double, 2>& p) {
        return std::array<double, 2>{p[1] / (2.0 * M_PI) * W, p[0] / M_PI * H};
    };
    polylines(svg, curves, map, W / 2.0, "fill=\"none\" stroke=\"#000\" stroke-width=\"1\"");
    for (const auto& c : crossings) {
        const auto p = map({c.theta, c.phi});
        svg << "<circle cx=\"" << fmt(p[0]) << "\" cy=\"" << fmt(p[1]) << "\" r=\"3\" fill=\""
            << crossing_colour(c.label) << "\"><title>" << to_string(c.label) << "</title></circle>\n";
    }
    svg << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"none\" stroke=\"#444\"/>\n";
    svg << "</g>\n";
    svg << "<text x=\"4\" y=\"" << top + H + 22 << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << "All points on the top line (north pole) are identified, and likewise on the bottom line (south pole).</text>\n";
    svg << "<text x=\"4\" y=\"" << top + H + 38 << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << "Red tint: positive, blue tint: negative. Markers: red upper, blue lower, green equator, purple pole.</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string disc_svg(double radius, const std::vector<NodalCurve>& dashed, const std::vector<NodalCurve>& solid,
                     const std::vector<SignMarker>& markers, const std::string& title) {
    constexpr double S = 600.0, top = 30.0;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << S << "\" height=\"" << S + 60
        << "\" viewBox=\"0 0 " << S << ' ' << S + 60 << "\">\n";
    svg << "<text x=\"4\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << escape(title) << "</text>\n";
    svg << "<g transform=\"translate(0," << top << ")\">\n";
    auto map = [&](const std::array<double, 2>& p) {
        return std::array<double, 2>{(p[0] + radius) / (2.0 * radius) * S, (radius - p[1]) / (2.0 * radius) * S};
    };
    svg << "<circle cx=\"" << S / 2 << "\" cy=\"" << S / 2 << "\" r=\"" << S / 2
        << "\" fill=\"#fafafa\" stroke=\"#444\"/>\n";
    polylines(svg, dashed, map, 0.0, "fill=\"none\" stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    polylines(svg, solid, map, 0.0, "fill=\"none\" stroke=\"#000\" stroke-width=\"1.2\"");
    for (const auto& m : markers) {
        const auto p = map({m.x, m.y});
        svg << "<text x=\"" << fmt(p[0] + 3) << "\" y=\"" << fmt(p[1] - 3) << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
            << (m.sign > 0 ? "#d62728" : "#1f77b4") << "\">" << (m.sign > 0 ? "+" : "-") << "</text>\n";
        svg << "<circle cx=\"" << fmt(p[0]) << "\" cy=\"" << fmt(p[1]) << "\" r=\"2\" fill=\"#000\"/>\n";
    }
    svg << "</g>\n";
    svg << "<text x=\"4\" y=\"" << top + S + 20 << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << "Dashed: unperturbed nodal set. Solid: perturbed nodal set. Signs: perturbation at the crossings.</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace nodal::io
