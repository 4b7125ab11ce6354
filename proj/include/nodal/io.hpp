#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "nodal/bounds.hpp"
#include "nodal/combinat.hpp"
#include "nodal/harmonics.hpp"
#include "nodal/ovals.hpp"
#include "nodal/topology.hpp"

namespace nodal::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const SphericalHarmonicSpec& spec);
json to_json(const LewyLiftSpec& spec);
json to_json(const PlanarEigenSpec& spec);
SphericalHarmonicSpec spherical_spec_from_json(const json& j);
LewyLiftSpec lewy_spec_from_json(const json& j);
PlanarEigenSpec planar_spec_from_json(const json& j);

/// Counts and structure only; curves are rendered to SVG instead.
json to_json(const NodalTopology& topology);
json to_json(const bounds::BoundReport& report);
json to_json(const combinat::GluedCurveSystem& glued);

/// Monic polynomial text: one "coeff RE IM" line per a_0..a_{n-1} in order, or one
/// "root RE IM" line per root; '#' starts a comment.
combinat::MonicCoefficients parse_polynomial(const std::string& text);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

struct SignMarker {
    double x = 0.0;
    double y = 0.0;
    int sign = 0;
};

/// Equirectangular map: phi across, theta down, poles on the top and bottom edges. Domains
/// are tinted by the sign of `field`; crossings are drawn as labelled markers.
std::string sphere_svg(const SphereField& field, const std::vector<NodalCurve>& curves,
                       const std::vector<Crossing>& crossings, const std::string& title);

/// Disc picture: `dashed` curves (reference field) under `solid` curves, with sign markers.
std::string disc_svg(double radius, const std::vector<NodalCurve>& dashed, const std::vector<NodalCurve>& solid,
                     const std::vector<SignMarker>& markers, const std::string& title);

}  // namespace nodal::io
