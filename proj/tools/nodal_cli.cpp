#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nodal/bounds.hpp"
#include "nodal/combinat.hpp"
#include "nodal/forest.hpp"
#include "nodal/io.hpp"
#include "nodal/lewy.hpp"
#include "nodal/ovals.hpp"
#include "nodal/planar.hpp"
#include "nodal/specfun.hpp"
#include "nodal/verify.hpp"

namespace fs = std::filesystem;
using nodal::io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int resolution = 0;  // 0: command default
    std::uint64_t seed = 1;
    double eps_start = 1e-2;
    double t_start = 0.2;
    long budget = 10000;
    std::string out = "nodal-out";
    std::string format = "json";
    bool svg = true;
    bool quick = false;
    double delta1 = 0.5;
    double delta2 = 0.25;
    double epsilon = -1.0;  // < 0: adaptive
    double radius = 15.0;

    void validate() const {
        if (resolution != 0 && (resolution < nodal::kMinResolution || resolution > nodal::kMaxResolution)) {
            throw UsageError("resolution must be in [64, 8192]");
        }
        if (!(eps_start > 0.0) || !(t_start > 0.0)) throw UsageError("schedule starts must be positive");
        if (budget < 1) throw UsageError("budget must be positive");
        if (!(delta2 > 0.0 && delta2 < delta1 && delta1 < 1.5)) {
            throw UsageError("shifts must satisfy 0 < delta2 < delta1 < 1.5");
        }
        if (!(radius > 0.0)) throw UsageError("radius must be positive");
    }

    json to_json() const {
        return {{"resolution", resolution}, {"seed", seed}, {"eps_start", eps_start}, {"t_start", t_start},
                {"budget", budget}, {"quick", quick}, {"delta1", delta1}, {"delta2", delta2},
                {"epsilon", epsilon}, {"radius", radius}};
    }
};

json envelope(const std::string& command, const RunConfig& config) {
    return {{"schema", nodal::io::kSchemaVersion}, {"command", command}, {"seed", config.seed}, {"config", config.to_json()}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string value_text(const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

// Flat rows from an object of scalars (nested objects are prefixed).
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) flatten(*it, key, out);
        else out.emplace_back(key, value_text(*it));
    }
}

std::string to_csv(const json& report) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(report, "", cells);
    std::ostringstream header, row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        header << (i ? "," : "") << csv_escape(cells[i].first);
        row << (i ? "," : "") << csv_escape(cells[i].second);
    }
    return header.str() + "\n" + row.str() + "\n";
}

void write_report(const RunConfig& config, const std::string& stem, const json& report) {
    const fs::path dir(config.out);
    if (config.format == "csv") nodal::io::write_atomic(dir / (stem + ".csv"), to_csv(report));
    else nodal::io::write_atomic(dir / (stem + ".json"), report.dump(2) + "\n");
}

void write_svg(const RunConfig& config, const std::string& name, const std::string& content) {
    if (config.svg) nodal::io::write_atomic(fs::path(config.out) / name, content);
}

const char* case_name(nodal::OvalCase c) {
    switch (c) {
        case nodal::OvalCase::OddThreeMod4: return "n=4k+3";
        case nodal::OvalCase::OddOneMod4: return "n=4k+1";
        case nodal::OvalCase::Even: return "n=2m";
    }
    return "?";
}

int cmd_ovals(const RunConfig& config, int n) {
    if (n < 3 || n > 20) throw UsageError("ovals needs 3 <= n <= 20");
    nodal::OvalsOptions options;
    options.eps_start = config.eps_start;
    if (config.resolution) options.max_resolution = config.resolution;
    if (config.quick) options.max_resolution = std::min(options.max_resolution, 1024);
    const auto result = nodal::ovals_spec(n, options);
    const auto& topo = result.topology;
    json report = envelope("ovals", config);
    report["degree"] = n;
    const auto& g = result.geometry;
    report["geometry"] = {{"case", case_name(g.kind)}, {"index", g.index}, {"base_order", g.base_order},
                          {"perturb_order", g.perturb_order}, {"psi", result.psi}, {"tilt", result.tilt},
                          {"azimuth", result.azimuth}, {"epsilon", result.epsilon}};
    report["crossings"] = result.crossings.size();
    report["sign_check"] = {{"status", nodal::to_string(result.signs.status)}, {"checked", result.signs.checked},
                            {"mismatches", result.signs.mismatches}, {"detail", result.signs.detail}};
    report["spec"] = nodal::io::to_json(result.spec);
    report["topology"] = nodal::io::to_json(topo);
    report["prediction"] = {{"value", result.prediction.value}, {"exact", result.prediction.exact}};
    report["bounds"] = nodal::io::to_json(nodal::bounds::make_report(n, topo.components, topo.domains));
    report["found"] = result.found;
    report["matches_prediction"] = result.matches_prediction();
    report["diagnostics"] = result.diagnostics;
    if (config.format == "csv") report.erase("spec");
    write_report(config, "ovals_n" + std::to_string(n), report);
    if (config.svg && result.found) {
        const auto field = result.spec.field();
        const int res = std::min(topo.resolution, 1024);
        const auto picture = nodal::analyze(nodal::sample(field, res), field);
        write_svg(config, "ovals_n" + std::to_string(n) + ".svg",
                  nodal::io::sphere_svg(field, picture.curves, result.crossings,
                                        "degree " + std::to_string(n) + ": " + std::to_string(topo.components) +
                                            " nodal components"));
    }
    std::printf("ovals n=%d components=%d domains=%d predicted=%s%ld stable=%d resolution=%d\n", n, topo.components,
                topo.domains, result.prediction.exact ? "" : ">=", result.prediction.value, topo.stable,
                topo.resolution);
    for (const auto& d : result.diagnostics) std::printf("  %s\n", d.c_str());
    return result.matches_prediction() ? kOk : kFail;
}

std::vector<nodal::io::SignMarker> sign_markers(const nodal::ShiftSigns& signs) {
    std::vector<nodal::io::SignMarker> markers;
    for (std::size_t k = 0; k < signs.zeros.size(); ++k) {
        markers.push_back({signs.zeros[k], 0.0, signs.right_signs[k]});
        markers.push_back({-signs.zeros[k], 0.0, signs.left_signs[k]});
    }
    return markers;
}

int cmd_planar(const RunConfig& config) {
    nodal::PlanarEigenSpec spec;
    spec.delta1 = config.delta1;
    spec.delta2 = config.delta2;
    spec.radius = config.radius;
    nodal::PlanarResult result;
    const int max_res = config.resolution ? config.resolution : 4096;
    if (config.epsilon >= 0.0) {
        spec.epsilon = config.epsilon;
        spec.validate();
        nodal::RefineOptions refine;
        refine.start_resolution = std::min(512, max_res);
        refine.max_resolution = max_res;
        result.spec = spec;
        result.signs = nodal::shift_signs(spec);
        result.topology = nodal::planar_topology(spec, nodal::PlanarWhich::H, refine);
        result.found = result.topology.stable && result.topology.nonsingular;
    } else {
        nodal::PlanarOptions options;
        options.eps_start = config.eps_start;
        options.max_resolution = max_res;
        options.start_resolution = std::min(options.start_resolution, max_res);
        result = nodal::planar_two_domains(spec, options);
    }
    const auto& topo = result.topology;
    json report = envelope("planar", config);
    report["spec"] = nodal::io::to_json(result.spec);
    report["topology"] = nodal::io::to_json(topo);
    report["shift_signs"] = {{"zeros", result.signs.zeros}, {"right", result.signs.right_signs},
                             {"left", result.signs.left_signs}, {"alternating", result.signs.alternating()}};
    report["found"] = result.found;
    report["diagnostics"] = result.diagnostics;
    const bool ok = topo.domains == 2 && topo.stable;
    report["two_domains"] = ok;
    if (config.format == "csv") report.erase("shift_signs");
    char stem[64];
    std::snprintf(stem, sizeof stem, "planar_R%g", spec.radius);
    write_report(config, stem, report);
    if (config.svg) {
        const int res = std::min(1024, max_res);
        const auto f = result.spec.field(nodal::PlanarWhich::F);
        const auto h = result.spec.field(nodal::PlanarWhich::H);
        const auto fp = nodal::analyze(nodal::sample(f, res), f);
        const auto hp = nodal::analyze(nodal::sample(h, res), h);
        std::ostringstream title;
        title << "R=" << spec.radius << ", epsilon=" << result.spec.epsilon << ": " << topo.domains << " nodal domains";
        write_svg(config, std::string(stem) + ".svg",
                  nodal::io::disc_svg(spec.radius, fp.curves, hp.curves, sign_markers(result.signs), title.str()));
    }
    std::printf("planar R=%g epsilon=%g domains=%d components=%d stable=%d\n", spec.radius, result.spec.epsilon,
                topo.domains, topo.components, topo.stable);
    return ok ? kOk : kFail;
}

int cmd_lewy(const RunConfig& config, const std::string& polyfile) {
    const auto coeffs = nodal::io::parse_polynomial(nodal::io::read_file(polyfile));
    const std::string stem = "lewy_" + fs::path(polyfile).stem().string();
    json report = envelope("lewy", config);
    json poly = json::array();
    for (const auto& c : coeffs) poly.push_back({c.real(), c.imag()});
    report["coefficients"] = poly;
    nodal::LewyOptions options;
    options.t_start = config.t_start;
    if (config.resolution) options.max_resolution = config.resolution;
    nodal::LewyResult result;
    try {
        result = nodal::lewy_pipeline(coeffs, options);
    } catch (const nodal::NonsingularityError& e) {
        report["error"] = {{"kind", "singular"}, {"message", e.what()}};
        report["matches"] = false;
        write_report(config, stem, report);
        std::printf("lewy: singular zero set: %s\n", e.what());
        return kFail;
    } catch (const nodal::ExtractionError& e) {
        report["error"] = {{"kind", "extraction"}, {"message", e.what()}};
        report["matches"] = false;
        write_report(config, stem, report);
        std::printf("lewy: extraction failed: %s\n", e.what());
        return kFail;
    }
    report["diagram"] = result.planar.diagram.to_string();
    report["window"] = result.planar.window;
    report["glued"] = nodal::io::to_json(result.glued);
    report["spec"] = nodal::io::to_json(result.spec);
    report["topology"] = nodal::io::to_json(result.topology);
    report["found"] = result.found;
    report["matches"] = result.matches;
    json sup = json::array();
    for (double t : {0.2, 0.1, 0.05, 0.025}) sup.push_back({{"t", t}, {"sup", nodal::lewy_sup_distance(coeffs, t)}});
    report["sup_distance"] = sup;
    report["diagnostics"] = result.diagnostics;
    if (config.format == "csv") {
        report.erase("coefficients");
        report.erase("sup_distance");
        report["glued"].erase("lengths");
    }
    write_report(config, stem, report);
    if (config.svg && result.found) {
        const auto field = result.spec.field();
        const auto picture = nodal::analyze(nodal::sample(field, 512), field);
        write_svg(config, stem + "_sphere.svg",
                  nodal::io::sphere_svg(field, picture.curves, {}, "Lewy lift at t=" + std::to_string(result.spec.t)));
        const double w = result.planar.window;
        nodal::DiscField plane{[coeffs](double x, double y) { return nodal::combinat::eval_monic(coeffs, {x, y}).real(); }, w};
        const auto planar = nodal::analyze(nodal::sample(plane, 512), plane);
        write_svg(config, stem + "_plane.svg",
                  nodal::io::disc_svg(w, {}, planar.curves, {}, "Re p, diagram " + result.planar.diagram.to_string()));
    }
    std::printf("lewy degree=%zu diagram=%s glued=%d sphere=%d t=%g matches=%d\n", coeffs.size(),
                result.planar.diagram.to_string().c_str(), result.glued.components, result.topology.components,
                result.spec.t, result.matches);
    return result.matches ? kOk : kFail;
}

int cmd_diagrams(const RunConfig& config, int n, bool realize) {
    if (n < 1 || n > 8) throw UsageError("diagrams needs 1 <= n <= 8");
    if (realize && n > 5) throw UsageError("--realize is limited to n <= 5");
    const auto diagrams = nodal::combinat::enumerate_diagrams(n);
    json rows = json::array();
    bool ok = true;
    std::ostringstream listing;
    for (const auto& d : diagrams) {
        const auto glued = nodal::combinat::glue_antipodal(d);
        const bool parity = glued.components % 2 == n % 2;
        ok = ok && parity;
        json row = {{"diagram", d.to_string()}, {"glued_components", glued.components},
                    {"odd_components", glued.odd_count}, {"parity_ok", parity}};
        if (realize) {
            nodal::combinat::SearchOptions options;
            options.seed = config.seed;
            options.budget = config.budget;
            const auto found = nodal::combinat::realize_diagram_search(d, options);
            json roots = json::array();
            for (const auto& r : found.roots) roots.push_back({r.real(), r.imag()});
            row["realized"] = found.found;
            row["trials"] = found.trials;
            row["roots"] = roots;
            row["verified"] = found.found;
            ok = ok && found.found;
        }
        row["seed"] = config.seed;
        listing << d.to_string() << "\n";
        rows.push_back(row);
    }
    const std::string stem = "diagrams_n" + std::to_string(n);
    if (config.format == "csv") {
        std::ostringstream csv;
        csv << "diagram,glued_components,odd_components,parity_ok,realized,trials,seed\n";
        for (const auto& r : rows) {
            csv << csv_escape(r["diagram"].get<std::string>()) << ',' << r["glued_components"] << ','
                << r["odd_components"] << ',' << r["parity_ok"] << ','
                << (r.contains("realized") ? r["realized"].dump() : "") << ','
                << (r.contains("trials") ? r["trials"].dump() : "") << ',' << r["seed"] << "\n";
        }
        nodal::io::write_atomic(fs::path(config.out) / (stem + ".csv"), csv.str());
    } else {
        json report = envelope("diagrams", config);
        report["n"] = n;
        report["count"] = diagrams.size();
        report["rows"] = rows;
        report["passed"] = ok;
        nodal::io::write_atomic(fs::path(config.out) / (stem + ".json"), report.dump(2) + "\n");
    }
    nodal::io::write_atomic(fs::path(config.out) / (stem + ".txt"), listing.str());
    for (const auto& r : rows) {
        std::printf("%-40s components=%d parity=%s%s\n", r["diagram"].get<std::string>().c_str(),
                    r["glued_components"].get<int>(), r["parity_ok"].get<bool>() ? "ok" : "FAIL",
                    r.contains("realized") ? (r["realized"].get<bool>() ? " realized" : " not-found") : "");
    }
    return ok ? kOk : kFail;
}

int cmd_verify(const RunConfig& config, bool inject_fault) {
    nodal::verify::SuiteOptions options;
    options.seed = config.seed;
    options.quick = config.quick;
    options.inject_fault = inject_fault;
    const auto checks = nodal::verify::run_suite(options);
    json report = envelope("verify", config);
    json list = json::array();
    bool ok = true;
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        ok = ok && c.passed;
        std::printf("%s %s: %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    }
    report["checks"] = list;
    report["passed"] = ok;
    if (config.format == "csv") {
        std::ostringstream csv;
        csv << "name,passed,detail\n";
        for (const auto& c : checks) csv << c.name << ',' << (c.passed ? "true" : "false") << ',' << csv_escape(c.detail) << "\n";
        nodal::io::write_atomic(fs::path(config.out) / "verify.csv", csv.str());
    } else {
        nodal::io::write_atomic(fs::path(config.out) / "verify.json", report.dump(2) + "\n");
    }
    return ok ? kOk : kFail;
}

int cmd_dump_zeros(const RunConfig& config, const std::string& kind, int order, int degree, int count) {
    std::ostringstream csv;
    if (kind == "bessel") {
        if (order != 0 && order != 1) throw UsageError("bessel zeros need order 0 or 1");
        if (count < 1 || count > 1000) throw UsageError("count must be in [1, 1000]");
        const auto table = nodal::specfun::bessel_zeros(order, count);
        csv << "k,zero,gap\n";
        char line[96];
        for (std::size_t k = 0; k < table.zeros.size(); ++k) {
            const double gap = k ? table.zeros[k] - table.zeros[k - 1] : 0.0;
            std::snprintf(line, sizeof line, "%zu,%.15g,%.15g\n", k + 1, table.zeros[k], gap);
            csv << line;
        }
    } else if (kind == "legendre") {
        if (degree < 0 || degree > nodal::specfun::kMaxDegree || order < 0 || order > degree) {
            throw UsageError("legendre zeros need 0 <= order <= degree <= " + std::to_string(nodal::specfun::kMaxDegree));
        }
        csv << "k,theta,cos_theta\n";
        char line[96];
        const auto zeros = nodal::specfun::assoc_zeros(degree, order);
        for (std::size_t k = 0; k < zeros.size(); ++k) {
            std::snprintf(line, sizeof line, "%zu,%.15g,%.15g\n", k + 1, zeros[k], std::cos(zeros[k]));
            csv << line;
        }
    } else {
        throw UsageError("dump-zeros kind must be bessel or legendre");
    }
    const std::string name = kind == "bessel" ? "zeros_bessel_j" + std::to_string(order) + ".csv"
                                              : "zeros_legendre_" + std::to_string(degree) + "_" + std::to_string(order) + ".csv";
    nodal::io::write_atomic(fs::path(config.out) / name, csv.str());
    std::fputs(csv.str().c_str(), stdout);
    return kOk;
}

int cmd_forest(const RunConfig& config, const std::string& text, int max_edges) {
    using namespace nodal::combinat;
    EmbeddedForest forest;
    if (text.empty()) {
        std::mt19937_64 rng(config.seed);
        forest = random_forest(rng, max_edges);
    } else {
        forest = EmbeddedForest::parse(text);
    }
    const auto labels = label_forest(forest);
    const auto orientation = orient_forest(forest);
    json report = envelope("forest", config);
    report["forest"] = forest.to_string();
    json edges = json::array();
    for (std::size_t e = 0; e < forest.edges.size(); ++e) {
        edges.push_back({{"edge", e}, {"tree", forest.edges[e].tree}, {"label_pi", label_to_string(labels[e])},
                         {"orientation", orientation[e] > 0 ? "down" : "up"}});
    }
    bool ok = satisfies_vertex_rule(forest, orientation) && faces_consistent(forest, orientation);
    json faces = json::array();
    for (const auto& face : forest_faces(forest)) {
        Label sum(0);
        for (int e : face.edges) sum += labels[e];
        const bool exact = sum == Label(2 * face.degree());
        ok = ok && exact;
        faces.push_back({{"arcs", face.arcs}, {"degree", face.degree()}, {"label_sum_pi", label_to_string(sum)}, {"exact", exact}});
    }
    report["edges"] = edges;
    report["faces"] = faces;
    report["passed"] = ok;
    nodal::io::write_atomic(fs::path(config.out) / "forest.json", report.dump(2) + "\n");
    nodal::io::write_atomic(fs::path(config.out) / "forest.txt", forest.to_string() + "\n");
    std::printf("forest %s: %zu edges, %zu faces, face sums %s\n", forest.to_string().c_str(), forest.edges.size(),
                faces.size(), ok ? "exact" : "WRONG");
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nodal sets of spherical harmonics and planar eigenfunctions"};
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.require_subcommand(0, 1);
    RunConfig config;
    app.set_config("--config", "", "Flat key=value configuration file");
    bool print_config = false;
    app.add_flag("--print-config", print_config, "Print the effective configuration and exit");
    app.add_option("--resolution", config.resolution, "Finest grid resolution (0: command default)");
    app.add_option("--seed", config.seed, "Random seed");
    app.add_option("--eps-start", config.eps_start, "First epsilon of the halving schedule");
    app.add_option("--t-start", config.t_start, "First t of the Lewy halving schedule");
    app.add_option("--budget", config.budget, "Search trials per diagram");
    app.add_option("--out", config.out, "Output directory");
    app.add_option("--format", config.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--svg,!--no-svg", config.svg, "Write SVG pictures")->default_str("true");
    app.add_flag("--quick", config.quick, "Reduced workload");
    app.add_option("--delta1", config.delta1, "Planar horizontal shift");
    app.add_option("--delta2", config.delta2, "Planar vertical shift");
    app.add_option("--epsilon", config.epsilon, "Fixed planar epsilon (negative: adaptive)");
    app.add_option("--radius", config.radius, "Planar disc radius");

    int n = 0;
    auto* ovals = app.add_subcommand("ovals", "Oval construction for degree n");
    ovals->add_option("n", n, "Degree")->required();
    auto* planar = app.add_subcommand("planar", "Two-domain planar eigenfunction");
    std::string polyfile;
    auto* lewy = app.add_subcommand("lewy", "Lewy lift of a planar harmonic polynomial");
    lewy->add_option("polyfile", polyfile, "Polynomial file")->required();
    bool realize = false;
    int diagram_n = 0;
    auto* diagrams = app.add_subcommand("diagrams", "Chord diagram enumeration and gluing");
    diagrams->add_option("n", diagram_n, "Half the number of points")->required();
    diagrams->add_flag("--realize", realize, "Search for realizing polynomials");
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "Randomised property suite");
    verify->add_flag("--inject-fault", inject_fault, "Test hook: corrupt the sampled fields");
    std::string kind = "bessel";
    int order = 1, degree = 0, count = 50;
    auto* dump = app.add_subcommand("dump-zeros", "CSV table of special-function zeros");
    dump->add_option("kind", kind, "bessel or legendre");
    dump->add_option("--order", order, "Bessel order or Legendre order m");
    dump->add_option("--degree", degree, "Legendre degree n");
    dump->add_option("--count", count, "Number of Bessel zeros");
    std::string forest_text;
    int max_edges = 20;
    auto* forest = app.add_subcommand("forest", "Label and orient an embedded forest");
    forest->add_option("text", forest_text, "Forest text, e.g. \"0-(1 2 3)\"; random when omitted");
    forest->add_option("--max-edges", max_edges, "Edge cap for random forests");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (print_config) {
        std::cout << app.config_to_str(true, false);
        return kOk;
    }
    try {
        config.validate();
        if (app.got_subcommand(ovals)) return cmd_ovals(config, n);
        if (app.got_subcommand(planar)) return cmd_planar(config);
        if (app.got_subcommand(lewy)) return cmd_lewy(config, polyfile);
        if (app.got_subcommand(diagrams)) return cmd_diagrams(config, diagram_n, realize);
        if (app.got_subcommand(verify)) return cmd_verify(config, inject_fault);
        if (app.got_subcommand(dump)) return cmd_dump_zeros(config, kind, order, degree, count);
        if (app.got_subcommand(forest)) {
            if (max_edges < 1) throw UsageError("--max-edges must be positive");
            return cmd_forest(config, forest_text, max_edges);
        }
        std::cerr << app.help();
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nodal::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
