#include <doctest.h>

#include <filesystem>
#include <random>

#include "nodal/io.hpp"
#include "nodal/verify.hpp"

using namespace nodal;

TEST_CASE("spherical spec survives a JSON round trip") {
    std::mt19937_64 rng(9);
    const auto spec = verify::random_harmonic(rng, 6);
    const auto text = io::to_json(spec).dump();
    const auto back = io::spherical_spec_from_json(io::json::parse(text));
    REQUIRE(back.terms.size() == spec.terms.size());
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
        CHECK(std::abs(back.terms[i].weight - spec.terms[i].weight) <= 1e-15 * std::abs(spec.terms[i].weight));
        CHECK(back.terms[i].order == spec.terms[i].order);
        CHECK(back.terms[i].phase == spec.terms[i].phase);
        for (int k = 0; k < 9; ++k) CHECK(std::abs(back.terms[i].rotation.m[k] - spec.terms[i].rotation.m[k]) <= 1e-15);
    }
    for (auto [t, p] : {std::pair{0.4, 1.0}, {2.0, 5.5}}) {
        CHECK(std::abs(eval_sph(back, t, p) - eval_sph(spec, t, p)) <= 1e-15);
    }
}

TEST_CASE("Lewy and planar specs round trip") {
    const LewyLiftSpec lewy{2, {{0.25, -1.5}, {1e-3, 7.0}}, 0.05};
    const auto l = io::lewy_spec_from_json(io::json::parse(io::to_json(lewy).dump()));
    CHECK(l.coefficients == lewy.coefficients);
    CHECK(l.t == lewy.t);
    PlanarEigenSpec planar;
    planar.epsilon = 0.00390625;
    const auto p = io::planar_spec_from_json(io::json::parse(io::to_json(planar).dump()));
    CHECK(p.epsilon == planar.epsilon);
    CHECK(p.radius == planar.radius);
}

TEST_CASE("malformed specs are domain errors") {
    CHECK_THROWS_AS(io::spherical_spec_from_json(io::json::parse(R"({"kind":"spherical","degree":3})")), DomainError);
    CHECK_THROWS_AS(io::lewy_spec_from_json(io::json::parse(R"({"kind":"planar"})")), DomainError);
    CHECK_THROWS_AS(io::spherical_spec_from_json(io::json::parse(
                        R"({"kind":"spherical","degree":3,"terms":[{"weight":1,"order":1,"phase":"tan","rotation":[1,0,0,0,1,0,0,0,1]}]})")),
                    DomainError);
}

TEST_CASE("topology report has counts and no curves") {
    const auto f = basis_harmonic(2, 0).field();
    const auto t = analyze(sample(f, 128), f);
    const auto j = io::to_json(t);
    CHECK(j["components"] == 2);
    CHECK(j["surface"] == "sphere");
    CHECK_FALSE(j.contains("curves"));
    CHECK(io::to_json(bounds::make_report(2, 2, 3))["parity_ok"] == true);
}

TEST_CASE("polynomial files") {
    const auto c = io::parse_polynomial("# cubic\ncoeff 0 0\ncoeff -1 0\ncoeff 0 0\n");
    REQUIRE(c.size() == 3);
    CHECK(c[1] == std::complex<double>(-1.0, 0.0));
    const auto r = io::parse_polynomial("root 1 0\nroot -1 0  # comment\n");
    REQUIRE(r.size() == 2);
    CHECK(r[0].real() == doctest::Approx(-1.0));
    CHECK_THROWS_AS(io::parse_polynomial("root 1 0\ncoeff 0 0\n"), DomainError);
    CHECK_THROWS_AS(io::parse_polynomial("root 1\n"), DomainError);
    CHECK_THROWS_AS(io::parse_polynomial("pole 1 0\n"), DomainError);
    CHECK_THROWS_AS(io::parse_polynomial("# nothing\n"), DomainError);
}

TEST_CASE("atomic write leaves no temporary behind") {
    const auto dir = std::filesystem::temp_directory_path() / "nodal-io-test";
    std::filesystem::remove_all(dir);
    io::write_atomic(dir / "a.txt", "first");
    io::write_atomic(dir / "a.txt", "second");
    CHECK(io::read_file(dir / "a.txt") == "second");
    CHECK_FALSE(std::filesystem::exists(dir / "a.txt.tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("SVG output is deterministic and carries the pole caption") {
    const auto f = basis_harmonic(3, 1).field();
    const auto t = analyze(sample(f, 128), f);
    const auto a = io::sphere_svg(f, t.curves, {}, "Y_3^1");
    const auto b = io::sphere_svg(f, t.curves, {}, "Y_3^1");
    CHECK(a == b);
    CHECK(a.find("north pole") != std::string::npos);
    CHECK(a.find("<polyline") != std::string::npos);
    const auto d = io::disc_svg(5.0, t.curves, {}, {{1.0, 0.0, 1}}, "disc & title");
    CHECK(d.find("stroke-dasharray") != std::string::npos);
    CHECK(d.find("disc &amp; title") != std::string::npos);
}
