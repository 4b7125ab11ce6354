#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nodal/combinat.hpp"
#include "oracles.hpp"

using namespace nodal;
using namespace nodal::combinat;

TEST_CASE("enumeration equals the brute-force filtered matchings") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> mine;
        for (const auto& d : enumerate_diagrams(n)) mine.insert(d.match);
        const auto brute = oracle::noncrossing_matchings(n);
        CHECK(mine == std::set<std::vector<int>>(brute.begin(), brute.end()));
        CHECK(static_cast<long>(mine.size()) == catalan(n));
    }
    CHECK(enumerate_diagrams(8).size() == 1430);
    CHECK_THROWS_AS(enumerate_diagrams(9), DomainError);
}

TEST_CASE("diagram text round trip and validation") {
    const auto d = ChordDiagram::parse("0-5,1-4,2-3");
    CHECK(d.n == 3);
    CHECK(d.to_string() == "0-5,1-4,2-3");
    CHECK_THROWS_AS(ChordDiagram::parse("0-2,1-3"), DomainError);  // crossing
    CHECK_THROWS_AS(ChordDiagram::parse("0-1,1-2"), DomainError);
    CHECK_THROWS_AS(ChordDiagram::parse("0-1,2"), DomainError);
    const auto a = ChordDiagram::parse("0-1,2-3,4-5");
    const auto b = ChordDiagram::parse("0-5,1-2,3-4");
    CHECK(a.rotation_canonical() == b.rotation_canonical());
}

TEST_CASE("gluing agrees with the half-edge cycle oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            const auto g = glue_antipodal(d);
            CAPTURE(d.to_string());
            CHECK(g.components == oracle::glued_cycles(d.match));
            CHECK(g.components % 2 == n % 2);
            CHECK(g.domains == g.components + 1);
            CHECK(g.odd_count <= 1);
            CHECK(g.odd_count + 2 * g.oval_pairs == g.components);
            int total = 0;
            for (int len : g.lengths) total += len;
            CHECK(total == 2 * n);
        }
    }
}

TEST_CASE("small gluings") {
    const auto one = glue_antipodal(ChordDiagram::parse("0-1"));
    CHECK(one.components == 1);
    CHECK(one.odd_count == 1);
    const auto adjacent = glue_antipodal(ChordDiagram::parse("0-1,2-3"));
    CHECK(adjacent.components == oracle::glued_cycles({1, 0, 3, 2}));
}

TEST_CASE("planar zero set of z^2 - 1 is the two hyperbola branches") {
    const auto r = planar_zero_topology({{-1.0, 0.0}, {0.0, 0.0}});
    CHECK(r.diagram.to_string() == "0-3,1-2");
    CHECK(r.topology.components == 2);
}

TEST_CASE("singular z^2 is rejected") {
    CHECK_THROWS_AS(planar_zero_topology({{0.0, 0.0}, {0.0, 0.0}}), NonsingularityError);
}

TEST_CASE("perturbed cubics pair odd with even endpoints") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> normal(0.0, 0.3);
    const std::vector<std::complex<double>> base{{-1.0, 0.0}, {0.0, 0.5}, {1.0, 0.0}};
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<std::complex<double>> roots;
        for (const auto& z : base) roots.push_back(z + std::complex<double>(normal(rng), normal(rng)));
        const auto r = planar_zero_topology(monic_from_roots(roots));
        const auto& m = r.diagram.match;
        for (int i = 0; i < 6; ++i) CHECK((i + m[i]) % 2 == 1);
        CHECK(std::find(enumerate_diagrams(3).begin(), enumerate_diagrams(3).end(), r.diagram) !=
              enumerate_diagrams(3).end());
    }
}

TEST_CASE("the asymptotic diagram is found at once") {
    const auto target = ChordDiagram::parse("0-5,1-2,3-4");
    SearchOptions o;
    o.seed = 3;
    const auto r = realize_diagram_search(target, o);
    CHECK(r.found);
    CHECK(r.trials < 200);
    CHECK(planar_zero_topology(r.coefficients).diagram == target);
    CHECK(r.seed == 3);
}

TEST_CASE("search limits") {
    SearchOptions o;
    CHECK_THROWS_AS(realize_diagram_search(enumerate_diagrams(6).front(), o), DomainError);
}
