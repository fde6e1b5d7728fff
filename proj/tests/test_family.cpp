#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "einject/family.hpp"
#include "einject/harness.hpp"

using namespace einject;
using namespace einject::family;

namespace {

// Permutation search; fine up to 8 or so vertices.
bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<Vertex> p(a.order());
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(p[u], p[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST_CASE("parse and print round trip") {
    for (const char* text : {"path:5", "cycle:7", "complete:4", "star:3", "doublestar:2x3", "wheel:5",
                             "bipartite:2x3", "multipartite:2,2,3", "fan:2x3", "ladder:4", "prism:6",
                             "grid:3x4", "cylinder:2x5", "torus:3x7", "cliquebridge:5x4", "fixture:M4",
                             "hypercube:3"}) {
        auto spec = parse_family(text);
        CHECK(to_string(spec) == text);
        CHECK(parse_family(to_string(spec)) == spec);
    }
    CHECK(to_string(parse_family("torus:3,7")) == "torus:3x7");
    CHECK_THROWS_AS(parse_family("cycle"), SpecError);
    CHECK_THROWS_AS(parse_family("cycle:x"), SpecError);
    CHECK_THROWS_AS(parse_family("blob:3"), SpecError);
    CHECK_THROWS_AS(parse_family("grid:3"), SpecError);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(Cycle{2}), SpecError);
    CHECK_THROWS_AS(validate(Torus{2, 5}), SpecError);
    CHECK_THROWS_AS(validate(Fixture{"M9"}), SpecError);
    CHECK_THROWS_AS(generate(Path{0}), SpecError);
    CHECK_NOTHROW(validate(Cycle{3}));
}

TEST_CASE("sizes") {
    auto d3 = generate(Prism{3});
    CHECK(d3.order() == 6);
    CHECK(d3.size() == 9);
    for (int n = 3; n <= 9; ++n) {
        auto d = generate(Prism{n});
        CHECK(d.order() == static_cast<std::size_t>(2 * n));
        CHECK(d.size() == static_cast<std::size_t>(3 * n));
    }
    auto s4 = generate(Star{4});
    CHECK(s4.order() == 5);
    CHECK(diameter(s4) == 2);
    CHECK(generate(Wheel{5}).size() == 10);
    CHECK(generate(Grid{3, 4}).size() == 17);
    CHECK(generate(Torus{3, 5}).size() == 30);
    CHECK(generate(Cylinder{3, 5}).size() == 25);
    CHECK(generate(CliqueBridge{5, 4}).size() == 10 + 6 + 1);
    CHECK(generate(DoubleStar{2, 3}).order() == 7);
    CHECK(diameter(generate(DoubleStar{2, 3})) == 3);
    CHECK(generate(CompleteMultipartite{{2, 2, 3}}).size() == 4 + 6 + 6);
    CHECK(generate(Hypercube{3}).size() == 12);
    CHECK(generate(Fan{2, 3}).size() == 2 + 6);
}

TEST_CASE("fan isomorphism") {
    CHECK(isomorphic(generate(Fan{2, 2}), generate(Fan{1, 3})));
    CHECK_FALSE(isomorphic(generate(Fan{2, 2}), generate(Cycle{4})));
}

TEST_CASE("products") {
    auto p2 = generate(Path{2});
    CHECK(isomorphic(product(p2, p2, ProductKind::Cartesian), generate(Cycle{4})));
    auto direct = product(p2, p2, ProductKind::Direct);
    CHECK(direct.size() == 2);
    for (Vertex v = 0; v < 4; ++v) CHECK(direct.degree(v) == 1);
    CHECK(product(p2, p2, ProductKind::Strong) == generate(Complete{4}));
    CHECK(product(generate(Path{3}), generate(Cycle{5}), ProductKind::Cartesian) == generate(Cylinder{3, 5}));
    CHECK(product(generate(Cycle{3}), generate(Cycle{7}), ProductKind::Cartesian) == generate(Torus{3, 7}));
}

TEST_CASE("strong product is the union of the other two") {
    testing::Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        auto g = testing::random_graph(4, 0.5, rng);
        auto h = testing::random_graph(3, 0.5, rng);
        auto c = product(g, h, ProductKind::Cartesian);
        auto d = product(g, h, ProductKind::Direct);
        auto s = product(g, h, ProductKind::Strong);
        CHECK(s.size() == c.size() + d.size());
        for (auto [u, v] : c.edges()) CHECK(s.adjacent(u, v));
        for (auto [u, v] : d.edges()) CHECK(s.adjacent(u, v));
    }
}

TEST_CASE("join and union") {
    auto k2bar = Graph::edgeless(2);
    CHECK(isomorphic(join(k2bar, generate(Path{2})), generate(Fan{2, 2})));
    CHECK(isomorphic(join(Graph::edgeless(1), generate(Cycle{5})), generate(Wheel{5})));
    CHECK(join(Graph::edgeless(1), Graph::edgeless(1)) == generate(Complete{2}));

    auto u = disjoint_union(generate(Complete{3}), generate(Complete{3}));
    CHECK(u.order() == 6);
    CHECK(u.size() == 6);
    CHECK(components(u).size() == 2);
    auto iso = disjoint_union(Graph::edgeless(1), Graph::edgeless(1));
    CHECK(iso.order() == 2);
    CHECK(iso.size() == 0);
    auto c4p2 = disjoint_union(generate(Cycle{4}), generate(Path{2}));
    CHECK(c4p2.order() == 6);
    CHECK(c4p2.size() == 5);
}

TEST_CASE("fixtures") {
    CHECK(fixture_names() == std::vector<std::string>{"M3", "M4", "M5", "M6", "M7", "M8"});
    const auto& m3 = fixture("M3");
    CHECK(m3.graph.order() == 14);
    CHECK(m3.graph.max_degree() == 3);
    CHECK(generate(Fixture{"M3"}) == m3.graph);
    for (const auto& name : fixture_names()) {
        const auto& f = fixture(name);
        CHECK(f.figure_coloring.size() == f.graph.order());
        CHECK(is_connected(f.graph));
    }
    CHECK_THROWS(fixture("M2"));
}

TEST_CASE("fixture maximum degrees match their names") {
    for (int d = 3; d <= 8; ++d)
        CHECK(fixture("M" + std::to_string(d)).graph.max_degree() == static_cast<std::size_t>(d));
}
