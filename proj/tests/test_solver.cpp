#include <doctest.h>

#include <set>
#include <sstream>

#include "corpus.hpp"
#include "einject/family.hpp"
#include "einject/solver.hpp"

using namespace einject;
using namespace einject::family;

namespace {

// Positions the stream after the "p cnf V C" header, skipping comments.
std::pair<int, int> cnf_header(std::istream& in) {
    std::string line;
    while (std::getline(in, line) && line.rfind("c", 0) == 0) {}
    std::istringstream head(line);
    std::string p, cnf;
    int vars = 0, clauses = 0;
    head >> p >> cnf >> vars >> clauses;
    return {vars, clauses};
}

int distinct(const std::vector<int>& c) { return static_cast<int>(std::set<int>(c.begin(), c.end()).size()); }

std::vector<Vertex> identity(std::size_t n) {
    std::vector<Vertex> p(n);
    for (Vertex v = 0; v < n; ++v) p[v] = v;
    return p;
}

}  // namespace

TEST_CASE("verify coloring") {
    auto c6 = generate(Cycle{6});
    CHECK(verify_coloring(c6, {{1, 2, 1, 2, 1, 2}, Mode::EInjective}, Mode::EInjective).empty());

    auto c5 = generate(Cycle{5});
    auto bad = verify_coloring(c5, {{1, 2, 1, 2, 1}, Mode::EInjective}, Mode::EInjective);
    REQUIRE_FALSE(bad.empty());
    bool found = false;
    for (const auto& v : bad) {
        CHECK(v.kind == ViolationKind::P4Ends);
        CHECK(v.witness.size() == 4);
        if (v.witness.front() == 0 && v.witness.back() == 2) found = true;
        if (v.witness.front() == 2 && v.witness.back() == 0) found = true;
    }
    CHECK(found);

    CHECK_THROWS_AS(verify_coloring(c5, {{1, 2}, Mode::EInjective}, Mode::EInjective), ColoringError);
    CHECK_THROWS_AS(verify_coloring(c5, {{1, 2, 0, 1, 2}, Mode::EInjective}, Mode::EInjective), ColoringError);
}

TEST_CASE("rainbow colorings are valid in every mode") {
    for (const auto& g : testing::random_corpus(40, 9, 29)) {
        std::vector<int> c(g.order());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<int>(i) + 1;
        for (Mode m : {Mode::Proper, Mode::Injective, Mode::TwoDistance, Mode::EInjective})
            CHECK(verify_coloring(g, {c, m}, m).empty());
    }
}

TEST_CASE("verifier agrees with the conflict oracle") {
    testing::Rng rng(31);
    for (const auto& g : testing::random_corpus(60, 7, 37)) {
        std::uniform_int_distribution<int> col(1, 3);
        std::vector<int> c(g.order());
        for (auto& x : c) x = col(rng);
        for (Mode m : {Mode::Proper, Mode::Injective, Mode::TwoDistance, Mode::EInjective}) {
            auto conf = testing::oracle::conflicts(g, m);
            bool clash = false;
            for (std::size_t u = 0; u < g.order(); ++u)
                for (std::size_t v = u + 1; v < g.order(); ++v) clash = clash || (conf[u][v] && c[u] == c[v]);
            CHECK(verify_coloring(g, {c, m}, m).empty() == !clash);
        }
    }
}

TEST_CASE("greedy") {
    auto c6 = generate(Cycle{6});
    auto g = greedy_coloring(c6, Mode::EInjective, identity(6));
    CHECK(distinct(g.colors) <= 2);
    CHECK(verify_coloring(c6, g, Mode::EInjective).empty());
    auto k4 = generate(Complete{4});
    CHECK(distinct(greedy_coloring(k4, Mode::Proper, identity(4)).colors) == 4);
    std::vector<Vertex> rev{3, 2, 1, 0};
    CHECK(distinct(greedy_coloring(k4, Mode::Proper, rev).colors) == 4);
    CHECK(distinct(greedy_coloring(Graph::edgeless(5), Mode::TwoDistance, identity(5)).colors) == 1);
    std::vector<Vertex> short_order{0, 1};
    CHECK_THROWS(greedy_coloring(k4, Mode::Proper, short_order));
}

TEST_CASE("dsatur heuristic") {
    CHECK(distinct(dsatur_heuristic(generate(Cycle{5}))) == 3);
    CHECK(distinct(dsatur_heuristic(generate(Complete{5}))) == 5);
    auto matching = Graph::from_edge_list(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(distinct(dsatur_heuristic(matching)) == 2);
}

TEST_CASE("exact values") {
    CHECK(chromatic_number(generate(Cycle{7}), Mode::EInjective).chi == 3);
    CHECK(chromatic_number(generate(Wheel{5}), Mode::EInjective).chi == 6);
    CHECK(chromatic_number(generate(Complete{3}), Mode::EInjective).chi == 1);
    CHECK(chromatic_number(Graph::edgeless(0), Mode::Proper).chi == 0);
    CHECK(chromatic_number(Graph::edgeless(3), Mode::EInjective).chi == 1);
    auto m4 = chromatic_number(generate(Fixture{"M4"}), Mode::EInjective);
    CHECK(m4.chi == 12);
    CHECK(verify_coloring(generate(Fixture{"M4"}), m4.certificate, Mode::EInjective).empty());
}

TEST_CASE("solver certificates and clique witnesses") {
    for (const auto& g : testing::random_corpus(80, 9, 41)) {
        for (Mode m : {Mode::Proper, Mode::EInjective}) {
            auto r = chromatic_number(g, m);
            REQUIRE(r.chi);
            CHECK(r.lower_bound <= *r.chi);
            CHECK(*r.chi <= r.upper_bound);
            CHECK(distinct(r.certificate.colors) == *r.chi);
            CHECK(verify_coloring(g, r.certificate, m).empty());
            auto h = derived_graph(g, m);
            for (std::size_t i = 0; i < r.clique.size(); ++i)
                for (std::size_t j = i + 1; j < r.clique.size(); ++j) CHECK(h.adjacent(r.clique[i], r.clique[j]));
        }
    }
}

TEST_CASE("solver agrees with exhaustive assignment") {
    for (const auto& g : testing::random_corpus(60, 6, 43)) {
        for (Mode m : {Mode::Proper, Mode::Injective, Mode::TwoDistance, Mode::EInjective}) {
            int want = testing::oracle::chromatic_exhaustive(testing::oracle::conflicts(g, m));
            CHECK(chromatic_number(g, m).chi == want);
            CHECK(brute_force_chromatic(derived_graph(g, m)) == want);
        }
    }
}

TEST_CASE("brute force") {
    CHECK(brute_force_chromatic(generate(Cycle{5})) == 3);
    CHECK(brute_force_chromatic(generate(Complete{5})) == 5);
    CHECK(brute_force_chromatic(Graph::from_edge_list(6, {{0, 1}, {2, 3}, {4, 5}})) == 2);
    CHECK(brute_force_chromatic(Graph::edgeless(0)) == 0);
    CHECK_THROWS(brute_force_chromatic(Graph::edgeless(kBruteForceCap + 1)));
}

TEST_CASE("clique bound") {
    CHECK(max_clique_lower_bound(generate(Complete{5})).size() == 5);
    CHECK(max_clique_lower_bound(generate(Cycle{5})).size() == 2);
    CHECK(max_clique_lower_bound(three_step_graph(join(generate(Complete{2}), generate(Complete{2})))).size() == 4);
}

TEST_CASE("parallel search gives the same answer and certificate") {
    for (const auto& spec : {FamilySpec{Torus{3, 5}}, FamilySpec{Prism{7}}, FamilySpec{Wheel{6}}}) {
        auto g = generate(spec);
        auto one = chromatic_number(g, Mode::EInjective, {Budget::defaults(), 1});
        auto four = chromatic_number(g, Mode::EInjective, {Budget::defaults(), 4});
        CHECK(one.chi == four.chi);
        CHECK(one.certificate.colors == four.certificate.colors);
        // node counts depend on how work was split; everything else must match
        auto strip = [](nlohmann::json j) {
            j.erase("stats");
            return j;
        };
        CHECK(strip(to_json(one)) == strip(to_json(four)));
        auto again = chromatic_number(g, Mode::EInjective, {Budget::defaults(), 4});
        CHECK(strip(to_json(again)) == strip(to_json(four)));
    }
}

TEST_CASE("budget exhaustion is reported, not guessed") {
    auto g = generate(Torus{3, 7});
    SolveOptions tight{{std::nullopt, 50}, 1};
    auto r = chromatic_number(g, Mode::EInjective, tight);
    if (!r.chi) {
        CHECK(r.budget_exhausted);
        CHECK(r.lower_bound < r.upper_bound);
        CHECK(verify_coloring(g, r.certificate, Mode::EInjective).empty());
        CHECK(to_json(r)["chi"].is_null());
        CHECK(to_json(r)["exact"] == false);
    }
}

TEST_CASE("cnf export") {
    auto count_clauses = [](const Graph& h, int k) {
        std::ostringstream out;
        export_cnf(h, k, out);
        std::istringstream in(out.str());
        return cnf_header(in);
    };
    auto k3 = generate(Complete{3});
    // per vertex one at-least-one clause and k(k-1)/2 at-most-one clauses; k per edge
    CHECK(count_clauses(k3, 2) == std::pair{6, 3 + 3 + 3 * 2});
    CHECK(count_clauses(k3, 3) == std::pair{9, 3 + 9 + 3 * 3});
    CHECK(count_clauses(Graph::edgeless(4), 1).first == 4);
    std::ostringstream out;
    export_cnf(generate(Path{2}), 1, out);
    CHECK(out.str().find("-1 -2 0") != std::string::npos);
}

TEST_CASE("cnf satisfiability by enumeration") {
    // tiny instances: try every assignment
    auto satisfiable = [](const Graph& h, int k) {
        std::ostringstream out;
        export_cnf(h, k, out);
        std::istringstream in(out.str());
        auto [vars, count] = cnf_header(in);
        std::vector<std::vector<int>> clauses(count);
        for (auto& c : clauses)
            for (int lit; in >> lit && lit != 0;) c.push_back(lit);
        for (unsigned long a = 0; a < (1ul << vars); ++a) {
            bool all = true;
            for (const auto& c : clauses) {
                bool any = false;
                for (int lit : c) {
                    bool val = (a >> (std::abs(lit) - 1)) & 1;
                    any = any || (lit > 0 ? val : !val);
                }
                all = all && any;
            }
            if (all) return true;
        }
        return false;
    };
    auto k3 = generate(Complete{3});
    CHECK_FALSE(satisfiable(k3, 2));
    CHECK(satisfiable(k3, 3));
    CHECK(satisfiable(Graph::edgeless(4), 1));
    CHECK_FALSE(satisfiable(generate(Cycle{5}), 2));
    CHECK(satisfiable(generate(Cycle{4}), 2));
}
