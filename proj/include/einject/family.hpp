#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "einject/graph.hpp"

namespace einject {

// Parametric families. Vertex layouts are documented on generate().
namespace family {
struct Path {
    int n;
    bool operator==(const Path&) const = default;
};
struct Cycle {
    int n;
    bool operator==(const Cycle&) const = default;
};
struct Complete {
    int n;
    bool operator==(const Complete&) const = default;
};
struct Star {
    int n;  // leaves
    bool operator==(const Star&) const = default;
};
struct DoubleStar {
    int m, n;  // two adjacent centers with m and n leaves
    bool operator==(const DoubleStar&) const = default;
};
struct Wheel {
    int n;  // hub plus rim C_n
    bool operator==(const Wheel&) const = default;
};
struct CompleteBipartite {
    int m, n;
    bool operator==(const CompleteBipartite&) const = default;
};
struct CompleteMultipartite {
    std::vector<int> parts;
    bool operator==(const CompleteMultipartite&) const = default;
};
struct Fan {
    int m, n;  // m independent vertices joined to P_n
    bool operator==(const Fan&) const = default;
};
struct Ladder {
    int n;  // P_2 x P_n
    bool operator==(const Ladder&) const = default;
};
struct Prism {
    int n;  // P_2 x C_n
    bool operator==(const Prism&) const = default;
};
struct Grid {
    int m, n;  // P_m x P_n
    bool operator==(const Grid&) const = default;
};
struct Cylinder {
    int m, n;  // P_m x C_n
    bool operator==(const Cylinder&) const = default;
};
struct Torus {
    int m, n;  // C_m x C_n
    bool operator==(const Torus&) const = default;
};
struct CliqueBridge {
    int m, n;  // K_m and K_n joined by one edge
    bool operator==(const CliqueBridge&) const = default;
};
struct Fixture {
    std::string name;  // M3..M8
    bool operator==(const Fixture&) const = default;
};
struct Hypercube {
    int d;
    bool operator==(const Hypercube&) const = default;
};

}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Cycle, family::Complete, family::Star, family::DoubleStar,
                 family::Wheel, family::CompleteBipartite, family::CompleteMultipartite,
                 family::Fan, family::Ladder, family::Prism, family::Grid, family::Cylinder,
                 family::Torus, family::CliqueBridge, family::Fixture, family::Hypercube>;

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Text syntax: "cycle:7", "torus:3x7", "fixture:M4", "multipartite:2,2,3".
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
// Throws SpecError when a parameter is out of range.
void validate(const FamilySpec& spec);

// Layouts:
//   Path/Cycle: 0..n-1 in order. Star: center 0. DoubleStar: centers 0,1, then leaves of 0.
//   Wheel: hub 0, rim 1..n. Bipartite/multipartite: parts in consecutive blocks.
//   Fan: independent set 0..m-1, then the path. CliqueBridge: K_m on 0..m-1, K_n after,
//   bridge 0 -- m. Ladder, Prism, Grid, Cylinder, Torus: product layout, row i column j
//   at i*columns + j. Hypercube: bit strings.
Graph generate(const FamilySpec& spec);

enum class ProductKind { Cartesian, Direct, Strong };
std::string_view to_string(ProductKind k);

// Vertex (i,j) sits at i*|V(h)| + j.
Graph product(const Graph& g, const Graph& h, ProductKind kind);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// Names of the transcribed fixtures, and their raw data.
const std::vector<std::string>& fixture_names();
struct FixtureData {
    std::string name;
    std::string note;
    Graph graph;
    std::vector<int> figure_coloring;  // color drawn beside each vertex
};
const FixtureData& fixture(std::string_view name);

}  // namespace einject
