#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "einject/vertex_set.hpp"

namespace einject {

using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges,
                                std::vector<std::string> labels = {});
    static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    static Graph edgeless(std::size_t n) { return from_edge_list(n, {}); }
    // Rows must be symmetric and loop free; checked.
    static Graph from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels = {});

    std::size_t order() const { return rows_.size(); }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return degrees_[v]; }
    std::size_t max_degree() const;
    std::size_t min_degree() const;

    // Each edge once as (u,v) with u < v, sorted.
    std::vector<Edge> edges() const;
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Vertex v) const;

    bool operator==(const Graph& o) const { return rows_ == o.rows_; }

private:
    Graph(std::vector<VertexSet> rows, std::vector<std::string> labels);

    std::vector<VertexSet> rows_;
    std::vector<std::size_t> degrees_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

enum class Mode { Proper, Injective, TwoDistance, EInjective };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view s);

struct Coloring {
    std::vector<int> colors;  // colors[v] >= 1
    Mode mode = Mode::Proper;

    // Number of distinct colors used.
    int k() const;
};

// Throws GraphError if u == v or either is out of range.
bool has_p4_between(const Graph& g, Vertex u, Vertex v);
// A concrete u-x-y-v path, or nullopt.
std::optional<std::vector<Vertex>> find_p4_between(const Graph& g, Vertex u, Vertex v);

Graph three_step_graph(const Graph& g);
Graph square_graph(const Graph& g);
Graph two_step_graph(const Graph& g);
Graph derived_graph(const Graph& g, Mode mode);

// BFS distances from src; unreachable entries are nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex src);
// nullopt means infinite (disconnected). Empty and single-vertex graphs give 0.
std::optional<std::size_t> diameter(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> components(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

enum class StructureKind {
    AdjImpliesP4,
    P4ImpliesAdj,
    NeighborsArePairwiseP4,
    P4ImpliesCommonNeighbor,
    P3PairsAreP4Ends,
    P4ImpliesAdjOrCommonNeighbor,
};

std::string_view to_string(StructureKind k);
StructureKind parse_structure_kind(std::string_view s);
bool structure_predicate(const Graph& g, StructureKind kind);

}  // namespace einject
