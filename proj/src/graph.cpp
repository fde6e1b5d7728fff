#include "einject/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace einject {

namespace {

std::string pair_text(std::size_t u, std::size_t v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_vertex(const Graph& g, Vertex v) {
    if (v >= g.order())
        throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(g.order()));
}

}  // namespace

Graph::Graph(std::vector<VertexSet> rows, std::vector<std::string> labels)
    : rows_(std::move(rows)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != rows_.size())
        throw GraphError("label count " + std::to_string(labels_.size()) +
                         " does not match order " + std::to_string(rows_.size()));
    degrees_.resize(rows_.size());
    std::size_t total = 0;
    for (std::size_t v = 0; v < rows_.size(); ++v) {
        degrees_[v] = rows_[v].count();
        total += degrees_[v];
    }
    edge_count_ = total / 2;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges,
                            std::vector<std::string> labels) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge " + pair_text(u, v) + " has an endpoint outside 0.." +
                             std::to_string(n == 0 ? 0 : n - 1));
        if (u == v) throw GraphError("self-loop " + pair_text(u, v));
        rows[u].set(v);
        rows[v].set(u);
    }
    return Graph(std::move(rows), std::move(labels));
}

Graph Graph::from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels) {
    const std::size_t n = rows.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (rows[u].capacity() != n) throw GraphError("adjacency row has wrong width");
        if (rows[u].test(u)) throw GraphError("self-loop " + pair_text(u, u));
        rows[u].for_each([&](Vertex v) {
            if (!rows[v].test(u)) throw GraphError("asymmetric adjacency at " + pair_text(u, v));
        });
    }
    return Graph(std::move(rows), std::move(labels));
}

std::size_t Graph::max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::min_degree() const {
    return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < rows_.size(); ++u)
        rows_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

std::string Graph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::Proper: return "proper";
        case Mode::Injective: return "injective";
        case Mode::TwoDistance: return "twodistance";
        case Mode::EInjective: return "einjective";
    }
    throw GraphError("unknown mode");
}

Mode parse_mode(std::string_view s) {
    for (Mode m : {Mode::Proper, Mode::Injective, Mode::TwoDistance, Mode::EInjective})
        if (to_string(m) == s) return m;
    throw GraphError("unknown mode '" + std::string(s) +
                     "' (expected proper, injective, twodistance or einjective)");
}

int Coloring::k() const {
    std::set<int> seen(colors.begin(), colors.end());
    return static_cast<int>(seen.size());
}

bool has_p4_between(const Graph& g, Vertex u, Vertex v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw GraphError("P4 query needs two distinct vertices, got " + pair_text(u, v));
    bool found = false;
    const VertexSet& nv = g.neighbors(v);
    g.neighbors(u).for_each([&](Vertex x) {
        if (found || x == v) return;
        // y in N(x) & N(v), y != u; y != x and y != v hold since there are no loops
        if (g.neighbors(x).intersects_except(nv, u)) found = true;
    });
    return found;
}

std::optional<std::vector<Vertex>> find_p4_between(const Graph& g, Vertex u, Vertex v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw GraphError("P4 query needs two distinct vertices, got " + pair_text(u, v));
    for (Vertex x : g.neighbors(u).members()) {
        if (x == v) continue;
        auto common = g.neighbors(x) & g.neighbors(v);
        common.reset(u);
        for (Vertex y : common.members()) return std::vector<Vertex>{u, x, y, v};
    }
    return std::nullopt;
}

Graph three_step_graph(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u) {
        g.neighbors(u).for_each([&](Vertex x) {
            VertexSet ends(n);
            g.neighbors(x).for_each([&](Vertex y) {
                if (y != u) ends |= g.neighbors(y);
            });
            ends.reset(x);
            ends.reset(u);
            rows[u] |= ends;
        });
    }
    return Graph::from_rows(std::move(rows), g.labels());
}

Graph two_step_graph(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u) {
        g.neighbors(u).for_each([&](Vertex x) { rows[u] |= g.neighbors(x); });
        rows[u].reset(u);
    }
    return Graph::from_rows(std::move(rows), g.labels());
}

Graph square_graph(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u) {
        rows[u] = g.neighbors(u);
        g.neighbors(u).for_each([&](Vertex x) { rows[u] |= g.neighbors(x); });
        rows[u].reset(u);
    }
    return Graph::from_rows(std::move(rows), g.labels());
}

Graph derived_graph(const Graph& g, Mode mode) {
    switch (mode) {
        case Mode::Proper: return g;
        case Mode::Injective: return two_step_graph(g);
        case Mode::TwoDistance: return square_graph(g);
        case Mode::EInjective: return three_step_graph(g);
    }
    throw GraphError("unknown mode");
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex src) {
    check_vertex(g, src);
    std::vector<std::optional<std::size_t>> dist(g.order());
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        g.neighbors(u).for_each([&](Vertex w) {
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        for (const auto& d : distances_from(g, s)) {
            if (!d) return std::nullopt;
            best = std::max(best, *d);
        }
    }
    return best;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        auto dist = distances_from(g, s);
        for (Vertex v = 0; v < g.order(); ++v)
            if (dist[v]) {
                seen[v] = true;
                comp.push_back(v);
            }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(g, keep[i]);
        if (!g.labels().empty()) labels.push_back(g.labels()[keep[i]]);
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return Graph::from_edge_list(keep.size(), edges, std::move(labels));
}

std::string_view to_string(StructureKind k) {
    switch (k) {
        case StructureKind::AdjImpliesP4: return "adj-implies-p4";
        case StructureKind::P4ImpliesAdj: return "p4-implies-adj";
        case StructureKind::NeighborsArePairwiseP4: return "neighbors-pairwise-p4";
        case StructureKind::P4ImpliesCommonNeighbor: return "p4-implies-common-neighbor";
        case StructureKind::P3PairsAreP4Ends: return "p3-pairs-are-p4-ends";
        case StructureKind::P4ImpliesAdjOrCommonNeighbor: return "p4-implies-adj-or-common-neighbor";
    }
    throw GraphError("unknown structure predicate tag");
}

StructureKind parse_structure_kind(std::string_view s) {
    for (auto k : {StructureKind::AdjImpliesP4, StructureKind::P4ImpliesAdj,
                   StructureKind::NeighborsArePairwiseP4, StructureKind::P4ImpliesCommonNeighbor,
                   StructureKind::P3PairsAreP4Ends, StructureKind::P4ImpliesAdjOrCommonNeighbor})
        if (to_string(k) == s) return k;
    throw GraphError("unknown structure predicate tag '" + std::string(s) + "'");
}

bool structure_predicate(const Graph& g, StructureKind kind) {
    const std::size_t n = g.order();
    const Graph s3 = three_step_graph(g);
    auto common_neighbor = [&](Vertex a, Vertex b) {
        return g.neighbors(a).intersects(g.neighbors(b));
    };
    // every pair sharing a neighbor of some vertex is a P4 end pair
    auto neighbors_pairwise = [&] {
        for (Vertex c = 0; c < n; ++c) {
            auto nb = g.neighbors(c).members();
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!s3.adjacent(nb[i], nb[j])) return false;
        }
        return true;
    };

    switch (kind) {
        case StructureKind::AdjImpliesP4:
            for (auto [u, v] : g.edges())
                if (!s3.adjacent(u, v)) return false;
            return true;
        case StructureKind::P4ImpliesAdj:
            for (auto [u, v] : s3.edges())
                if (!g.adjacent(u, v)) return false;
            return true;
        case StructureKind::NeighborsArePairwiseP4:
            return neighbors_pairwise();
        case StructureKind::P4ImpliesCommonNeighbor:
            for (auto [u, v] : s3.edges())
                if (!common_neighbor(u, v)) return false;
            return true;
        case StructureKind::P3PairsAreP4Ends: {
            // path a-c-b: pairs (a,c), (c,b) and (a,b) must all be P4 ends
            for (Vertex c = 0; c < n; ++c) {
                if (g.degree(c) < 2) continue;
                bool bad = false;
                g.neighbors(c).for_each([&](Vertex a) { bad = bad || !s3.adjacent(a, c); });
                if (bad) return false;
            }
            return neighbors_pairwise();
        }
        case StructureKind::P4ImpliesAdjOrCommonNeighbor:
            for (auto [u, v] : s3.edges())
                if (!g.adjacent(u, v) && !common_neighbor(u, v)) return false;
            return true;
    }
    throw GraphError("unknown structure predicate tag");
}

}  // namespace einject
