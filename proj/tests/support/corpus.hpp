#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "einject/graph.hpp"

namespace einject::testing {

using Rng = std::mt19937_64;

Graph random_graph(std::size_t n, double p, Rng& rng);
// Fixed-seed corpus: orders 1..max_n, edge densities spread over (0,1).
std::vector<Graph> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed);
// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(std::size_t n, Rng& rng);
// k-regular bipartite on 2*side vertices: k shifted copies of a random perfect matching.
Graph random_regular_bipartite(std::size_t side, std::size_t k, Rng& rng);
// Random graph with at least one edge and no isolated vertex.
Graph random_graph_without_isolated(std::size_t n, Rng& rng);

// Oracles written straight from the definitions, sharing no code with the library.
namespace oracle {
// u~v iff some simple path u-x-y-v exists, by enumerating all ordered 4-tuples.
std::vector<std::vector<bool>> three_step(const Graph& g);
// All-pairs distances by Floyd-Warshall; -1 for unreachable.
std::vector<std::vector<int>> distances(const Graph& g);
// Smallest k with a valid coloring, trying every assignment of k colors.
int chromatic_exhaustive(const std::vector<std::vector<bool>>& conflict);
// Conflict relation of each mode, built from distances and common neighbors.
std::vector<std::vector<bool>> conflicts(const Graph& g, Mode mode);
}  // namespace oracle

}  // namespace einject::testing
