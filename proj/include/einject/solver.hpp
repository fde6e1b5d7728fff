#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "einject/graph.hpp"

namespace einject {

struct Budget {
    std::optional<std::chrono::milliseconds> time;
    std::optional<std::uint64_t> nodes;

    // 60 s or 10^7 search nodes, whichever comes first.
    static Budget defaults() { return {std::chrono::milliseconds(60'000), 10'000'000}; }
    static Budget unlimited() { return {}; }
};

struct SolveOptions {
    Budget budget = Budget::defaults();
    unsigned workers = 1;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::chrono::microseconds elapsed{0};
};

struct SolveResult {
    std::optional<int> chi;        // empty when the budget ran out first
    int lower_bound = 0;
    int upper_bound = 0;
    bool budget_exhausted = false;
    Coloring certificate;          // uses upper_bound colors
    std::vector<Vertex> clique;    // lower-bound witness in the derived graph
    SolveStats stats;
};

nlohmann::json to_json(const SolveResult& r);

enum class ViolationKind { Adjacent, CommonNeighbor, P4Ends };
std::string_view to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    // The offending path in the original graph: (u,v), (u,w,v) or (u,x,y,v).
    // Its two ends share a color.
    std::vector<Vertex> witness;
};

class ColoringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws ColoringError on a partial coloring (wrong length or a color < 1).
std::vector<Violation> verify_coloring(const Graph& g, const Coloring& c, Mode mode);

// First-fit on the derived graph in the given order.
Coloring greedy_coloring(const Graph& g, Mode mode, std::span<const Vertex> order);
// DSATUR without backtracking; colors 1..k.
std::vector<int> dsatur_heuristic(const Graph& h);

// Exact chromatic number of h, i.e. proper coloring of h itself.
SolveResult solve_proper(const Graph& h, const SolveOptions& opts = {});
// Exact chromatic number of derived_graph(g, mode).
SolveResult chromatic_number(const Graph& g, Mode mode, const SolveOptions& opts = {});

// Exhaustive over all set partitions; independent of the branch-and-bound code.
inline constexpr std::size_t kBruteForceCap = 10;
int brute_force_chromatic(const Graph& h);

// Best clique found within the node limit (exact when the limit is not hit).
std::vector<Vertex> max_clique_lower_bound(const Graph& h, const Budget& budget = Budget::defaults());

// DIMACS CNF: variable v*k + c + 1 means vertex v takes color c+1.
void export_cnf(const Graph& h, int k, std::ostream& sink);

}  // namespace einject
