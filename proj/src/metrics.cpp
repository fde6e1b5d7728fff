#include "einject/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace einject {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

void check_cap(const Graph& g, const char* what) {
    if (g.order() > kMetricCap)
        throw std::invalid_argument(std::string(what) + " is capped at " +
                                    std::to_string(kMetricCap) + " vertices, got " +
                                    std::to_string(g.order()));
}

// Rows of `conflict` restricted to one component, reindexed 0..|comp|-1.
std::vector<Mask> local_rows(const Graph& conflict, const std::vector<Vertex>& comp) {
    std::vector<Mask> rows(comp.size(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp.size(); ++j)
            if (i != j && conflict.adjacent(comp[i], comp[j])) rows[i] |= bit(j);
    return rows;
}

class IndependentSet {
public:
    explicit IndependentSet(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    Mask run() {
        Mask all = adj_.size() == 64 ? ~Mask{0} : bit(adj_.size()) - 1;
        go(all, 0);
        return best_;
    }

private:
    void go(Mask p, Mask r) {
        int have = std::popcount(r);
        if (!p) {
            if (have > std::popcount(best_) || !found_) {
                best_ = r;
                found_ = true;
            }
            return;
        }
        if (found_ && have + std::popcount(p) <= std::popcount(best_)) return;
        std::size_t v = static_cast<std::size_t>(std::countr_zero(p));
        go(p & ~adj_[v] & ~bit(v), r | bit(v));
        // leaving v out only helps if some neighbor of v is still available
        if (adj_[v] & p) go(p & ~bit(v), r);
    }

    std::vector<Mask> adj_;
    Mask best_ = 0;
    bool found_ = false;
};

class Dominator {
public:
    explicit Dominator(std::vector<Mask> closed) : closed_(std::move(closed)) {
        for (Mask m : closed_) max_cover_ = std::max(max_cover_, std::popcount(m));
    }

    Mask run() {
        const std::size_t n = closed_.size();
        best_ = n == 64 ? ~Mask{0} : bit(n) - 1;
        go(best_, 0);
        return best_;
    }

private:
    void go(Mask undominated, Mask d) {
        int size = std::popcount(d);
        if (!undominated) {
            if (size < std::popcount(best_)) best_ = d;
            return;
        }
        int need = (std::popcount(undominated) + max_cover_ - 1) / max_cover_;
        if (size + need >= std::popcount(best_)) return;
        // branch on the undominated vertex with the fewest dominators
        std::size_t u = 0;
        int fewest = 65;
        for (Mask m = undominated; m; m &= m - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(m));
            if (std::popcount(closed_[v]) < fewest) {
                fewest = std::popcount(closed_[v]);
                u = v;
            }
        }
        for (Mask m = closed_[u]; m; m &= m - 1) {
            auto w = static_cast<std::size_t>(std::countr_zero(m));
            go(undominated & ~closed_[w], d | bit(w));
        }
    }

    std::vector<Mask> closed_;
    int max_cover_ = 1;
    Mask best_ = 0;
};

std::vector<Vertex> expand(Mask m, const std::vector<Vertex>& comp) {
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(comp[static_cast<std::size_t>(std::countr_zero(m))]);
    return out;
}

MetricResult finish(std::vector<Vertex> w) {
    std::sort(w.begin(), w.end());
    return {static_cast<int>(w.size()), std::move(w)};
}

// Maximum independent set of the conflict graph, solved per component of g.
MetricResult max_independent(const Graph& g, const Graph& conflict) {
    std::vector<Vertex> w;
    for (const auto& comp : components(g)) {
        auto picked = expand(IndependentSet(local_rows(conflict, comp)).run(), comp);
        w.insert(w.end(), picked.begin(), picked.end());
    }
    return finish(std::move(w));
}

}  // namespace

nlohmann::json to_json(const MetricResult& r) {
    return {{"value", r.value}, {"witness", r.witness}};
}

MetricResult packing_number(const Graph& g) {
    check_cap(g, "packing_number");
    return max_independent(g, square_graph(g));
}

MetricResult open_packing_number(const Graph& g) {
    check_cap(g, "open_packing_number");
    return max_independent(g, two_step_graph(g));
}

MetricResult two_distance_domination_number(const Graph& g) {
    check_cap(g, "two_distance_domination_number");
    const Graph sq = square_graph(g);
    std::vector<Vertex> w;
    for (const auto& comp : components(g)) {
        auto rows = local_rows(sq, comp);
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] |= bit(i);
        auto picked = expand(Dominator(std::move(rows)).run(), comp);
        w.insert(w.end(), picked.begin(), picked.end());
    }
    return finish(std::move(w));
}

}  // namespace einject
