#include "einject/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace einject {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kCliqueNodeCap = 2'000'000;
constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

struct Limits {
    Limits(const Budget& b, Clock::time_point start) {
        if (b.time) {
            deadline = start + *b.time;
            has_deadline = true;
        }
        if (b.nodes) node_cap = *b.nodes;
    }
    Clock::time_point deadline{};
    bool has_deadline = false;
    std::uint64_t node_cap = kNoCap;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};

    // Counts one node; false once the budget is gone.
    bool charge(bool check_clock) {
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > node_cap) exhausted = true;
        if (check_clock && has_deadline && Clock::now() > deadline) exhausted = true;
        return !exhausted.load(std::memory_order_relaxed);
    }
};

using Move = std::pair<Vertex, int>;

// Decides k-colorability by DSATUR branching with forward checking.
class KColorSearch {
public:
    enum class Outcome { Found, None, Aborted };

    KColorSearch(const Graph& h, int k, Limits& lim)
        : colors(h.order(), 0), h_(h), k_(k), n_(h.order()), lim_(lim),
          count_(n_ * static_cast<std::size_t>(k + 1), 0), sat_(n_, 0), uncolored_(n_) {}

    std::vector<int> colors;

    // Applies the move; returns false if some uncolored vertex lost every color.
    bool apply(Move m) {
        auto [v, c] = m;
        colors[v] = c;
        --uncolored_;
        used_stack_.push_back(max_used_);
        max_used_ = std::max(max_used_, c);
        bool ok = true;
        h_.neighbors(v).for_each([&](Vertex w) {
            if (colors[w]) return;
            if (count_[idx(w, c)]++ == 0 && ++sat_[w] == k_) ok = false;
        });
        return ok;
    }

    void undo(Move m) {
        auto [v, c] = m;
        h_.neighbors(v).for_each([&](Vertex w) {
            if (colors[w]) return;
            if (--count_[idx(w, c)] == 0) --sat_[w];
        });
        colors[v] = 0;
        ++uncolored_;
        max_used_ = used_stack_.back();
        used_stack_.pop_back();
    }

    // Children of the current node in branching order.
    std::vector<Move> children() const {
        std::vector<Move> out;
        Vertex v = select();
        int limit = std::min(k_, max_used_ + 1);
        for (int c = 1; c <= limit; ++c)
            if (count_[idx(v, c)] == 0) out.emplace_back(v, c);
        return out;
    }

    bool complete() const { return uncolored_ == 0; }

    // cancel(): true when this search should stop early (a better subproblem already won).
    template <class Cancel>
    Outcome search(const Cancel& cancel) {
        if (complete()) return Outcome::Found;
        bool check = (++ticks_ & 1023) == 0;
        if (!lim_.charge(check) || (check && cancel())) return Outcome::Aborted;
        for (Move m : children()) {
            bool ok = apply(m);
            if (ok) {
                Outcome r = search(cancel);
                if (r != Outcome::None) {
                    if (r == Outcome::Aborted) undo(m);
                    return r;
                }
            }
            undo(m);
        }
        return Outcome::None;
    }

    // Frontier nodes at the given depth, in depth-first order.
    void frontier(int depth, std::vector<Move>& path, std::vector<std::vector<Move>>& out) {
        if (depth == 0 || complete()) {
            out.push_back(path);
            return;
        }
        for (Move m : children()) {
            if (apply(m)) {
                path.push_back(m);
                frontier(depth - 1, path, out);
                path.pop_back();
            }
            undo(m);
        }
    }

private:
    std::size_t idx(Vertex v, int c) const { return v * static_cast<std::size_t>(k_ + 1) + c; }

    // Highest saturation, then higher degree, then lower index.
    Vertex select() const {
        Vertex best = 0;
        bool have = false;
        for (Vertex v = 0; v < n_; ++v) {
            if (colors[v]) continue;
            if (!have || sat_[v] > sat_[best] ||
                (sat_[v] == sat_[best] && h_.degree(v) > h_.degree(best))) {
                best = v;
                have = true;
            }
        }
        return best;
    }

    const Graph& h_;
    int k_;
    std::size_t n_;
    Limits& lim_;
    std::vector<int> count_;  // colored neighbors of v with color c
    std::vector<int> sat_;
    std::size_t uncolored_;
    int max_used_ = 0;
    std::vector<int> used_stack_;
    std::uint64_t ticks_ = 0;
};

enum class Decision { Colorable, NotColorable, Unknown };

// Clique vertices are fixed to colors 1..|clique| before branching.
Decision decide_k(const Graph& h, int k, const std::vector<Vertex>& clique, unsigned workers,
                  Limits& lim, std::vector<int>& solution) {
    KColorSearch base(h, k, lim);
    for (std::size_t i = 0; i < clique.size(); ++i)
        if (!base.apply({clique[i], static_cast<int>(i) + 1})) return Decision::NotColorable;

    if (workers <= 1) {
        auto r = base.search([] { return false; });
        if (r == KColorSearch::Outcome::Found) {
            solution = base.colors;
            return Decision::Colorable;
        }
        return r == KColorSearch::Outcome::None ? Decision::NotColorable : Decision::Unknown;
    }

    // Split the top of the tree into ordered subproblems. The lowest-index subproblem that
    // succeeds holds the same coloring a single worker would find first.
    std::vector<std::vector<Move>> subs;
    const std::size_t want = 8 * static_cast<std::size_t>(workers);
    for (int depth = 1; depth <= 12; ++depth) {
        subs.clear();
        std::vector<Move> path;
        base.frontier(depth, path, subs);
        if (subs.size() >= want || subs.empty()) break;
        bool all_complete = true;
        for (const auto& s : subs) all_complete = all_complete && s.size() < std::size_t(depth);
        if (all_complete) break;
    }
    if (subs.empty()) return Decision::NotColorable;

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{kNoIndex};
    std::atomic<bool> aborted{false};
    std::mutex mu;
    auto work = [&] {
        KColorSearch local = base;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= subs.size() || i > best.load()) return;
            bool ok = true;
            for (Move m : subs[i]) ok = local.apply(m) && ok;
            auto r = ok ? local.search([&] { return best.load() < i; })
                        : KColorSearch::Outcome::None;
            if (r == KColorSearch::Outcome::Found) {
                std::lock_guard lock(mu);
                if (i < best.load()) {
                    best = i;
                    solution = local.colors;
                }
                return;
            }
            if (r == KColorSearch::Outcome::Aborted && best.load() > i) aborted = true;
            for (auto it = subs[i].rbegin(); it != subs[i].rend(); ++it) local.undo(*it);
            if (lim.exhausted) return;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    if (best.load() != kNoIndex) return Decision::Colorable;
    if (aborted || lim.exhausted) return Decision::Unknown;
    return Decision::NotColorable;
}

std::vector<int> compact(const std::vector<int>& colors) {
    std::map<int, int> remap;
    for (int c : colors) remap.emplace(c, 0);
    int next = 0;
    for (auto& [from, to] : remap) to = ++next;
    std::vector<int> out(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) out[i] = remap[colors[i]];
    return out;
}

// Carraghan-Pardalos search with a greedy-coloring bound.
class CliqueSearch {
public:
    CliqueSearch(const Graph& h, std::uint64_t cap) : h_(h), cap_(cap) {}

    std::vector<Vertex> run() {
        std::vector<Vertex> order(h_.order());
        for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return h_.degree(a) > h_.degree(b); });
        // greedy seed so a capped run still returns something useful
        for (Vertex v : order) {
            bool ok = true;
            for (Vertex w : best_) ok = ok && h_.adjacent(v, w);
            if (ok) best_.push_back(v);
        }
        std::vector<Vertex> r;
        expand(r, order);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(std::vector<Vertex>& r, const std::vector<Vertex>& p) {
        if (stop_ || ++nodes_ > cap_) {
            stop_ = true;
            return;
        }
        // color p greedily; vertices come out sorted by color class
        std::vector<std::vector<Vertex>> classes;
        for (Vertex v : p) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (Vertex w : classes[c])
                    if (h_.adjacent(v, w)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        std::vector<Vertex> sorted;
        std::vector<std::size_t> bound;
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (Vertex v : classes[c]) {
                sorted.push_back(v);
                bound.push_back(c + 1);
            }
        for (std::size_t i = sorted.size(); i-- > 0;) {
            if (r.size() + bound[i] <= best_.size()) return;
            Vertex v = sorted[i];
            r.push_back(v);
            std::vector<Vertex> next;
            for (std::size_t j = 0; j < i; ++j)
                if (h_.adjacent(v, sorted[j])) next.push_back(sorted[j]);
            if (next.empty()) {
                if (r.size() > best_.size()) best_ = r;
            } else {
                expand(r, next);
            }
            r.pop_back();
            if (stop_) return;
        }
    }

    const Graph& h_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
    std::vector<Vertex> best_;
};

void require_total(const Graph& g, const Coloring& c) {
    if (c.colors.size() != g.order())
        throw ColoringError("coloring has " + std::to_string(c.colors.size()) +
                            " entries for a graph of order " + std::to_string(g.order()));
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        if (c.colors[v] < 1)
            throw ColoringError("vertex " + std::to_string(v) + " has no color (got " +
                                std::to_string(c.colors[v]) + ")");
}

}  // namespace

std::string_view to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Adjacent: return "adjacent";
        case ViolationKind::CommonNeighbor: return "common-neighbor";
        case ViolationKind::P4Ends: return "p4-ends";
    }
    return "?";
}

nlohmann::json to_json(const SolveResult& r) {
    nlohmann::json j;
    j["chi"] = r.chi ? nlohmann::json(*r.chi) : nlohmann::json(nullptr);
    j["exact"] = !r.budget_exhausted;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["mode"] = std::string(to_string(r.certificate.mode));
    j["certificate"] = r.certificate.colors;
    j["witness"] = r.clique;
    j["stats"] = {{"nodes", r.stats.nodes}};
    return j;
}

std::vector<Violation> verify_coloring(const Graph& g, const Coloring& c, Mode mode) {
    require_total(g, c);
    const auto& col = c.colors;
    std::vector<Violation> out;
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> nbrs(n);
    for (Vertex u = 0; u < n; ++u) nbrs[u] = g.neighbors(u).members();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (col[u] != col[v]) continue;
            bool adj = g.adjacent(u, v);
            if ((mode == Mode::Proper || mode == Mode::TwoDistance) && adj) {
                out.push_back({ViolationKind::Adjacent, {u, v}});
                continue;
            }
            if (mode == Mode::Injective || mode == Mode::TwoDistance) {
                for (Vertex w : nbrs[u])
                    if (g.adjacent(w, v)) {
                        out.push_back({ViolationKind::CommonNeighbor, {u, w, v}});
                        break;
                    }
                continue;
            }
            if (mode == Mode::EInjective) {
                // direct walk over u-x-y-v, all four distinct
                bool found = false;
                for (Vertex x : nbrs[u]) {
                    if (found) break;
                    if (x == v) continue;
                    for (Vertex y : nbrs[x]) {
                        if (y == u || y == v) continue;
                        if (g.adjacent(y, v)) {
                            out.push_back({ViolationKind::P4Ends, {u, x, y, v}});
                            found = true;
                            break;
                        }
                    }
                }
            }
        }
    return out;
}

Coloring greedy_coloring(const Graph& g, Mode mode, std::span<const Vertex> order) {
    const Graph h = derived_graph(g, mode);
    const std::size_t n = h.order();
    if (order.size() != n) throw ColoringError("greedy order is not a permutation of the vertices");
    std::vector<bool> seen(n, false);
    for (Vertex v : order) {
        if (v >= n || seen[v]) throw ColoringError("greedy order is not a permutation of the vertices");
        seen[v] = true;
    }
    Coloring out{std::vector<int>(n, 0), mode};
    std::vector<int> mark(n + 2, -1);
    for (Vertex v : order) {
        h.neighbors(v).for_each([&](Vertex w) {
            if (out.colors[w]) mark[out.colors[w]] = static_cast<int>(v);
        });
        int c = 1;
        while (mark[c] == static_cast<int>(v)) ++c;
        out.colors[v] = c;
    }
    return out;
}

std::vector<int> dsatur_heuristic(const Graph& h) {
    const std::size_t n = h.order();
    std::vector<int> color(n, 0);
    std::vector<std::vector<bool>> seen(n);
    std::vector<int> sat(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex v = 0;
        bool have = false;
        for (Vertex u = 0; u < n; ++u) {
            if (color[u]) continue;
            if (!have || sat[u] > sat[v] || (sat[u] == sat[v] && h.degree(u) > h.degree(v))) {
                v = u;
                have = true;
            }
        }
        int c = 1;
        while (c < static_cast<int>(seen[v].size()) && seen[v][c]) ++c;
        color[v] = c;
        h.neighbors(v).for_each([&](Vertex w) {
            if (color[w]) return;
            if (seen[w].size() <= static_cast<std::size_t>(c)) seen[w].resize(c + 1, false);
            if (!seen[w][c]) {
                seen[w][c] = true;
                ++sat[w];
            }
        });
    }
    return color;
}

std::vector<Vertex> max_clique_lower_bound(const Graph& h, const Budget& budget) {
    std::uint64_t cap = kCliqueNodeCap;
    if (budget.nodes) cap = std::min(cap, std::max<std::uint64_t>(*budget.nodes, 1));
    return CliqueSearch(h, cap).run();
}

SolveResult solve_proper(const Graph& h, const SolveOptions& opts) {
    const auto start = Clock::now();
    SolveResult res;
    res.certificate.mode = Mode::Proper;
    if (h.order() == 0) {
        res.chi = 0;
        return res;
    }
    Limits lim(opts.budget, start);

    res.clique = max_clique_lower_bound(h, opts.budget);
    // keep the clique in DSATUR order so color i goes to the i-th clique vertex
    std::stable_sort(res.clique.begin(), res.clique.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    std::vector<int> best = dsatur_heuristic(h);
    int ub = *std::max_element(best.begin(), best.end());
    int lb = static_cast<int>(res.clique.size());

    for (int k = lb; k < ub; ++k) {
        std::vector<int> sol;
        auto d = decide_k(h, k, res.clique, std::max(1U, opts.workers), lim, sol);
        if (d == Decision::Colorable) {
            best = compact(sol);
            ub = k;
            break;
        }
        if (d == Decision::Unknown) {
            res.budget_exhausted = true;
            lb = k;
            break;
        }
        lb = k + 1;
    }
    if (!res.budget_exhausted) lb = ub;

    res.lower_bound = lb;
    res.upper_bound = ub;
    if (!res.budget_exhausted) res.chi = ub;
    res.certificate.colors = std::move(best);
    res.stats.nodes = lim.nodes.load();
    res.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return res;
}

SolveResult chromatic_number(const Graph& g, Mode mode, const SolveOptions& opts) {
    auto res = solve_proper(derived_graph(g, mode), opts);
    res.certificate.mode = mode;
    return res;
}

int brute_force_chromatic(const Graph& h) {
    const std::size_t n = h.order();
    if (n > kBruteForceCap)
        throw std::invalid_argument("brute_force_chromatic is capped at " +
                                    std::to_string(kBruteForceCap) + " vertices, got " +
                                    std::to_string(n));
    if (n == 0) return 0;
    const auto edges = h.edges();
    std::vector<int> a(n, 0);
    int best = static_cast<int>(n);
    // every set partition as a restricted growth string
    auto rec = [&](auto&& self, std::size_t i, int blocks) -> void {
        if (i == n) {
            for (auto [u, v] : edges)
                if (a[u] == a[v]) return;
            best = std::min(best, blocks);
            return;
        }
        for (int c = 0; c <= blocks && c < static_cast<int>(n); ++c) {
            a[i] = c;
            self(self, i + 1, std::max(blocks, c + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

void export_cnf(const Graph& h, int k, std::ostream& sink) {
    if (k < 1) throw std::invalid_argument("export_cnf needs k >= 1, got " + std::to_string(k));
    const std::size_t n = h.order();
    const auto edges = h.edges();
    const std::size_t kk = static_cast<std::size_t>(k);
    auto var = [kk](std::size_t v, std::size_t c) { return v * kk + c + 1; };
    const std::size_t clauses = n + n * kk * (kk - 1) / 2 + edges.size() * kk;
    sink << "c " << n << "-vertex graph, " << k << " colors\n";
    sink << "p cnf " << n * kk << " " << clauses << "\n";
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t c = 0; c < kk; ++c) sink << var(v, c) << " ";
        sink << "0\n";
        for (std::size_t c = 0; c < kk; ++c)
            for (std::size_t d = c + 1; d < kk; ++d) sink << "-" << var(v, c) << " -" << var(v, d) << " 0\n";
    }
    for (auto [u, v] : edges)
        for (std::size_t c = 0; c < kk; ++c) sink << "-" << var(u, c) << " -" << var(v, c) << " 0\n";
    sink.flush();
    if (!sink) throw std::runtime_error("failed writing CNF output");
}

}  // namespace einject
