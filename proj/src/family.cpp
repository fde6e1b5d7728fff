#include "einject/family.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace einject {

namespace {

using namespace family;

constexpr int kMaxHypercube = 16;

std::vector<int> parse_ints(std::string_view text, std::string_view whole) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find_first_of("x,", pos);
        if (end == std::string_view::npos) end = text.size();
        auto piece = text.substr(pos, end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw SpecError("bad number '" + std::string(piece) + "' in family spec '" +
                            std::string(whole) + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

void need(bool ok, const std::string& what) {
    if (!ok) throw SpecError(what);
}

std::vector<std::string> grid_labels(int rows, int cols) {
    std::vector<std::string> out;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            out.push_back("v_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    return out;
}

Graph with_labels(const Graph& g, std::vector<std::string> labels) {
    auto e = g.edges();
    return Graph::from_edge_list(g.order(), e, std::move(labels));
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(static_cast<std::size_t>(n), e);
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(static_cast<std::size_t>(n), e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(static_cast<std::size_t>(n), e);
}

Graph multipartite(const std::vector<int>& parts) {
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], int(p));
    std::vector<Edge> e;
    for (std::size_t i = 0; i < part_of.size(); ++i)
        for (std::size_t j = i + 1; j < part_of.size(); ++j)
            if (part_of[i] != part_of[j]) e.emplace_back(i, j);
    return Graph::from_edge_list(part_of.size(), e);
}

struct Generator {
    Graph operator()(const Path& s) const { return path_graph(s.n); }
    Graph operator()(const Cycle& s) const { return cycle_graph(s.n); }
    Graph operator()(const Complete& s) const { return complete_graph(s.n); }
    Graph operator()(const Star& s) const { return multipartite({1, s.n}); }
    Graph operator()(const DoubleStar& s) const {
        std::vector<Edge> e{{0, 1}};
        for (int i = 0; i < s.m; ++i) e.emplace_back(0, 2 + i);
        for (int i = 0; i < s.n; ++i) e.emplace_back(1, 2 + s.m + i);
        return Graph::from_edge_list(static_cast<std::size_t>(2 + s.m + s.n), e);
    }
    Graph operator()(const Wheel& s) const { return join(Graph::edgeless(1), cycle_graph(s.n)); }
    Graph operator()(const CompleteBipartite& s) const { return multipartite({s.m, s.n}); }
    Graph operator()(const CompleteMultipartite& s) const { return multipartite(s.parts); }
    Graph operator()(const Fan& s) const {
        return join(Graph::edgeless(static_cast<std::size_t>(s.m)), path_graph(s.n));
    }
    Graph operator()(const Ladder& s) const {
        return with_labels(product(path_graph(2), path_graph(s.n), ProductKind::Cartesian),
                           grid_labels(2, s.n));
    }
    Graph operator()(const Prism& s) const {
        return with_labels(product(path_graph(2), cycle_graph(s.n), ProductKind::Cartesian),
                           grid_labels(2, s.n));
    }
    Graph operator()(const Grid& s) const {
        return with_labels(product(path_graph(s.m), path_graph(s.n), ProductKind::Cartesian),
                           grid_labels(s.m, s.n));
    }
    Graph operator()(const Cylinder& s) const {
        return with_labels(product(path_graph(s.m), cycle_graph(s.n), ProductKind::Cartesian),
                           grid_labels(s.m, s.n));
    }
    Graph operator()(const Torus& s) const {
        return with_labels(product(cycle_graph(s.m), cycle_graph(s.n), ProductKind::Cartesian),
                           grid_labels(s.m, s.n));
    }
    Graph operator()(const CliqueBridge& s) const {
        auto g = disjoint_union(complete_graph(s.m), complete_graph(s.n));
        auto e = g.edges();
        e.emplace_back(0, s.m);
        return Graph::from_edge_list(g.order(), e);
    }
    Graph operator()(const Fixture& s) const { return fixture(s.name).graph; }
    Graph operator()(const Hypercube& s) const {
        const std::size_t n = std::size_t{1} << s.d;
        std::vector<Edge> e;
        for (std::size_t v = 0; v < n; ++v)
            for (int b = 0; b < s.d; ++b) {
                std::size_t w = v ^ (std::size_t{1} << b);
                if (v < w) e.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
            }
        return Graph::from_edge_list(n, e);
    }
};

struct Validator {
    std::string text;
    void at_least(int v, int lo, const char* what) const {
        need(v >= lo, text + ": " + what + " must be >= " + std::to_string(lo) + ", got " +
                          std::to_string(v));
    }
    void operator()(const Path& s) const { at_least(s.n, 1, "n"); }
    void operator()(const Cycle& s) const { at_least(s.n, 3, "cycle length"); }
    void operator()(const Complete& s) const { at_least(s.n, 1, "n"); }
    void operator()(const Star& s) const { at_least(s.n, 1, "leaf count"); }
    void operator()(const DoubleStar& s) const { at_least(s.m, 1, "m"); at_least(s.n, 1, "n"); }
    void operator()(const Wheel& s) const { at_least(s.n, 3, "rim length"); }
    void operator()(const CompleteBipartite& s) const { at_least(s.m, 1, "m"); at_least(s.n, 1, "n"); }
    void operator()(const CompleteMultipartite& s) const {
        need(s.parts.size() >= 2, text + ": needs at least 2 parts");
        for (int p : s.parts) at_least(p, 1, "part size");
    }
    void operator()(const Fan& s) const { at_least(s.m, 1, "m"); at_least(s.n, 1, "n"); }
    void operator()(const Ladder& s) const { at_least(s.n, 1, "n"); }
    void operator()(const Prism& s) const { at_least(s.n, 3, "cycle length"); }
    void operator()(const Grid& s) const { at_least(s.m, 1, "m"); at_least(s.n, 1, "n"); }
    void operator()(const Cylinder& s) const { at_least(s.m, 1, "m"); at_least(s.n, 3, "cycle length"); }
    void operator()(const Torus& s) const { at_least(s.m, 3, "cycle length"); at_least(s.n, 3, "cycle length"); }
    void operator()(const CliqueBridge& s) const { at_least(s.m, 1, "m"); at_least(s.n, 1, "n"); }
    void operator()(const Fixture& s) const {
        const auto& names = fixture_names();
        need(std::find(names.begin(), names.end(), s.name) != names.end(),
             text + ": unknown fixture (expected M3..M8)");
    }
    void operator()(const Hypercube& s) const {
        at_least(s.d, 1, "dimension");
        need(s.d <= kMaxHypercube, text + ": dimension above " + std::to_string(kMaxHypercube));
    }
};

std::string join_ints(const std::vector<int>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

struct Printer {
    static std::string one(const char* name, int a) { return std::string(name) + ":" + std::to_string(a); }
    static std::string two(const char* name, int a, int b) {
        return std::string(name) + ":" + std::to_string(a) + "x" + std::to_string(b);
    }
    std::string operator()(const Path& s) const { return one("path", s.n); }
    std::string operator()(const Cycle& s) const { return one("cycle", s.n); }
    std::string operator()(const Complete& s) const { return one("complete", s.n); }
    std::string operator()(const Star& s) const { return one("star", s.n); }
    std::string operator()(const DoubleStar& s) const { return two("doublestar", s.m, s.n); }
    std::string operator()(const Wheel& s) const { return one("wheel", s.n); }
    std::string operator()(const CompleteBipartite& s) const { return two("bipartite", s.m, s.n); }
    std::string operator()(const CompleteMultipartite& s) const {
        return "multipartite:" + join_ints(s.parts, ',');
    }
    std::string operator()(const Fan& s) const { return two("fan", s.m, s.n); }
    std::string operator()(const Ladder& s) const { return one("ladder", s.n); }
    std::string operator()(const Prism& s) const { return one("prism", s.n); }
    std::string operator()(const Grid& s) const { return two("grid", s.m, s.n); }
    std::string operator()(const Cylinder& s) const { return two("cylinder", s.m, s.n); }
    std::string operator()(const Torus& s) const { return two("torus", s.m, s.n); }
    std::string operator()(const CliqueBridge& s) const { return two("cliquebridge", s.m, s.n); }
    std::string operator()(const Fixture& s) const { return "fixture:" + s.name; }
    std::string operator()(const Hypercube& s) const { return one("hypercube", s.d); }
};

}  // namespace

FamilySpec parse_family(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw SpecError("family spec '" + std::string(text) + "' needs the form name:params");
    std::string name(text.substr(0, colon));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    auto rest = text.substr(colon + 1);

    FamilySpec spec;
    if (name == "fixture") {
        std::string f(rest);
        if (!f.empty()) f[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(f[0])));
        spec = Fixture{f};
    } else {
        auto xs = parse_ints(rest, text);
        auto arity = [&](std::size_t k) {
            need(xs.size() == k, "family '" + name + "' takes " + std::to_string(k) +
                                     " parameter(s), got '" + std::string(rest) + "'");
        };
        if (name == "path") { arity(1); spec = Path{xs[0]}; }
        else if (name == "cycle") { arity(1); spec = Cycle{xs[0]}; }
        else if (name == "complete") { arity(1); spec = Complete{xs[0]}; }
        else if (name == "star") { arity(1); spec = Star{xs[0]}; }
        else if (name == "doublestar") { arity(2); spec = DoubleStar{xs[0], xs[1]}; }
        else if (name == "wheel") { arity(1); spec = Wheel{xs[0]}; }
        else if (name == "bipartite") { arity(2); spec = CompleteBipartite{xs[0], xs[1]}; }
        else if (name == "multipartite") { spec = CompleteMultipartite{xs}; }
        else if (name == "fan") { arity(2); spec = Fan{xs[0], xs[1]}; }
        else if (name == "ladder") { arity(1); spec = Ladder{xs[0]}; }
        else if (name == "prism") { arity(1); spec = Prism{xs[0]}; }
        else if (name == "grid") { arity(2); spec = Grid{xs[0], xs[1]}; }
        else if (name == "cylinder") { arity(2); spec = Cylinder{xs[0], xs[1]}; }
        else if (name == "torus") { arity(2); spec = Torus{xs[0], xs[1]}; }
        else if (name == "cliquebridge") { arity(2); spec = CliqueBridge{xs[0], xs[1]}; }
        else if (name == "hypercube") { arity(1); spec = Hypercube{xs[0]}; }
        else throw SpecError("unknown family '" + name + "'");
    }
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& spec) { return std::visit(Printer{}, spec); }

void validate(const FamilySpec& spec) { std::visit(Validator{to_string(spec)}, spec); }

Graph generate(const FamilySpec& spec) {
    validate(spec);
    return std::visit(Generator{}, spec);
}

std::string_view to_string(ProductKind k) {
    switch (k) {
        case ProductKind::Cartesian: return "cartesian";
        case ProductKind::Direct: return "direct";
        case ProductKind::Strong: return "strong";
    }
    throw SpecError("unknown product kind");
}

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
    const std::size_t a = g.order(), b = h.order();
    std::vector<Edge> e;
    auto id = [b](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * b + j); };
    const bool cart = kind != ProductKind::Direct;
    const bool direct = kind != ProductKind::Cartesian;
    auto add = [&](Vertex x, Vertex y) {
        if (x < y) e.emplace_back(x, y);
    };
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) {
            if (cart) {
                h.neighbors(j).for_each([&](Vertex l) { add(id(i, j), id(i, l)); });
                g.neighbors(i).for_each([&](Vertex k) { add(id(i, j), id(k, j)); });
            }
            if (direct)
                g.neighbors(i).for_each([&](Vertex k) {
                    h.neighbors(j).for_each([&](Vertex l) { add(id(i, j), id(k, l)); });
                });
        }
    std::vector<std::string> labels;
    if (!g.labels().empty() && !h.labels().empty())
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j)
                labels.push_back("(" + g.labels()[i] + "," + h.labels()[j] + ")");
    return Graph::from_edge_list(a * b, e, std::move(labels));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const auto shift = static_cast<Vertex>(g.order());
    auto e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
    return Graph::from_edge_list(g.order() + h.order(), e);
}

Graph join(const Graph& g, const Graph& h) {
    const auto shift = static_cast<Vertex>(g.order());
    auto e = disjoint_union(g, h).edges();
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v) e.emplace_back(u, v + shift);
    return Graph::from_edge_list(g.order() + h.order(), e);
}

}  // namespace einject
