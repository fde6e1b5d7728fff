#include "einject/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace einject {

using nlohmann::json;

json to_json(const Graph& g) {
    json j;
    j["n"] = g.order();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
            throw FormatError("graph JSON needs \"n\" and \"edges\"");
        const auto n = j.at("n").get<long long>();
        if (n < 0) throw FormatError("graph JSON has negative \"n\"");
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw FormatError("each edge must be a two-element array, got " + e.dump());
            auto u = e[0].get<long long>(), v = e[1].get<long long>();
            if (u < 0 || v < 0) throw FormatError("negative vertex in edge " + e.dump());
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        std::vector<std::string> labels;
        if (j.contains("labels") && !j.at("labels").is_null())
            labels = j.at("labels").get<std::vector<std::string>>();
        return Graph::from_edge_list(static_cast<std::size_t>(n), edges, std::move(labels));
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed graph JSON: ") + e.what());
    }
}

void write_dot(const Graph& g, std::ostream& out, const std::string& name) {
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (!g.labels().empty()) out << " [label=" << json(g.labels()[v]).dump() << "]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

void write_dimacs_col(const Graph& g, std::ostream& out) {
    out << "p edge " << g.order() << " " << g.size() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph read_dimacs_col(std::istream& in) {
    std::string line;
    long long n = -1;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long m = 0;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0)
                throw FormatError("bad DIMACS header on line " + std::to_string(lineno));
        } else if (tag == "e") {
            long long u = 0, v = 0;
            if (n < 0) throw FormatError("DIMACS edge before header on line " + std::to_string(lineno));
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw FormatError("bad DIMACS edge on line " + std::to_string(lineno));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw FormatError("unexpected DIMACS line " + std::to_string(lineno) + ": " + line);
        }
    }
    if (n < 0) throw FormatError("DIMACS input has no 'p edge' header");
    return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph read_graph(std::istream& in) {
    in >> std::ws;
    if (in.peek() == '{') {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw FormatError(std::string("malformed graph JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return read_dimacs_col(in);
}

Graph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open graph file '" + path + "'");
    return read_graph(f);
}

json coloring_to_json(const Coloring& c) { return c.colors; }

std::vector<int> colors_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("coloring must be a JSON array of positive integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 1)
            throw FormatError("coloring entry " + x.dump() + " is not a positive integer");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace einject
