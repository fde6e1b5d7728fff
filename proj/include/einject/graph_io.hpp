#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "einject/graph.hpp"

namespace einject {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"n": int, "edges": [[u,v],...], "labels": [string,...]}; labels optional.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

void write_dot(const Graph& g, std::ostream& out, const std::string& name = "G");
void write_dimacs_col(const Graph& g, std::ostream& out);
Graph read_dimacs_col(std::istream& in);

// Sniffs the first non-blank byte: '{' is JSON, anything else is DIMACS col.
Graph read_graph(std::istream& in);
// "-" reads standard input.
Graph read_graph_file(const std::string& path);

// Coloring files are JSON arrays of 1-based colors indexed by vertex.
nlohmann::json coloring_to_json(const Coloring& c);
std::vector<int> colors_from_json(const nlohmann::json& j);

}  // namespace einject
