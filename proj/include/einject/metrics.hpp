#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "einject/graph.hpp"

namespace einject {

struct MetricResult {
    int value = 0;
    std::vector<Vertex> witness;  // sorted, |witness| == value
};

nlohmann::json to_json(const MetricResult& r);

// Exhaustive searches; throw std::invalid_argument above the cap.
inline constexpr std::size_t kMetricCap = 32;

// Largest set with pairwise-disjoint closed neighborhoods.
MetricResult packing_number(const Graph& g);
// Largest set with pairwise-disjoint open neighborhoods.
MetricResult open_packing_number(const Graph& g);
// Smallest set within distance 2 of every vertex.
MetricResult two_distance_domination_number(const Graph& g);

}  // namespace einject
