// Text formats for graphs and bipartitions. Edge lists look like
// "4;1-2,2-3,3-4" (1-based vertices), partitions like "A=1,3". graph6 strings
// are accepted and emitted for interchange; DOT is emitted for figures.

#pragma once

#include <string>
#include <string_view>

#include "bavn/graph.hpp"

namespace bavn {

// Accepts either the edge-list form or a graph6 string (auto-detected).
Graph parse_graph(std::string_view text);
std::string format_edge_list(const Graph& g);

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// part_a == 0 renders an uncolored graph.
std::string to_dot(const Graph& g, std::uint8_t part_a = 0, std::string_view name = "G");

Bipartition parse_partition(std::string_view text, int n);
std::string format_partition(const Bipartition& part);

}  // namespace bavn
