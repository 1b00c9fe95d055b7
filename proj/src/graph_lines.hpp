#pragma once

#include "sizefn/filtered_graph.hpp"

#include <utility>
#include <vector>

namespace sizefn::detail {

// Parsed `v`/`e`/`A`/`B` lines, shared by the graph and decomposition readers.
struct GraphLines {
    std::vector<std::pair<VertexId, double>> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::pair<char, VertexId>> assignments;  // 'A' or 'B'
};

GraphLines parse_graph_lines(const std::string& text, bool allow_assignments);

}  // namespace sizefn::detail
