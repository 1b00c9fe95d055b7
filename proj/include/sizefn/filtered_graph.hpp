#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sizefn {

using VertexId = std::uint32_t;

/// Finite vertex-weighted graph. The weight of a vertex is the value of the
/// measuring function there; a vertex belongs to the sublevel set at t iff
/// its value is <= t, and an edge belongs iff both endpoints do.
///
/// Immutable after construction. Vertices are kept sorted by id; internal
/// indices are positions in that order.
class FilteredGraph {
public:
    FilteredGraph() = default;
    FilteredGraph(std::vector<std::pair<VertexId, double>> vertices,
                  const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return ids_.empty(); }

    const std::vector<VertexId>& ids() const { return ids_; }
    const std::vector<double>& values() const { return values_; }
    /// Edges as index pairs with first < second.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
    const std::vector<std::vector<std::uint32_t>>& adjacency() const { return adj_; }

    VertexId id_of(std::uint32_t index) const { return ids_[index]; }
    double value_of(std::uint32_t index) const { return values_[index]; }
    bool has_vertex(VertexId id) const;
    std::uint32_t index_of(VertexId id) const;
    double value(VertexId id) const { return values_[index_of(id)]; }

    double min_value() const;
    double max_value() const;

    /// Subgraph induced by a set of vertex ids, with inherited values.
    /// Unknown ids are rejected; duplicates are collapsed.
    FilteredGraph induced_subgraph(std::vector<VertexId> subset) const;

private:
    std::vector<VertexId> ids_;
    std::vector<double> values_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, std::size_t offset = 0)
        : std::runtime_error(what), offset(offset) {}
    std::size_t offset;
};

/// Text format: one line `v <id> <value>` per vertex and `e <id> <id>` per
/// edge. Serialization is canonical (vertices by id, edges by sorted id
/// pair), so parse/serialize round-trips byte for byte.
FilteredGraph parse_graph_text(const std::string& text);
FilteredGraph load_graph_file(const std::string& path);
std::string graph_to_text(const FilteredGraph& g);

/// 12-significant-digit decimal formatting used by all text outputs.
std::string format_real(double x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sizefn
