#pragma once

#include "sizefn/filtered_graph.hpp"

#include <map>

namespace sizefn {

/// Partition of the sublevel set at `level` into connected components.
/// Component ids are canonical: the smallest vertex id in the component.
struct ComponentLabeling {
    double level = 0.0;
    std::map<VertexId, VertexId> labels;
    std::size_t count = 0;
};

ComponentLabeling sublevel_components(const FilteredGraph& g, double t);

/// rank of H0 of the sublevel set at t: the component count.
std::size_t h0_rank(const FilteredGraph& g, double t);

/// rank of H0(X_v, X_u): components of the sublevel at v containing no
/// vertex of value <= u. Requires u < v.
std::size_t relative_h0_rank(const FilteredGraph& g, double v, double u);

/// Cycle rank (first Betti number) of the sublevel subgraph: E - V + C.
std::size_t h1_rank(const FilteredGraph& g, double t);

/// Component map induced by the inclusion of the sublevel at u into the
/// sublevel at v (u <= v), as canonical-id pairs.
std::map<VertexId, VertexId> induced_component_map(const FilteredGraph& g, double u, double v);

/// True iff every component of the sublevel at v contains a vertex of
/// value <= u. Requires u < v.
bool iota0_is_surjective(const FilteredGraph& g, double u, double v);

/// Sorted distinct vertex values.
std::vector<double> critical_values(const FilteredGraph& g);

/// Values across which the inclusion-induced map on components fails to be
/// a bijection (count change, merge, or birth).
std::vector<double> homological_0_critical_values(const FilteredGraph& g);

namespace detail {

// Index-based labeling used by the hot paths. comp_of[i] is the component
// ordinal of vertex index i, or -1 when the vertex is above the level.
struct IndexLabeling {
    std::vector<std::int32_t> comp_of;
    std::vector<double> comp_min;          // minimum value per component ordinal
    std::vector<std::uint32_t> comp_root;  // smallest vertex index per component ordinal
    std::size_t count = 0;
};

IndexLabeling label_sublevel(const FilteredGraph& g, double t);

}  // namespace detail

}  // namespace sizefn
