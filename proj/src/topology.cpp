#include "sizefn/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sizefn {

namespace detail {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // keep the smaller index as root so roots are canonical
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

IndexLabeling label_sublevel(const FilteredGraph& g, double t) {
    const std::size_t n = g.vertex_count();
    UnionFind uf(n);
    const auto& values = g.values();
    for (const auto& [a, b] : g.edges())
        if (values[a] <= t && values[b] <= t) uf.unite(a, b);

    IndexLabeling out;
    out.comp_of.assign(n, -1);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (values[i] > t) continue;
        std::uint32_t root = uf.find(i);
        if (out.comp_of[root] < 0) {
            out.comp_of[root] = static_cast<std::int32_t>(out.count++);
            out.comp_root.push_back(root);
            out.comp_min.push_back(values[root]);
        }
        std::int32_t c = out.comp_of[root];
        out.comp_of[i] = c;
        out.comp_min[static_cast<std::size_t>(c)] =
            std::min(out.comp_min[static_cast<std::size_t>(c)], values[i]);
    }
    return out;
}

}  // namespace detail

ComponentLabeling sublevel_components(const FilteredGraph& g, double t) {
    detail::IndexLabeling lab = detail::label_sublevel(g, t);
    ComponentLabeling out;
    out.level = t;
    out.count = lab.count;
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
        std::int32_t c = lab.comp_of[i];
        if (c < 0) continue;
        out.labels[g.id_of(i)] = g.id_of(lab.comp_root[static_cast<std::size_t>(c)]);
    }
    return out;
}

std::size_t h0_rank(const FilteredGraph& g, double t) {
    return detail::label_sublevel(g, t).count;
}

std::size_t relative_h0_rank(const FilteredGraph& g, double v, double u) {
    if (u >= v) throw std::invalid_argument("relative_h0_rank requires u < v");
    detail::IndexLabeling lab = detail::label_sublevel(g, v);
    std::size_t count = 0;
    for (double m : lab.comp_min)
        if (m > u) ++count;
    return count;
}

std::size_t h1_rank(const FilteredGraph& g, double t) {
    const auto& values = g.values();
    std::size_t e = 0;
    for (const auto& [a, b] : g.edges())
        if (values[a] <= t && values[b] <= t) ++e;
    std::size_t v = 0;
    for (double val : values)
        if (val <= t) ++v;
    std::size_t c = h0_rank(g, t);
    return e + c - v;
}

std::map<VertexId, VertexId> induced_component_map(const FilteredGraph& g, double u, double v) {
    if (u > v) throw std::invalid_argument("induced_component_map requires u <= v");
    detail::IndexLabeling at_u = detail::label_sublevel(g, u);
    detail::IndexLabeling at_v = detail::label_sublevel(g, v);
    std::map<VertexId, VertexId> out;
    for (std::size_t c = 0; c < at_u.count; ++c) {
        std::uint32_t rep = at_u.comp_root[c];
        std::int32_t target = at_v.comp_of[rep];
        out[g.id_of(rep)] = g.id_of(at_v.comp_root[static_cast<std::size_t>(target)]);
    }
    return out;
}

bool iota0_is_surjective(const FilteredGraph& g, double u, double v) {
    if (u >= v) throw std::invalid_argument("iota0_is_surjective requires u < v");
    detail::IndexLabeling lab = detail::label_sublevel(g, v);
    for (double m : lab.comp_min)
        if (m > u) return false;
    return true;
}

std::vector<double> critical_values(const FilteredGraph& g) {
    std::vector<double> vals = g.values();
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::vector<double> homological_0_critical_values(const FilteredGraph& g) {
    std::vector<double> criticals = critical_values(g);
    std::vector<double> out;
    for (std::size_t k = 0; k < criticals.size(); ++k) {
        double below = (k == 0) ? criticals[0] - 1.0 : (criticals[k - 1] + criticals[k]) / 2.0;
        double above =
            (k + 1 == criticals.size()) ? criticals[k] + 1.0 : (criticals[k] + criticals[k + 1]) / 2.0;
        detail::IndexLabeling lo = detail::label_sublevel(g, below);
        detail::IndexLabeling hi = detail::label_sublevel(g, above);
        bool bijective = lo.count == hi.count;
        if (bijective) {
            // injective: no two low components share a high component
            std::set<std::int32_t> hit;
            for (std::size_t c = 0; c < lo.count && bijective; ++c) {
                std::int32_t target = hi.comp_of[lo.comp_root[c]];
                bijective = hit.insert(target).second;
            }
            // counts match, so injectivity implies surjectivity
        }
        if (!bijective) out.push_back(criticals[k]);
    }
    return out;
}

}  // namespace sizefn
