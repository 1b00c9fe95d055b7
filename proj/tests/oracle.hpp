#pragma once

// Brute-force reference computations, kept deliberately independent of the
// library: components by BFS over freshly rebuilt adjacency, size-function
// values by definition, multiplicities by numeric four-corner differences
// with an explicit epsilon, matrix ranks by rational elimination.

#include "sizefn/filtered_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using sizefn::FilteredGraph;

// Components of the sublevel set at t, as lists of vertex indices.
inline std::vector<std::vector<std::uint32_t>> components(const FilteredGraph& g, double t) {
    const std::size_t n = g.vertex_count();
    std::vector<char> active(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) active[i] = g.value_of(i) <= t;
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& [a, b] : g.edges())
        if (active[a] && active[b]) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::uint32_t>> comps;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (!active[s] || seen[s]) continue;
        std::vector<std::uint32_t> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::uint32_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline std::size_t h0(const FilteredGraph& g, double t) { return components(g, t).size(); }

// Number of components of the sublevel at v containing a vertex of value <= u.
inline unsigned ell(const FilteredGraph& g, double u, double v) {
    unsigned count = 0;
    for (const auto& comp : components(g, v)) {
        bool meets = false;
        for (std::uint32_t i : comp)
            if (g.value_of(i) <= u) meets = true;
        if (meets) ++count;
    }
    return count;
}

// Small enough that every perturbed evaluation stays strictly inside the
// grid cell next to its coordinate.
inline double safe_epsilon(const FilteredGraph& g, double u, double v) {
    std::vector<double> vals = g.values();
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    double gap = 1.0;
    for (std::size_t i = 1; i < vals.size(); ++i) gap = std::min(gap, vals[i] - vals[i - 1]);
    return std::min(gap / 4.0, (v - u) / 4.0);
}

inline long multiplicity(const FilteredGraph& g, double u, double v) {
    double e = safe_epsilon(g, u, v);
    return static_cast<long>(ell(g, u + e, v - e)) - static_cast<long>(ell(g, u - e, v - e)) -
           static_cast<long>(ell(g, u + e, v + e)) + static_cast<long>(ell(g, u - e, v + e));
}

inline long multiplicity_at_infinity(const FilteredGraph& g, double k) {
    std::vector<double> vals = g.values();
    double top = *std::max_element(vals.begin(), vals.end()) + 1.0;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    double gap = 1.0;
    for (std::size_t i = 1; i < vals.size(); ++i) gap = std::min(gap, vals[i] - vals[i - 1]);
    double e = gap / 4.0;
    return static_cast<long>(ell(g, k + e, top)) - static_cast<long>(ell(g, k - e, top));
}

// Exact rationals over long long, reduced after every operation.
struct Rat {
    long long num = 0, den = 1;

    static long long gcd(long long a, long long b) {
        a = std::llabs(a);
        b = std::llabs(b);
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static Rat make(long long n, long long d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = gcd(n, d);
        if (g == 0) return {0, 1};
        return {n / g, d / g};
    }
    Rat operator*(const Rat& o) const { return make(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const { return make(num * o.den, den * o.num); }
    Rat operator-(const Rat& o) const { return make(num * o.den - o.num * den, den * o.den); }
    bool zero() const { return num == 0; }
};

// Rank over Q by plain Gauss-Jordan elimination on exact rationals.
inline std::size_t rational_rank(const std::vector<std::vector<long long>>& ints) {
    if (ints.empty()) return 0;
    const std::size_t rows = ints.size(), cols = ints[0].size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rat::make(ints[i][j], 1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].zero()) continue;
            Rat f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
