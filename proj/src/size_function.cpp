#include "sizefn/size_function.hpp"

#include "sizefn/topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace sizefn {

unsigned size_function_value(const FilteredGraph& g, double u, double v) {
    if (u >= v) throw std::invalid_argument("size function is defined on u < v");
    detail::IndexLabeling lab = detail::label_sublevel(g, v);
    unsigned count = 0;
    for (double m : lab.comp_min)
        if (m <= u) ++count;
    return count;
}

SizeFunctionGrid::SizeFunctionGrid(const FilteredGraph& g) : criticals_(critical_values(g)) {
    const std::size_t m = criticals_.size();
    table_.assign(m * m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        detail::IndexLabeling lab = detail::label_sublevel(g, criticals_[j]);
        std::vector<double> mins = lab.comp_min;
        std::sort(mins.begin(), mins.end());
        std::size_t lo = 0;
        for (std::size_t i = 0; i <= j; ++i) {
            while (lo < mins.size() && mins[lo] <= criticals_[i]) ++lo;
            cell(i, j) = static_cast<unsigned>(lo);
        }
    }
}

unsigned SizeFunctionGrid::at(std::size_t i, std::size_t j) const {
    assert(i <= j && j < criticals_.size());
    return table_[i * criticals_.size() + j];
}

int SizeFunctionGrid::cell_of(double t) const {
    auto it = std::upper_bound(criticals_.begin(), criticals_.end(), t);
    return static_cast<int>(it - criticals_.begin()) - 1;
}

int SizeFunctionGrid::cell_below(double t) const {
    int k = cell_of(t);
    if (k >= 0 && criticals_[static_cast<std::size_t>(k)] == t) return k - 1;
    return k;
}

unsigned SizeFunctionGrid::value_on_cells(int iu, int iv) const {
    assert(iu <= iv);
    if (iu < 0) return 0;
    return at(static_cast<std::size_t>(iu), static_cast<std::size_t>(iv));
}

unsigned SizeFunctionGrid::value_at(double u, double v) const {
    if (u >= v) throw std::invalid_argument("size function is defined on u < v");
    return value_on_cells(cell_of(u), cell_of(v));
}

long SizeFunctionGrid::multiplicity_at(double u, double v) const {
    if (u >= v) throw std::invalid_argument("multiplicity is defined on u < v");
    const int iu_plus = cell_of(u);
    const int iu_minus = cell_below(u);
    const int iv_plus = cell_of(v);
    const int iv_minus = cell_below(v);
    // u < v guarantees iu_plus <= iv_minus, so all four pairs are ordered.
    return static_cast<long>(value_on_cells(iu_plus, iv_minus)) -
           static_cast<long>(value_on_cells(iu_minus, iv_minus)) -
           static_cast<long>(value_on_cells(iu_plus, iv_plus)) +
           static_cast<long>(value_on_cells(iu_minus, iv_plus));
}

long SizeFunctionGrid::multiplicity_at_infinity(double k) const {
    if (criticals_.empty()) return 0;
    const int top = static_cast<int>(criticals_.size()) - 1;
    return static_cast<long>(value_on_cells(cell_of(k), top)) -
           static_cast<long>(value_on_cells(cell_below(k), top));
}

long multiplicity(const FilteredGraph& g, double u, double v) {
    return SizeFunctionGrid(g).multiplicity_at(u, v);
}

long multiplicity_at_infinity(const FilteredGraph& g, double k) {
    return SizeFunctionGrid(g).multiplicity_at_infinity(k);
}

CornerpointSet cornerpoints(const FilteredGraph& g) {
    CornerpointSet out;
    if (g.empty()) return out;
    SizeFunctionGrid grid(g);
    const std::size_t m = grid.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            long mu = grid.multiplicity_at(grid.criticals()[i], grid.criticals()[j]);
            if (mu > 0)
                out.proper.push_back(
                    {grid.criticals()[i], grid.criticals()[j], static_cast<unsigned>(mu)});
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        long mu = grid.multiplicity_at_infinity(grid.criticals()[k]);
        if (mu > 0)
            out.at_infinity.push_back({grid.criticals()[k],
                                       std::numeric_limits<double>::infinity(),
                                       static_cast<unsigned>(mu)});
    }
    return out;
}

unsigned reconstruct(const CornerpointSet& cs, double u, double v) {
    if (u >= v) throw std::invalid_argument("reconstruct is defined on u < v");
    unsigned total = 0;
    for (const Cornerpoint& p : cs.proper)
        if (p.u <= u && p.v > v) total += p.multiplicity;
    for (const Cornerpoint& p : cs.at_infinity)
        if (p.u <= u) total += p.multiplicity;
    return total;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double directed_sup(const std::vector<Cornerpoint>& from, const std::vector<Cornerpoint>& to,
                    bool infinite_class) {
    double sup = 0.0;
    for (const Cornerpoint& p : from) {
        double best = kInf;
        for (const Cornerpoint& q : to) {
            double d = infinite_class ? std::abs(p.u - q.u)
                                      : std::max(std::abs(p.u - q.u), std::abs(p.v - q.v));
            best = std::min(best, d);
        }
        sup = std::max(sup, best);
    }
    return sup;
}

double class_hausdorff(const std::vector<Cornerpoint>& a, const std::vector<Cornerpoint>& b,
                       bool infinite_class) {
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return kInf;
    return std::max(directed_sup(a, b, infinite_class), directed_sup(b, a, infinite_class));
}

// Kuhn augmenting-path maximum matching on an explicit adjacency list.
std::size_t max_matching(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_size) {
    std::vector<int> match_right(right_size, -1);
    std::vector<char> visited;
    std::size_t matched = 0;

    auto augment = [&](auto&& self, std::size_t left) -> bool {
        for (std::size_t r : adj[left]) {
            if (visited[r]) continue;
            visited[r] = 1;
            if (match_right[r] < 0 || self(self, static_cast<std::size_t>(match_right[r]))) {
                match_right[r] = static_cast<int>(left);
                return true;
            }
        }
        return false;
    };

    for (std::size_t l = 0; l < adj.size(); ++l) {
        visited.assign(right_size, 0);
        if (augment(augment, l)) ++matched;
    }
    return matched;
}

std::size_t matched_within(const std::vector<Cornerpoint>& a, const std::vector<Cornerpoint>& b,
                           double tol, bool infinite_class) {
    std::vector<std::vector<std::size_t>> adj(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            double d = infinite_class
                           ? std::abs(a[i].u - b[j].u)
                           : std::max(std::abs(a[i].u - b[j].u), std::abs(a[i].v - b[j].v));
            if (d <= tol) adj[i].push_back(j);
        }
    return max_matching(adj, b.size());
}

}  // namespace

double hausdorff_distance(const CornerpointSet& a, const CornerpointSet& b) {
    return std::max(class_hausdorff(a.proper, b.proper, false),
                    class_hausdorff(a.at_infinity, b.at_infinity, true));
}

CommonCornerpoints common_cornerpoints(const CornerpointSet& a, const CornerpointSet& b,
                                       double tol) {
    if (tol < 0) throw std::invalid_argument("tolerance must be non-negative");
    CommonCornerpoints out;
    out.count = matched_within(a.proper, b.proper, tol, false) +
                matched_within(a.at_infinity, b.at_infinity, tol, true);
    std::size_t denom = a.support_size();
    out.percentage = denom == 0 ? 0.0 : 100.0 * static_cast<double>(out.count) / denom;
    return out;
}

std::string SizeFunctionGrid::to_csv() const {
    std::string out = "u\\v";
    for (double c : criticals_) out += "," + format_real(c);
    out += "\n";
    for (std::size_t i = 0; i < criticals_.size(); ++i) {
        out += format_real(criticals_[i]);
        for (std::size_t j = 0; j < criticals_.size(); ++j) {
            out += ",";
            if (j >= i) out += std::to_string(at(i, j));
        }
        out += "\n";
    }
    return out;
}

std::string cornerpoints_to_json(const CornerpointSet& cs) {
    std::string out = "{\"proper\":[";
    for (std::size_t i = 0; i < cs.proper.size(); ++i) {
        if (i) out += ",";
        out += "{\"u\":" + format_real(cs.proper[i].u) + ",\"v\":" + format_real(cs.proper[i].v) +
               ",\"m\":" + std::to_string(cs.proper[i].multiplicity) + "}";
    }
    out += "],\"infinity\":[";
    for (std::size_t i = 0; i < cs.at_infinity.size(); ++i) {
        if (i) out += ",";
        out += "{\"u\":" + format_real(cs.at_infinity[i].u) +
               ",\"m\":" + std::to_string(cs.at_infinity[i].multiplicity) + "}";
    }
    out += "]}\n";
    return out;
}

CornerpointSet cornerpoints_from_json(const std::string& json) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad cornerpoint JSON: ") + e.what(), e.byte);
    }
    CornerpointSet out;
    for (const auto& p : doc.at("proper"))
        out.proper.push_back({p.at("u").get<double>(), p.at("v").get<double>(),
                              p.at("m").get<unsigned>()});
    for (const auto& p : doc.at("infinity"))
        out.at_infinity.push_back({p.at("u").get<double>(),
                                   std::numeric_limits<double>::infinity(),
                                   p.at("m").get<unsigned>()});
    return out;
}

}  // namespace sizefn
