#include "sizefn/mayer_vietoris.hpp"

#include "graph_lines.hpp"
#include "sizefn/exact_rank.hpp"
#include "sizefn/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sizefn {

namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::vector<VertexId> intersect(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Kernel computations of the Mayer-Vietoris map at a fixed level v, reusing
// one labeling of A_v, B_v and (AnB)_v for every u.
class AlphaKernels {
public:
    AlphaKernels(const Decomposition& d, double v) {
        detail::IndexLabeling la = detail::label_sublevel(d.a(), v);
        detail::IndexLabeling lb = detail::label_sublevel(d.b(), v);
        detail::IndexLabeling lab = detail::label_sublevel(d.ab(), v);
        n_a_ = la.count;
        n_b_ = lb.count;
        a_min_ = la.comp_min;
        b_min_ = lb.comp_min;
        cols_a_.reserve(lab.count);
        cols_b_.reserve(lab.count);
        cols_min_ = lab.comp_min;
        for (std::size_t c = 0; c < lab.count; ++c) {
            VertexId rep = d.ab().id_of(lab.comp_root[c]);
            cols_a_.push_back(static_cast<std::uint32_t>(la.comp_of[d.a().index_of(rep)]));
            cols_b_.push_back(static_cast<std::uint32_t>(lb.comp_of[d.b().index_of(rep)]));
        }
    }

    std::size_t ker_v_nerve() const {
        // Cycle rank of the nerve multigraph: one vertex per A_v / B_v
        // component, one edge per (AnB)_v component.
        std::vector<std::uint32_t> parent(n_a_ + n_b_);
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        std::vector<char> touched(n_a_ + n_b_, 0);
        for (std::size_t c = 0; c < cols_a_.size(); ++c) {
            std::uint32_t p = cols_a_[c];
            std::uint32_t q = static_cast<std::uint32_t>(n_a_) + cols_b_[c];
            touched[p] = touched[q] = 1;
            p = find(p);
            q = find(q);
            if (p != q) parent[std::max(p, q)] = std::min(p, q);
        }
        std::size_t vertices = 0, components = 0;
        for (std::uint32_t i = 0; i < touched.size(); ++i) {
            if (!touched[i]) continue;
            ++vertices;
            if (find(i) == i) ++components;
        }
        return cols_a_.size() + components - vertices;
    }

    std::size_t ker_v_elimination() const {
        std::vector<std::vector<long long>> m(n_a_ + n_b_,
                                              std::vector<long long>(cols_a_.size(), 0));
        for (std::size_t c = 0; c < cols_a_.size(); ++c) {
            m[cols_a_[c]][c] = 1;
            m[n_a_ + cols_b_[c]][c] = -1;
        }
        return cols_a_.size() - integer_matrix_rank(std::move(m));
    }

    // Relative map: domain spanned by (AnB)_v components not meeting the
    // sublevel at u; a side entry survives only if that side's component
    // does not meet its own sublevel at u.
    std::size_t ker_vu(double u) const {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < cols_min_.size(); ++c)
            if (cols_min_[c] > u) cols.push_back(c);
        if (cols.empty()) return 0;
        std::vector<std::vector<long long>> m(n_a_ + n_b_,
                                              std::vector<long long>(cols.size(), 0));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::size_t c = cols[k];
            if (a_min_[cols_a_[c]] > u) m[cols_a_[c]][k] = 1;
            if (b_min_[cols_b_[c]] > u) m[n_a_ + cols_b_[c]][k] = -1;
        }
        return cols.size() - integer_matrix_rank(std::move(m));
    }

    // Kernel of alpha restricted to the persistent classes of AnB (the
    // components of (AnB)_v meeting the sublevel at u).
    std::size_t persistent_kernel(double u) const {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < cols_min_.size(); ++c)
            if (cols_min_[c] <= u) cols.push_back(c);
        if (cols.empty()) return 0;
        std::vector<std::vector<long long>> m(n_a_ + n_b_,
                                              std::vector<long long>(cols.size(), 0));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            m[cols_a_[cols[k]]][k] = 1;
            m[n_a_ + cols_b_[cols[k]]][k] = -1;
        }
        return cols.size() - integer_matrix_rank(std::move(m));
    }

private:
    std::size_t n_a_ = 0, n_b_ = 0;
    std::vector<double> a_min_, b_min_;
    std::vector<std::uint32_t> cols_a_, cols_b_;
    std::vector<double> cols_min_;
};

int cell_of(const std::vector<double>& criticals, double t) {
    auto it = std::upper_bound(criticals.begin(), criticals.end(), t);
    return static_cast<int>(it - criticals.begin()) - 1;
}

int cell_below(const std::vector<double>& criticals, double t) {
    int k = cell_of(criticals, t);
    if (k >= 0 && criticals[static_cast<std::size_t>(k)] == t) return k - 1;
    return k;
}

}  // namespace

Decomposition::Decomposition(FilteredGraph x, std::vector<VertexId> a_ids,
                             std::vector<VertexId> b_ids)
    : x_(std::move(x)),
      a_ids_(sorted_unique(std::move(a_ids))),
      b_ids_(sorted_unique(std::move(b_ids))),
      a_(x_.induced_subgraph(a_ids_)),
      b_(x_.induced_subgraph(b_ids_)),
      ab_(x_.induced_subgraph(intersect(a_ids_, b_ids_))) {}

ValidationReport validate(const Decomposition& d) {
    ValidationReport report;
    std::vector<char> in_a(d.x().vertex_count(), 0), in_b(d.x().vertex_count(), 0);
    for (VertexId id : d.a_ids()) in_a[d.x().index_of(id)] = 1;
    for (VertexId id : d.b_ids()) in_b[d.x().index_of(id)] = 1;
    for (std::uint32_t i = 0; i < d.x().vertex_count(); ++i)
        if (!in_a[i] && !in_b[i]) report.uncovered_vertices.push_back(d.x().id_of(i));
    for (const auto& [p, q] : d.x().edges()) {
        bool covered = (in_a[p] && in_a[q]) || (in_b[p] && in_b[q]);
        if (!covered) report.uncovered_edges.emplace_back(d.x().id_of(p), d.x().id_of(q));
    }
    report.ok = report.uncovered_vertices.empty() && report.uncovered_edges.empty();
    return report;
}

std::size_t ker_alpha_v_rank(const Decomposition& d, double v) {
    return AlphaKernels(d, v).ker_v_nerve();
}

std::size_t ker_alpha_v_rank_elimination(const Decomposition& d, double v) {
    return AlphaKernels(d, v).ker_v_elimination();
}

std::size_t ker_alpha_vu_rank(const Decomposition& d, double v, double u) {
    if (u >= v) throw std::invalid_argument("ker_alpha_vu_rank requires u < v");
    return AlphaKernels(d, v).ker_vu(u);
}

KernelRankReport kernel_rank_report(const Decomposition& d, double v, std::optional<double> u,
                                    KernelMethod method) {
    KernelRankReport report;
    report.v = v;
    report.u = u;
    if (u) {
        report.method = KernelMethod::gaussian_elimination;
        report.rank_ker_alpha = ker_alpha_vu_rank(d, v, *u);
    } else {
        report.method = method;
        report.rank_ker_alpha = method == KernelMethod::nerve_cycle_rank
                                    ? ker_alpha_v_rank(d, v)
                                    : ker_alpha_v_rank_elimination(d, v);
    }
    return report;
}

MvRelation mv_relation(const Decomposition& d, double u, double v) {
    if (u >= v) throw std::invalid_argument("mv_relation requires u < v");
    MvRelation r;
    r.lhs = size_function_value(d.x(), u, v);
    r.l_a = size_function_value(d.a(), u, v);
    r.l_b = size_function_value(d.b(), u, v);
    r.l_ab = size_function_value(d.ab(), u, v);
    AlphaKernels kernels(d, v);
    r.ker_v = kernels.ker_v_nerve();
    r.ker_vu = kernels.ker_vu(u);
    r.rhs_basic = static_cast<long>(r.l_a) + static_cast<long>(r.l_b) - static_cast<long>(r.l_ab);
    r.correction = static_cast<long>(r.ker_v) - static_cast<long>(r.ker_vu);
    r.holds_basic = r.correction == 0;
    return r;
}

bool kernels_vanish_by_intersection(const Decomposition& d, double u, double v) {
    if (u >= v) throw std::invalid_argument("kernels_vanish_by_intersection requires u < v");
    if (d.ab().empty()) return true;
    SizeFunctionGrid grid(d.ab());
    const int m = static_cast<int>(grid.size());
    const int cu = grid.cell_of(u);
    const int cv = grid.cell_of(v);
    for (int j = std::max(cv, 0); j < m; ++j) {
        unsigned at_v = grid.value_on_cells(std::min(cv, j), j);
        unsigned at_u = cu < 0 ? 0 : grid.value_on_cells(std::min(cu, j), j);
        if (at_u != at_v || at_v > 1) return false;
    }
    return true;
}

bool kernels_vanish_by_acyclicity(const Decomposition& d, double u, double v) {
    if (u >= v) throw std::invalid_argument("kernels_vanish_by_acyclicity requires u < v");
    return h1_rank(d.x(), v) == 0 && h0_rank(d.x(), u) == size_function_value(d.x(), u, v);
}

bool persistent_mv_exact(const Decomposition& d, double u, double v) {
    if (u >= v) throw std::invalid_argument("persistent_mv_exact requires u < v");
    AlphaKernels kernels(d, v);
    bool alpha_injective = kernels.persistent_kernel(u) == 0;
    long lhs = size_function_value(d.x(), u, v);
    long rhs = static_cast<long>(size_function_value(d.a(), u, v)) +
               static_cast<long>(size_function_value(d.b(), u, v)) -
               static_cast<long>(size_function_value(d.ab(), u, v));
    return alpha_injective && lhs == rhs;
}

namespace {

struct Grids {
    SizeFunctionGrid x, a, b, ab;
    explicit Grids(const Decomposition& d) : x(d.x()), a(d.a()), b(d.b()), ab(d.ab()) {}
};

std::size_t kernel_on_cells(const Decomposition& d, const std::vector<double>& criticals,
                            int v_cell, int u_cell) {
    if (v_cell < 0 || v_cell == u_cell) return 0;
    double v_level = criticals[static_cast<std::size_t>(v_cell)];
    double u_level = u_cell < 0 ? criticals[0] - 1.0 : criticals[static_cast<std::size_t>(u_cell)];
    return AlphaKernels(d, v_level).ker_vu(u_level);
}

MultiplicityRelation relation_at(const Decomposition& d, const Grids& grids, double u, double v) {
    MultiplicityRelation r;
    r.mu_x = grids.x.multiplicity_at(u, v);
    r.mu_a = grids.a.multiplicity_at(u, v);
    r.mu_b = grids.b.multiplicity_at(u, v);
    r.mu_ab = grids.ab.multiplicity_at(u, v);
    const std::vector<double>& crit = grids.x.criticals();
    const int iu_plus = cell_of(crit, u);
    const int iu_minus = cell_below(crit, u);
    const int iv_plus = cell_of(crit, v);
    const int iv_minus = cell_below(crit, v);
    r.rhs_limit = static_cast<long>(kernel_on_cells(d, crit, iv_minus, iu_minus)) -
                  static_cast<long>(kernel_on_cells(d, crit, iv_minus, iu_plus)) +
                  static_cast<long>(kernel_on_cells(d, crit, iv_plus, iu_plus)) -
                  static_cast<long>(kernel_on_cells(d, crit, iv_plus, iu_minus));
    return r;
}

}  // namespace

MultiplicityRelation multiplicity_relation(const Decomposition& d, double u, double v) {
    if (u >= v) throw std::invalid_argument("multiplicity_relation requires u < v");
    Grids grids(d);
    return relation_at(d, grids, u, v);
}

bool ProvenanceReport::all_hold() const {
    for (const ProperProvenance& p : proper)
        if (!p.holds()) return false;
    for (const InfinityProvenance& p : at_infinity)
        if (!p.holds()) return false;
    return true;
}

ProvenanceReport provenance_report(const Decomposition& d) {
    ProvenanceReport report;
    CornerpointSet cps_x = cornerpoints(d.x());
    if (cps_x.proper.empty() && cps_x.at_infinity.empty()) return report;

    Grids grids(d);
    std::set<double> abscissas;
    for (const FilteredGraph* g : {&d.a(), &d.b(), &d.ab()}) {
        CornerpointSet cps = cornerpoints(*g);
        for (const Cornerpoint& p : cps.proper) abscissas.insert(p.u);
        for (const Cornerpoint& p : cps.at_infinity) abscissas.insert(p.u);
    }
    std::set<double> critical0;
    for (const FilteredGraph* g : {&d.a(), &d.b(), &d.ab()})
        for (double w : homological_0_critical_values(*g)) critical0.insert(w);

    for (const Cornerpoint& p : cps_x.proper) {
        ProperProvenance entry;
        entry.p = p;
        entry.abscissa_found = abscissas.count(p.u) > 0;
        entry.ordinate_is_critical = critical0.count(p.v) > 0;
        MultiplicityRelation mr = relation_at(d, grids, p.u, p.v);
        entry.kernel_condition = mr.rhs_limit <= 0;
        entry.in_a_or_b = mr.mu_a > 0 || mr.mu_b > 0;
        report.proper.push_back(entry);
    }
    for (const Cornerpoint& p : cps_x.at_infinity) {
        InfinityProvenance entry;
        entry.p = p;
        entry.at_infinity_in_a_or_b = grids.a.multiplicity_at_infinity(p.u) > 0 ||
                                      grids.b.multiplicity_at_infinity(p.u) > 0;
        report.at_infinity.push_back(entry);
    }
    return report;
}

Decomposition parse_decomposition_text(const std::string& text) {
    detail::GraphLines lines = detail::parse_graph_lines(text, true);
    if (lines.vertices.empty()) throw ParseError("decomposition file declares no vertices");
    FilteredGraph x;
    try {
        x = FilteredGraph(std::move(lines.vertices), lines.edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    std::vector<VertexId> a_ids, b_ids;
    for (const auto& [side, id] : lines.assignments) {
        if (!x.has_vertex(id))
            throw ParseError("assignment of undeclared vertex " + std::to_string(id));
        (side == 'A' ? a_ids : b_ids).push_back(id);
    }
    return Decomposition(std::move(x), std::move(a_ids), std::move(b_ids));
}

Decomposition load_decomposition_file(const std::string& path) {
    return parse_decomposition_text(read_file(path));
}

std::string decomposition_to_text(const Decomposition& d) {
    std::string out = graph_to_text(d.x());
    for (VertexId id : d.a_ids()) out += "A " + std::to_string(id) + "\n";
    for (VertexId id : d.b_ids()) out += "B " + std::to_string(id) + "\n";
    return out;
}

std::string mv_report_csv(const Decomposition& d) {
    std::string out = "u,v,l_x,l_a,l_b,l_ab,ker_v,ker_vu,holds_basic,identity\n";
    Grids grids(d);
    const std::vector<double>& crit = grids.x.criticals();
    for (std::size_t j = 0; j < crit.size(); ++j) {
        AlphaKernels kernels(d, crit[j]);
        std::size_t ker_v = kernels.ker_v_nerve();
        for (std::size_t i = 0; i < j; ++i) {
            unsigned l_x = grids.x.value_at(crit[i], crit[j]);
            unsigned l_a = grids.a.value_at(crit[i], crit[j]);
            unsigned l_b = grids.b.value_at(crit[i], crit[j]);
            unsigned l_ab = grids.ab.value_at(crit[i], crit[j]);
            std::size_t ker_vu = kernels.ker_vu(crit[i]);
            long rhs_basic = static_cast<long>(l_a) + static_cast<long>(l_b) -
                             static_cast<long>(l_ab);
            long correction = static_cast<long>(ker_v) - static_cast<long>(ker_vu);
            long identity = static_cast<long>(l_x) - rhs_basic - correction;
            out += format_real(crit[i]) + "," + format_real(crit[j]) + "," +
                   std::to_string(l_x) + "," + std::to_string(l_a) + "," + std::to_string(l_b) +
                   "," + std::to_string(l_ab) + "," + std::to_string(ker_v) + "," +
                   std::to_string(ker_vu) + "," + (correction == 0 ? "1" : "0") + "," +
                   std::to_string(identity) + "\n";
        }
    }
    return out;
}

}  // namespace sizefn
